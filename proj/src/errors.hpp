#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace primrank {

using Integer = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Enumeration or table bound exceeded.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class UnsupportedFlavorError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

// Stable stem outside the built-in table and not supplied by an extension.
class StemUnknownError : public Error {
 public:
  using Error::Error;
};

class FrameFailureError : public Error {
 public:
  using Error::Error;
};

// Malformed or unreadable input file.
class InputError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace primrank
