#pragma once

#include "errors.hpp"

#include <cstddef>
#include <exception>
#include <optional>
#include <vector>

namespace primrank {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

// Multiplies the whole matrix by the lcm of its denominators. Row and column
// spaces are unchanged.
IntegerMatrix clear_denominators(const RationalMatrix& m);

// 128-bit integer whose arithmetic throws Overflow instead of wrapping. Used
// to run the elimination kernels on small entries without GMP.
class CheckedInt128 {
 public:
  struct Overflow : std::exception {};

  CheckedInt128(long long v = 0) : v_(v) {}

  friend CheckedInt128 operator+(CheckedInt128 a, CheckedInt128 b) {
    CheckedInt128 r;
    if (__builtin_add_overflow(a.v_, b.v_, &r.v_)) throw Overflow{};
    return r;
  }
  friend CheckedInt128 operator-(CheckedInt128 a, CheckedInt128 b) {
    CheckedInt128 r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r.v_)) throw Overflow{};
    return r;
  }
  friend CheckedInt128 operator*(CheckedInt128 a, CheckedInt128 b) {
    CheckedInt128 r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r.v_)) throw Overflow{};
    return r;
  }
  friend CheckedInt128 operator/(CheckedInt128 a, CheckedInt128 b) {
    CheckedInt128 r;
    r.v_ = a.v_ / b.v_;
    return r;
  }
  friend CheckedInt128 operator%(CheckedInt128 a, CheckedInt128 b) {
    CheckedInt128 r;
    r.v_ = a.v_ % b.v_;
    return r;
  }
  CheckedInt128& operator+=(CheckedInt128 b) { return *this = *this + b; }
  CheckedInt128& operator-=(CheckedInt128 b) { return *this = *this - b; }
  friend bool operator==(CheckedInt128 a, CheckedInt128 b) { return a.v_ == b.v_; }
  friend bool operator!=(CheckedInt128 a, CheckedInt128 b) { return a.v_ != b.v_; }

  Integer to_integer() const;

 private:
  __int128 v_ = 0;
};

// Rank by Bareiss fraction-free elimination; every division is exact.
template <class T>
std::size_t bareiss_rank(Matrix<T> m) {
  std::size_t rank = 0;
  T prev = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == T(0)) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(rank, pivot);
    const T piv = m(rank, col);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j)
        m(i, j) = (m(i, j) * piv - m(i, col) * m(rank, j)) / prev;
      m(i, col) = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

// Solution of A x = b as x = scaled / det with det = +-det(A). nullopt when A
// is singular.
template <class T>
struct BareissSolution {
  T det;
  std::vector<T> scaled;
};

template <class T>
std::optional<BareissSolution<T>> bareiss_solve(Matrix<T> a, std::vector<T> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw InvalidArgument("solve needs a square system");
  T prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == T(0)) ++pivot;
    if (pivot == n) return std::nullopt;
    a.swap_rows(k, pivot);
    std::swap(b[k], b[pivot]);
    const T piv = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * piv - a(i, k) * a(k, j)) / prev;
      b[i] = (b[i] * piv - a(i, k) * b[k]) / prev;
      a(i, k) = 0;
    }
    prev = piv;
  }
  // prev is +-det(A); by Cramer the back substitution stays integral.
  BareissSolution<T> sol{prev, std::vector<T>(n)};
  for (std::size_t ii = n; ii-- > 0;) {
    T acc = prev * b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) acc -= a(ii, j) * sol.scaled[j];
    if (acc % a(ii, ii) != T(0))
      throw InternalError("fraction-free back substitution lost integrality");
    sol.scaled[ii] = acc / a(ii, ii);
  }
  return sol;
}

std::size_t exact_rank(const IntegerMatrix& m);
std::size_t exact_rank(const RationalMatrix& m);

using FractionFreeSolution = BareissSolution<Integer>;

std::optional<FractionFreeSolution> solve_fraction_free(IntegerMatrix a, std::vector<Integer> b);

// Basis of {v : m v = 0}, by reduced row echelon form over Q.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

// Exact solution of a nonsingular rational system; clears denominators of the
// augmented matrix and solves fraction-free. Throws InvalidArgument if singular.
std::vector<Rational> solve_rational(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace primrank
