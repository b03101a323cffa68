#pragma once

#include "errors.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace primrank {

// Finitely generated abelian group: Z^free_rank plus cyclic prime-power
// summands. Torsion is kept as prime powers so odd and 2-primary parts split
// without factoring at query time.
class FinAbGroup {
 public:
  FinAbGroup() = default;

  static FinAbGroup integers(unsigned rank = 1);
  // Z_n for n >= 1; Z_1 is the trivial group.
  static FinAbGroup cyclic(std::uint64_t n);
  // Direct sum of Z^free_rank and Z_{n_i}; each n_i >= 2 is split into prime powers.
  static FinAbGroup from_orders(unsigned free_rank, const std::vector<std::uint64_t>& orders);

  unsigned free_rank() const { return free_rank_; }
  // Prime-power summand orders, sorted by prime then power.
  const std::vector<std::uint64_t>& torsion() const { return torsion_; }

  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }

  // Throws InvalidArgument for infinite groups.
  Integer order() const;
  Integer torsion_order() const;
  // Exponent of `prime` in the torsion order.
  unsigned valuation(std::uint64_t prime) const;
  // prime -> exponent of the torsion order.
  std::map<std::uint64_t, unsigned> torsion_factorization() const;
  std::vector<std::uint64_t> odd_torsion_primes() const;

  // d_1 | d_2 | ... with every d_i > 1.
  std::vector<Integer> invariant_factors() const;

  // "0", "Z", "Z_24", "Z^2 + Z_2 + Z_24".
  std::string to_string() const;

  bool operator==(const FinAbGroup&) const = default;

 private:
  unsigned free_rank_ = 0;
  std::vector<std::uint64_t> torsion_;
};

// prime -> exponent, by trial division.
std::map<std::uint64_t, unsigned> factorize(std::uint64_t n);

// Exponent of `prime` in n (n != 0).
unsigned valuation(const Integer& n, std::uint64_t prime);
// n with every factor of 2 removed.
Integer odd_part(const Integer& n);

}  // namespace primrank
