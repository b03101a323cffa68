#include "fin_ab_group.hpp"

#include <algorithm>

namespace primrank {

std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

unsigned valuation(const Integer& n, std::uint64_t prime) {
  if (n == 0) throw InvalidArgument("valuation of zero");
  Integer m = abs(n);
  unsigned v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), prime)) {
    m /= prime;
    ++v;
  }
  return v;
}

Integer odd_part(const Integer& n) {
  if (n == 0) return 0;
  Integer m = n;
  while (mpz_even_p(m.get_mpz_t())) m /= 2;
  return m;
}

FinAbGroup FinAbGroup::integers(unsigned rank) {
  FinAbGroup g;
  g.free_rank_ = rank;
  return g;
}

FinAbGroup FinAbGroup::cyclic(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("cyclic group order must be >= 1");
  return n == 1 ? FinAbGroup{} : from_orders(0, {n});
}

FinAbGroup FinAbGroup::from_orders(unsigned free_rank, const std::vector<std::uint64_t>& orders) {
  FinAbGroup g;
  g.free_rank_ = free_rank;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> keyed;  // (prime, prime power)
  for (std::uint64_t n : orders) {
    if (n < 2) throw InvalidArgument("torsion orders must be >= 2");
    for (auto [p, e] : factorize(n)) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < e; ++i) q *= p;
      keyed.emplace_back(p, q);
    }
  }
  std::sort(keyed.begin(), keyed.end());
  for (auto [p, q] : keyed) g.torsion_.push_back(q);
  return g;
}

Integer FinAbGroup::torsion_order() const {
  Integer n = 1;
  for (auto q : torsion_) n *= static_cast<unsigned long>(q);
  return n;
}

Integer FinAbGroup::order() const {
  if (!is_finite()) throw InvalidArgument("order of an infinite group " + to_string());
  return torsion_order();
}

std::map<std::uint64_t, unsigned> FinAbGroup::torsion_factorization() const {
  std::map<std::uint64_t, unsigned> out;
  for (auto q : torsion_)
    for (auto [p, e] : factorize(q)) out[p] += e;
  return out;
}

unsigned FinAbGroup::valuation(std::uint64_t prime) const {
  auto f = torsion_factorization();
  auto it = f.find(prime);
  return it == f.end() ? 0 : it->second;
}

std::vector<std::uint64_t> FinAbGroup::odd_torsion_primes() const {
  std::vector<std::uint64_t> out;
  for (auto [p, e] : torsion_factorization())
    if (p != 2) out.push_back(p);
  return out;
}

std::vector<Integer> FinAbGroup::invariant_factors() const {
  // Per prime, powers in descending order; the i-th largest invariant factor
  // collects the i-th largest power of every prime.
  std::map<std::uint64_t, std::vector<std::uint64_t>> by_prime;
  for (auto q : torsion_) by_prime[factorize(q).begin()->first].push_back(q);
  std::size_t count = 0;
  for (auto& [p, qs] : by_prime) {
    std::sort(qs.rbegin(), qs.rend());
    count = std::max(count, qs.size());
  }
  std::vector<Integer> factors(count, 1);
  for (auto& [p, qs] : by_prime)
    for (std::size_t i = 0; i < qs.size(); ++i) factors[i] *= static_cast<unsigned long>(qs[i]);
  std::reverse(factors.begin(), factors.end());
  return factors;
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (free_rank_ == 1) parts.emplace_back("Z");
  if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
  for (const auto& d : invariant_factors()) parts.push_back("Z_" + d.get_str());
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

}  // namespace primrank
