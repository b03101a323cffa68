#pragma once

#include "errors.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace primrank {

enum class Flavor { oriented, quaternionic, unoriented };

std::string_view to_string(Flavor f);

inline constexpr int kQuaternionicCodimension = 3;

struct RankQuery {
  Flavor flavor = Flavor::oriented;
  int k = 1;
  int r = 0;
  int j = 1;
};

// rk pi_j of the classifying space for 1 <= j <= max_degree.
class RankProfile {
 public:
  RankProfile(int max_degree, std::vector<Integer> ranks);

  int max_degree() const { return max_degree_; }
  const Integer& at(int j) const;
  const std::vector<Integer>& ranks() const { return ranks_; }

 private:
  int max_degree_;
  std::vector<Integer> ranks_;  // ranks_[j-1]
};

// Rational Betti numbers b_0..b_d of the target manifold.
struct BettiVector {
  int dimension = 0;
  std::vector<Integer> b;

  void validate() const;
};

Integer rank_pi_oriented(int k, int r, int j);
Integer rank_pi_quaternionic(int r, int j);
// Dispatches on flavor; the unoriented case throws UnsupportedFlavorError.
Integer rank_pi(const RankQuery& q);

RankProfile rank_profile(Flavor flavor, int k, int r, int max_degree);

// sum_{j >= 1} b_j * rk pi_j; the j = 0 Betti number does not contribute.
Integer cobordism_rank(const RankProfile& profile, const BettiVector& betti);

// The closed partition formula as printed, evaluated term by term. For odd k
// this can disagree with rank_pi_oriented and can even be negative.
Integer corollary_eval(int k, int r, int j);

struct ComparatorRow {
  int j;
  Integer derived;
  Integer printed;
  bool agree;
};

struct ComparatorReport {
  int k;
  int r;
  int max_degree;
  std::vector<ComparatorRow> rows;
  std::size_t disagreements = 0;
  std::optional<int> first_disagreement;
};

ComparatorReport corollary_compare(int k, int r, int max_degree);

}  // namespace primrank
