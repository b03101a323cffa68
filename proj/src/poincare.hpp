#pragma once

#include "errors.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace primrank {

inline constexpr int kDefaultTruncationDegree = 64;

// Degrees of free commutative polynomial generators.
struct GeneratorSet {
  std::vector<int> degrees;
};

// Graded ranks in degrees 0..truncation_degree.
class PoincareSeries {
 public:
  PoincareSeries() = default;
  PoincareSeries(int truncation_degree, std::vector<Integer> ranks);

  int truncation_degree() const { return truncation_degree_; }
  const std::vector<Integer>& ranks() const { return ranks_; }

  // Rank in degree d. Negative degrees are zero; degrees past the truncation
  // are an error since they were never computed.
  Integer rank(long d) const;

  bool operator==(const PoincareSeries&) const = default;

 private:
  int truncation_degree_ = 0;
  std::vector<Integer> ranks_{Integer(1)};
};

// Same representation; produced from a cell structure rather than a ring.
using CellComplexSeries = PoincareSeries;

enum class ProjectiveKind { complex, quaternionic };

PoincareSeries series_from_generators(const GeneratorSet& g, int D);

// Generator degrees of H^*(BSO(n); Q): Pontryagin classes in degrees 4i and,
// for even n, the Euler class in degree n.
GeneratorSet bso_generators(int n);
PoincareSeries bso_series(int n, int D);

// Thom isomorphism on ranks: shift every degree up by `shift`.
PoincareSeries thom_shift(const PoincareSeries& s, int shift);

// m = nullopt means the infinite projective space.
CellComplexSeries projective_space_series(ProjectiveKind kind, std::optional<int> m, int D);

}  // namespace primrank
