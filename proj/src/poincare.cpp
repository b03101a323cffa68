#include "poincare.hpp"

#include <string>
#include <utility>

namespace primrank {

PoincareSeries::PoincareSeries(int truncation_degree, std::vector<Integer> ranks)
    : truncation_degree_(truncation_degree), ranks_(std::move(ranks)) {
  if (truncation_degree_ < 0) throw InvalidArgument("truncation degree must be nonnegative");
  if (ranks_.size() != static_cast<std::size_t>(truncation_degree_) + 1)
    throw InvalidArgument("series needs exactly D+1 ranks");
  for (const auto& r : ranks_)
    if (sgn(r) < 0) throw InvalidArgument("series ranks must be nonnegative");
}

Integer PoincareSeries::rank(long d) const {
  if (d < 0) return 0;
  if (d > truncation_degree_)
    throw InvalidArgument("degree " + std::to_string(d) + " is past the truncation degree " +
                          std::to_string(truncation_degree_));
  return ranks_[static_cast<std::size_t>(d)];
}

PoincareSeries series_from_generators(const GeneratorSet& g, int D) {
  if (D < 0) throw InvalidArgument("truncation degree must be nonnegative");
  std::vector<Integer> ranks(static_cast<std::size_t>(D) + 1, 0);
  ranks[0] = 1;
  // Multiply by 1/(1 - x^d) one generator at a time.
  for (int d : g.degrees) {
    if (d < 1) throw InvalidArgument("generator degrees must be positive");
    for (int n = d; n <= D; ++n) ranks[n] += ranks[n - d];
  }
  return PoincareSeries(D, std::move(ranks));
}

GeneratorSet bso_generators(int n) {
  if (n < 2) throw InvalidArgument("BSO(n) needs n >= 2, got " + std::to_string(n));
  GeneratorSet g;
  const int m = n / 2;
  if (n % 2 == 0) {
    for (int i = 1; i < m; ++i) g.degrees.push_back(4 * i);
    g.degrees.push_back(n);
  } else {
    for (int i = 1; i <= m; ++i) g.degrees.push_back(4 * i);
  }
  return g;
}

PoincareSeries bso_series(int n, int D) { return series_from_generators(bso_generators(n), D); }

PoincareSeries thom_shift(const PoincareSeries& s, int shift) {
  const int D = s.truncation_degree();
  if (shift < 0 || shift > D)
    throw InvalidArgument("Thom shift must lie in [0, D], got " + std::to_string(shift));
  std::vector<Integer> ranks(static_cast<std::size_t>(D) + 1, 0);
  for (int d = shift; d <= D; ++d) ranks[d] = s.ranks()[d - shift];
  return PoincareSeries(D, std::move(ranks));
}

CellComplexSeries projective_space_series(ProjectiveKind kind, std::optional<int> m, int D) {
  if (D < 0) throw InvalidArgument("truncation degree must be nonnegative");
  if (m && *m < 0) throw InvalidArgument("projective space dimension must be nonnegative");
  const int cell = kind == ProjectiveKind::complex ? 2 : 4;
  std::vector<Integer> ranks(static_cast<std::size_t>(D) + 1, 0);
  for (int i = 0; i * cell <= D && (!m || i <= *m); ++i) ranks[i * cell] = 1;
  return CellComplexSeries(D, std::move(ranks));
}

}  // namespace primrank
