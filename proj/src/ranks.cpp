#include "ranks.hpp"

#include "partitions.hpp"
#include "poincare.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace primrank {

namespace {

void check_kr(int k, int r) {
  if (k < 1) throw InvalidArgument("codimension k must be >= 1, got " + std::to_string(k));
  if (r < 0) throw InvalidArgument("singularity bound r must be >= 0, got " + std::to_string(r));
}

// rk H_d(BSO(n); Q), zero in negative degrees.
Integer bso_rank(int n, long d) {
  if (d < 0) return 0;
  return bso_series(n, static_cast<int>(d)).rank(d);
}

Integer p_bounded(long numerator, long max_part) {
  Rational m(numerator, 4);
  m.canonicalize();
  return count_bounded_partitions(m, static_cast<std::uint64_t>(max_part));
}

}  // namespace

std::string_view to_string(Flavor f) {
  switch (f) {
    case Flavor::oriented: return "oriented";
    case Flavor::quaternionic: return "quaternionic";
    case Flavor::unoriented: return "unoriented";
  }
  return "?";
}

RankProfile::RankProfile(int max_degree, std::vector<Integer> ranks)
    : max_degree_(max_degree), ranks_(std::move(ranks)) {
  if (max_degree_ < 1) throw InvalidArgument("profile max degree must be >= 1");
  if (ranks_.size() != static_cast<std::size_t>(max_degree_))
    throw InvalidArgument("profile needs one rank per degree 1..J");
}

const Integer& RankProfile::at(int j) const {
  if (j < 1 || j > max_degree_)
    throw InvalidArgument("degree " + std::to_string(j) + " outside profile range 1.." +
                          std::to_string(max_degree_));
  return ranks_[static_cast<std::size_t>(j - 1)];
}

void BettiVector::validate() const {
  if (dimension < 0) throw InvalidArgument("Betti dimension must be nonnegative");
  if (b.size() != static_cast<std::size_t>(dimension) + 1)
    throw InvalidArgument("Betti vector must list b_0..b_d (" + std::to_string(dimension + 1) +
                          " entries), got " + std::to_string(b.size()));
  for (const auto& x : b)
    if (sgn(x) < 0) throw InvalidArgument("Betti numbers must be nonnegative");
}

Integer rank_pi_oriented(int k, int r, int j) {
  check_kr(k, r);
  if (j < 1) throw InvalidArgument("degree j must be >= 1");
  const int n = k + 1;
  const long top = static_cast<long>(r + 2) * (k + 1);
  if (k % 2 == 1) {
    Integer total = bso_rank(n, j - k);
    Integer removed = bso_rank(n, j + 1 - top);
    // Multiplication by e^{r+1} is injective, so the difference is a rank.
    if (removed > total)
      throw InternalError("negative rank for k=" + std::to_string(k) + " r=" +
                          std::to_string(r) + " j=" + std::to_string(j));
    return total - removed;
  }
  return bso_rank(n, j + 2 - top) + bso_rank(n, j - k);
}

Integer rank_pi_quaternionic(int r, int j) {
  if (r < 0) throw InvalidArgument("singularity bound r must be >= 0");
  if (j < 1) throw InvalidArgument("degree j must be >= 1");
  return (j % 4 == 3 && j <= 4 * r + 3) ? 1 : 0;
}

Integer rank_pi(const RankQuery& q) {
  switch (q.flavor) {
    case Flavor::oriented: return rank_pi_oriented(q.k, q.r, q.j);
    case Flavor::quaternionic:
      if (q.k != kQuaternionicCodimension)
        throw InvalidArgument("quaternionic prim maps have codimension 3");
      return rank_pi_quaternionic(q.r, q.j);
    case Flavor::unoriented: break;
  }
  throw UnsupportedFlavorError(
      "unoriented flavor: rank formula not specified; use oriented (so) or quaternionic (sp)");
}

RankProfile rank_profile(Flavor flavor, int k, int r, int max_degree) {
  if (max_degree < 1) throw InvalidArgument("max degree must be >= 1");
  std::vector<Integer> ranks;
  ranks.reserve(static_cast<std::size_t>(max_degree));
  for (int j = 1; j <= max_degree; ++j) ranks.push_back(rank_pi(RankQuery{flavor, k, r, j}));
  return RankProfile(max_degree, std::move(ranks));
}

Integer cobordism_rank(const RankProfile& profile, const BettiVector& betti) {
  betti.validate();
  if (betti.dimension > profile.max_degree())
    throw DimensionMismatchError("Betti vector has dimension " + std::to_string(betti.dimension) +
                                 " but the rank profile stops at degree " +
                                 std::to_string(profile.max_degree()));
  Integer total = 0;
  for (int j = 1; j <= betti.dimension; ++j) total += betti.b[j] * profile.at(j);
  return total;
}

Integer corollary_eval(int k, int r, int j) {
  check_kr(k, r);
  const long top = static_cast<long>(r + 2) * (k + 1);
  if (k % 2 == 1) {
    const long t = (k - 1) / 2;
    return p_bounded(j - k, t) + p_bounded(j - 2L * k - 1, t) - p_bounded(j + 1 - top, t) +
           p_bounded(j - k - top, t);
  }
  const long t = k / 2;
  return p_bounded(j - k, t) + p_bounded(j + 2 - top, t);
}

ComparatorReport corollary_compare(int k, int r, int max_degree) {
  if (max_degree < 1) throw InvalidArgument("max degree must be >= 1");
  ComparatorReport report{k, r, max_degree, {}, 0, std::nullopt};
  for (int j = 1; j <= max_degree; ++j) {
    ComparatorRow row{j, rank_pi_oriented(k, r, j), corollary_eval(k, r, j), false};
    row.agree = row.derived == row.printed;
    if (!row.agree) {
      ++report.disagreements;
      if (!report.first_disagreement) report.first_disagreement = j;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace primrank
