#include "partitions.hpp"

#include <algorithm>
#include <string>

namespace primrank {

namespace {

// Rows beyond this part bound are not memoised.
constexpr std::uint64_t kMemoMaxPart = 64;

Integer count_direct(std::uint64_t m, std::uint64_t t) {
  std::vector<Integer> ways(m + 1, 0);
  ways[0] = 1;
  for (std::uint64_t part = 1; part <= t; ++part)
    for (std::uint64_t n = part; n <= m; ++n) ways[n] += ways[n - part];
  return ways[m];
}

void enumerate_into(std::uint64_t remaining, std::uint64_t max_part, Partition& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::uint64_t part = std::min(max_part, remaining); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

PartitionCounter::PartitionCounter(std::size_t memo_limit) : memo_limit_(memo_limit) {}

Integer PartitionCounter::lookup(std::uint64_t m, std::uint64_t t) const {
  std::lock_guard lock(mutex_);
  const std::size_t have_len = rows_.empty() ? 0 : rows_.front().size();
  if (t >= rows_.size() || m >= have_len) {
    const std::size_t len = std::max<std::size_t>(have_len, std::min<std::size_t>(
                                                                std::max<std::size_t>(2 * m, 16),
                                                                memo_limit_) +
                                                                1);
    const std::size_t nrows = std::max<std::size_t>(rows_.size(), t + 1);
    rows_.assign(nrows, std::vector<Integer>(len, 0));
    rows_[0][0] = 1;
    for (std::size_t s = 1; s < nrows; ++s) {
      for (std::size_t n = 0; n < len; ++n) {
        rows_[s][n] = rows_[s - 1][n];
        if (n >= s) rows_[s][n] += rows_[s][n - s];
      }
    }
  }
  return rows_[t][m];
}

Integer PartitionCounter::count(const PartitionQuery& q) const {
  // Callers may build m as an unreduced fraction such as 8/4.
  Rational m_reduced = q.m;
  m_reduced.canonicalize();
  if (m_reduced.get_den() != 1 || sgn(m_reduced) < 0) return 0;
  const Integer& num = m_reduced.get_num();
  if (!num.fits_ulong_p())
    throw SizeLimitError("partition sum " + num.get_str() + " does not fit a machine word");
  const std::uint64_t m = num.get_ui();
  // Parts larger than m can never be used.
  const std::uint64_t t = std::min(q.max_part, m);
  if (m > memo_limit_ || t > kMemoMaxPart) return count_direct(m, t);
  return lookup(m, t);
}

Integer count_bounded_partitions(const PartitionQuery& q) {
  static const PartitionCounter counter;
  return counter.count(q);
}

Integer count_bounded_partitions(const Rational& m, std::uint64_t max_part) {
  return count_bounded_partitions(PartitionQuery{m, max_part});
}

std::vector<Partition> enumerate_bounded_partitions(std::uint64_t m, std::uint64_t max_part) {
  if (m > kEnumerationGuard)
    throw SizeLimitError("enumeration of partitions of " + std::to_string(m) +
                         " exceeds the guard m <= " + std::to_string(kEnumerationGuard));
  std::vector<Partition> out;
  Partition prefix;
  enumerate_into(m, max_part, prefix, out);
  return out;
}

}  // namespace primrank
