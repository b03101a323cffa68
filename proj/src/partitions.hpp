#pragma once

#include "errors.hpp"

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <vector>

namespace primrank {

// p_{<=t}(m). m is rational so that expressions like (j-k)/4 can be passed
// directly; anything that is not a nonnegative integer counts zero.
struct PartitionQuery {
  Rational m;
  std::uint64_t max_part = 0;
};

using Partition = std::vector<std::uint64_t>;

inline constexpr std::size_t kDefaultPartitionMemoLimit = 10000;
inline constexpr std::uint64_t kEnumerationGuard = 60;

// Memoised table of p_{<=t}(n) for n up to a configured bound. Sums beyond the
// bound are computed directly without touching the table. Calls are
// independent of each other; the table is guarded by a mutex.
class PartitionCounter {
 public:
  explicit PartitionCounter(std::size_t memo_limit = kDefaultPartitionMemoLimit);

  Integer count(const PartitionQuery& q) const;
  std::size_t memo_limit() const { return memo_limit_; }

 private:
  Integer lookup(std::uint64_t m, std::uint64_t t) const;

  std::size_t memo_limit_;
  mutable std::mutex mutex_;
  // rows_[t][n] = p_{<=t}(n), all rows share the same length.
  mutable std::vector<std::vector<Integer>> rows_;
};

Integer count_bounded_partitions(const PartitionQuery& q);
Integer count_bounded_partitions(const Rational& m, std::uint64_t max_part);

// Nonincreasing part sequences, largest first part first. Throws SizeLimitError
// for m above kEnumerationGuard.
std::vector<Partition> enumerate_bounded_partitions(std::uint64_t m, std::uint64_t max_part);

}  // namespace primrank
