#include "doctest.h"

#include "partitions.hpp"

#include <algorithm>
#include <numeric>

using namespace primrank;

namespace {

// Independent oracle: count multisets of parts in [1, t] summing to m by brute
// recursion over the smallest admissible part.
long brute(long m, long t, long min_part = 1) {
  if (m == 0) return 1;
  long total = 0;
  for (long part = min_part; part <= std::min(t, m); ++part) total += brute(m - part, t, part);
  return total;
}

}  // namespace

TEST_CASE("bounded partitions agree with brute force") {
  for (long m = 0; m <= 25; ++m)
    for (long t = 0; t <= 10; ++t)
      CHECK(count_bounded_partitions(Rational(m), t) == brute(m, t));
}

TEST_CASE("enumeration yields distinct valid partitions") {
  for (std::uint64_t m = 0; m <= 14; ++m) {
    for (std::uint64_t t = 0; t <= 6; ++t) {
      const auto parts = enumerate_bounded_partitions(m, t);
      CHECK(parts.size() == count_bounded_partitions(Rational(m), t).get_ui());
      for (const auto& p : parts) {
        CHECK(std::accumulate(p.begin(), p.end(), std::uint64_t{0}) == m);
        CHECK(std::is_sorted(p.rbegin(), p.rend()));
        for (auto x : p) CHECK((x >= 1 && x <= t));
      }
      auto sorted = parts;
      std::sort(sorted.begin(), sorted.end());
      CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
  }
  const auto five = enumerate_bounded_partitions(5, 2);
  REQUIRE(five.size() == 3);
  CHECK(five.front() == Partition{2, 2, 1});
  CHECK(five.back() == Partition{1, 1, 1, 1, 1});
}

TEST_CASE("recurrence p(m,t) = p(m,t-1) + p(m-t,t)") {
  for (long m = 0; m <= 200; m += 7)
    for (long t = 1; t <= 30; ++t) {
      const Integer lhs = count_bounded_partitions(Rational(m), t);
      const Integer rhs = count_bounded_partitions(Rational(m), t - 1) +
                          count_bounded_partitions(Rational(m - t), t);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("monotone in the part bound") {
  for (long m = 0; m <= 60; ++m)
    for (long t = 1; t <= 20; ++t)
      CHECK(count_bounded_partitions(Rational(m), t) >= count_bounded_partitions(Rational(m), t - 1));
}

TEST_CASE("examples") {
  CHECK(count_bounded_partitions(Rational(0), 0) == 1);
  CHECK(count_bounded_partitions(Rational(5), 0) == 0);
  CHECK(count_bounded_partitions(Rational(4), 2) == 3);
  CHECK(count_bounded_partitions(Rational(100), 100) == Integer("190569292"));
  CHECK(count_bounded_partitions(Rational(-3), 4) == 0);
  CHECK(count_bounded_partitions(Rational(3, 4), 4) == 0);
}

TEST_CASE("unreduced fractions are read by value") {
  Rational eight_quarters;
  mpq_set_si(eight_quarters.get_mpq_t(), 8, 4);  // deliberately not canonical
  CHECK(count_bounded_partitions(eight_quarters, 2) == 2);
}

TEST_CASE("memo and direct paths agree") {
  PartitionCounter small(10);
  PartitionCounter large;
  for (long m : {0L, 9L, 11L, 57L, 300L})
    for (std::uint64_t t : {1ULL, 3ULL, 8ULL, 70ULL})
      CHECK(small.count({Rational(m), t}) == large.count({Rational(m), t}));
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(enumerate_bounded_partitions(kEnumerationGuard + 1, 3), SizeLimitError);
}
