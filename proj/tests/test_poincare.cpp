#include "doctest.h"

#include "poincare.hpp"

#include <functional>

using namespace primrank;

namespace {

// Count monomials in generators of the given degrees with total degree d,
// by explicit recursion over exponents.
long count_monomials(const std::vector<int>& degs, int d) {
  std::function<long(std::size_t, int)> go = [&](std::size_t i, int left) -> long {
    if (i == degs.size()) return left == 0 ? 1 : 0;
    long total = 0;
    for (int e = 0; e * degs[i] <= left; ++e) total += go(i + 1, left - e * degs[i]);
    return total;
  };
  return go(0, d);
}

}  // namespace

TEST_CASE("generator degrees") {
  CHECK(bso_generators(2).degrees == std::vector<int>{2});
  CHECK(bso_generators(3).degrees == std::vector<int>{4});
  CHECK(bso_generators(4).degrees == std::vector<int>{4, 4});
  CHECK(bso_generators(6).degrees == std::vector<int>{4, 8, 6});
  CHECK(bso_generators(7).degrees == std::vector<int>{4, 8, 12});
  CHECK_THROWS_AS(bso_generators(1), InvalidArgument);
}

TEST_CASE("series match monomial enumeration") {
  for (int n = 2; n <= 9; ++n) {
    const auto gens = bso_generators(n);
    const auto series = bso_series(n, 40);
    for (int d = 0; d <= 40; ++d) CHECK(series.rank(d) == count_monomials(gens.degrees, d));
  }
}

TEST_CASE("even case splits as Q[p_1..p_m] times {1, e}") {
  for (int m = 1; m <= 4; ++m) {
    const int n = 2 * m;
    std::vector<int> pont;
    for (int i = 1; i <= m; ++i) pont.push_back(4 * i);
    const auto base = series_from_generators({pont}, 60);
    const auto full = bso_series(n, 60);
    for (int d = 0; d <= 60; ++d) CHECK(full.rank(d) == base.rank(d) + base.rank(d - n));
  }
}

TEST_CASE("projective spaces") {
  const auto cp3 = projective_space_series(ProjectiveKind::complex, 3, 10);
  for (int d = 0; d <= 10; ++d) CHECK(cp3.rank(d) == ((d % 2 == 0 && d <= 6) ? 1 : 0));
  const auto hp_inf = projective_space_series(ProjectiveKind::quaternionic, std::nullopt, 20);
  for (int d = 0; d <= 20; ++d) CHECK(hp_inf.rank(d) == (d % 4 == 0 ? 1 : 0));
}

TEST_CASE("Thom shift and range errors") {
  const auto s = bso_series(3, 20);
  const auto t = thom_shift(s, 3);
  for (int d = 0; d <= 20; ++d) CHECK(t.rank(d) == s.rank(d - 3));
  CHECK(s.rank(-1) == 0);
  CHECK_THROWS_AS(s.rank(21), InvalidArgument);
  CHECK_THROWS(thom_shift(s, 21));
}

TEST_CASE("examples") {
  const auto b3 = bso_series(3, 12);
  CHECK(b3.rank(4) == 1);
  CHECK(b3.rank(8) == 1);
  CHECK(b3.rank(6) == 0);
  const auto b4 = bso_series(4, 12);
  CHECK(b4.rank(8) == 3);
}
