#include "doctest.h"

#include "poincare.hpp"
#include "ranks.hpp"

using namespace primrank;

TEST_CASE("k = 1 agrees with the complex projective route") {
  for (int r = 0; r <= 10; ++r) {
    const auto cp = projective_space_series(ProjectiveKind::complex, r + 1, 64);
    for (int j = 1; j <= 50; ++j) {
      CHECK(rank_pi_oriented(1, r, j) == cp.rank(j + 1));
      CHECK(rank_pi_oriented(1, r, j) == ((j % 2 == 1 && j <= 2 * r + 1) ? 1 : 0));
    }
  }
}

TEST_CASE("quaternionic agrees with the quaternionic projective route") {
  for (int r = 0; r <= 10; ++r) {
    const auto hp = projective_space_series(ProjectiveKind::quaternionic, r + 1, 64);
    for (int j = 1; j <= 60; ++j) CHECK(rank_pi_quaternionic(r, j) == hp.rank(j + 1));
  }
}

TEST_CASE("odd k telescopes against BSO(k+1)") {
  for (int k : {1, 3, 5, 7}) {
    const auto b = bso_series(k + 1, 80);
    for (int r = 0; r <= 6; ++r)
      for (int j = 1; j <= 60; ++j) {
        const long shift = static_cast<long>(r + 2) * (k + 1);
        CHECK(rank_pi_oriented(k, r, j) + b.rank(j + 1 - shift) == b.rank(j - k));
      }
  }
}

TEST_CASE("even k is the sum of two shifted copies") {
  for (int k : {2, 4, 6}) {
    const auto b = bso_series(k + 1, 80);
    for (int r = 0; r <= 5; ++r)
      for (int j = 1; j <= 60; ++j) {
        const long shift = static_cast<long>(r + 2) * (k + 1);
        CHECK(rank_pi_oriented(k, r, j) == b.rank(j + 2 - shift) + b.rank(j - k));
      }
  }
}

TEST_CASE("closed formula for even k") {
  for (int k : {2, 4})
    for (int r = 0; r <= 5; ++r)
      for (int j = 1; j <= 60; ++j) CHECK(corollary_eval(k, r, j) == rank_pi_oriented(k, r, j));
}

TEST_CASE("comparator reports odd-k disagreements") {
  const auto a = corollary_compare(1, 0, 10);
  REQUIRE(a.first_disagreement.has_value());
  CHECK(*a.first_disagreement == 5);
  CHECK(a.rows[4].derived == 0);
  CHECK(a.rows[4].printed == 1);

  const auto b = corollary_compare(1, 2, 10);
  CHECK(b.disagreements == 3);
  CHECK(*b.first_disagreement == 5);
  CHECK(b.rows[4].derived == 1);
  CHECK(b.rows[4].printed == 0);
  CHECK(b.rows[6].printed == -1);

  const auto c = corollary_compare(2, 3, 60);
  CHECK(c.disagreements == 0);
  CHECK_FALSE(c.first_disagreement.has_value());
}

TEST_CASE("cobordism rank is linear in the Betti vector") {
  const auto profile = rank_profile(Flavor::oriented, 2, 2, 20);
  BettiVector a{20, std::vector<Integer>(21)};
  BettiVector b{20, std::vector<Integer>(21)};
  BettiVector sum{20, std::vector<Integer>(21)};
  for (int i = 0; i <= 20; ++i) {
    a.b[i] = (i * 7) % 5;
    b.b[i] = (i * 3) % 4;
    sum.b[i] = a.b[i] + b.b[i];
  }
  CHECK(cobordism_rank(profile, sum) == cobordism_rank(profile, a) + cobordism_rank(profile, b));
}

TEST_CASE("cobordism rank examples") {
  BettiVector s7{7, {1, 0, 0, 0, 0, 0, 0, 1}};
  CHECK(cobordism_rank(rank_profile(Flavor::quaternionic, 3, 2, 7), s7) == 1);
  BettiVector t2{2, {1, 2, 1}};
  CHECK(cobordism_rank(rank_profile(Flavor::oriented, 1, 1, 2), t2) == 2);
  BettiVector zero{4, std::vector<Integer>(5)};
  CHECK(cobordism_rank(rank_profile(Flavor::oriented, 2, 1, 4), zero) == 0);
  CHECK_THROWS_AS(cobordism_rank(rank_profile(Flavor::oriented, 2, 1, 3), zero),
                  DimensionMismatchError);
}

TEST_CASE("profiles and flavors") {
  const auto sp = rank_profile(Flavor::quaternionic, 3, 3, 16);
  for (int j = 1; j <= 16; ++j) CHECK(sp.at(j) == ((j == 3 || j == 7 || j == 11 || j == 15) ? 1 : 0));
  CHECK_THROWS_AS(rank_pi({Flavor::unoriented, 2, 1, 1}), UnsupportedFlavorError);
  CHECK_THROWS_AS(rank_pi({Flavor::quaternionic, 2, 1, 1}), InvalidArgument);
  CHECK_THROWS_AS(rank_pi_oriented(0, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(rank_pi_oriented(1, -1, 1), InvalidArgument);
  CHECK_THROWS_AS(sp.at(17), InvalidArgument);
  CHECK_THROWS_AS((BettiVector{2, {1, -1, 1}}.validate()), InvalidArgument);
}
