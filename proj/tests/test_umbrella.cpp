#include "doctest.h"

#include "umbrella.hpp"

#include <random>
#include <vector>

using namespace primrank;

namespace {

// Cofactor expansion; independent of the elimination code.
Rational det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return total;
}

// Largest s such that some s x s minor is nonzero.
int minor_rank(const RationalMatrix& a) {
  for (int s = static_cast<int>(std::min(a.rows(), a.cols())); s > 0; --s) {
    std::vector<std::size_t> rows(s), cols(s);
    std::vector<bool> pick_r(a.rows(), false), pick_c(a.cols(), false);
    std::fill(pick_r.begin(), pick_r.begin() + s, true);
    do {
      std::fill(pick_c.begin(), pick_c.end(), false);
      std::fill(pick_c.begin(), pick_c.begin() + s, true);
      do {
        std::vector<std::vector<Rational>> m;
        for (std::size_t i = 0; i < a.rows(); ++i) {
          if (!pick_r[i]) continue;
          std::vector<Rational> row;
          for (std::size_t j = 0; j < a.cols(); ++j)
            if (pick_c[j]) row.push_back(a(i, j));
          m.push_back(row);
        }
        if (det(m) != 0) return s;
      } while (std::prev_permutation(pick_c.begin(), pick_c.end()));
    } while (std::prev_permutation(pick_r.begin(), pick_r.end()));
  }
  return 0;
}

SourcePoint pt(long x, long t1, long t2, long t3, long den = 1) {
  SourcePoint p{Rational(x, den), {Rational(t1, den), Rational(t2, den), Rational(t3, den)}};
  p.x.canonicalize();
  for (auto& c : p.t) c.canonicalize();
  return p;
}

Rational dot(const Vector8& a, const Vector8& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < 8; ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_CASE("map and lift") {
  const auto p = pt(2, 1, -1, 3);
  const auto u = umbrella_map(p);
  CHECK(u[0] == 1);
  CHECK(u[3] == 2);
  CHECK(u[5] == 6);
  CHECK(u[6] == 4);
  const auto l = lift_map(p);
  CHECK(l[kVerticalAxis] == 2);
  CHECK(invert_lift(l) == p);
  CHECK(umbrella_map(p, NormalForm{3})[6] == 8);
}

TEST_CASE("elimination rank matches minors") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-4, 4);
  for (int i = 0; i < 60; ++i) {
    const auto p = pt(num(rng), num(rng), num(rng), num(rng), 1 + (i % 3));
    CHECK(jacobian_rank(p, false) == minor_rank(jacobian(p, false)));
    CHECK(jacobian_rank(p, true) == minor_rank(jacobian(p, true)));
  }
  CHECK(minor_rank(jacobian(pt(0, 0, 0, 0), false)) == 3);
  CHECK(minor_rank(jacobian(pt(0, 0, 0, 0), true)) == 4);
}

TEST_CASE("grid scan agrees with the rational path") {
  const auto grid = integer_grid(2);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < grid.size(); i += 17, ++checked) {
    const auto& g = grid[i];
    const auto p = g.to_source();
    const auto scan = scan_grid_point(g);
    CHECK(scan.rank == jacobian_rank(p, false));
    CHECK(scan.lifted_rank == jacobian_rank(p, true));
    CHECK(scan.s1 == section_s1(p));
  }
  CHECK(checked > 10);
  CHECK(rational_grid(2).size() == integer_grid(2).size());
}

TEST_CASE("section s1 is normal and vanishes only at the origin") {
  const auto origin = section_s1(pt(0, 0, 0, 0));
  for (const auto& c : origin) CHECK(c == 0);
  for (const auto& p : {pt(1, 0, 0, 0), pt(1, 2, -1, 1, 3), pt(0, 1, 0, 0)}) {
    const auto s = section_s1(p);
    const auto j = jacobian(p, true);
    for (std::size_t c = 0; c < 4; ++c) {
      Vector8 col;
      for (std::size_t r = 0; r < 8; ++r) col[r] = j(r, c);
      CHECK(dot(col, s) == 0);
    }
    CHECK(dot(s, s) != 0);
  }
}

TEST_CASE("s1 derivative matches a difference quotient") {
  const auto p = pt(1, 1, 2, -1, 2);
  const std::array<Rational, 4> dir{Rational(1), Rational(-1), Rational(0), Rational(2)};
  const auto exact = section_s1_derivative(p, dir);
  const Rational h(1, 1000000);
  SourcePoint q = p;
  q.x += h * dir[0];
  for (int i = 0; i < 3; ++i) q.t[i] += h * dir[i + 1];
  const auto a = section_s1(p);
  const auto b = section_s1(q);
  for (std::size_t i = 0; i < 8; ++i) {
    const Rational quotient = (b[i] - a[i]) / h;
    CHECK(Rational(abs(quotient - exact[i])).get_d() < 1e-4);
  }
}

TEST_CASE("sigma2 and its negative control") {
  const auto check = sigma2_check();
  CHECK(check.sigma2_empty);
  CHECK(check.ds1_rank == 4);
  CHECK(check.z2[6] == -2);
  CHECK(sigma2_empty_check());
  CHECK_FALSE(sigma2_empty_check(NormalForm{3}));
}

TEST_CASE("framing") {
  const auto frame = framing_frame(pt(1, 0, 0, 0));
  CHECK(frame.v_raw[6] == Rational(-2, 5));
  CHECK(frame.v_raw[7] == Rational(4, 5));
  CHECK(frame.max_abs_inner_product < 1e-12);
  CHECK(frame.max_norm_defect < 1e-12);
  CHECK(frame.max_tangent_component < 1e-12);
  CHECK_THROWS_AS(framing_frame(pt(0, 0, 0, 0)), InvalidArgument);
  CHECK_THROWS_AS(framing_frame(pt(1, 0, 0, 0), {4, 5, 6, 7}), FrameFailureError);
}

TEST_CASE("sphere sample lies on the boundary") {
  const auto pts = sphere_sample(50);
  CHECK(pts.size() == 50);
  for (const auto& p : pts) CHECK(umbrella_norm_squared(p) == 1);
  CHECK(in_umbrella_disk(pt(1, 1, 1, 1, 4)));
  CHECK_FALSE(in_umbrella_disk(pt(1, 1, 1, 1)));
}

TEST_CASE("small verification run") {
  UmbrellaConfig cfg;
  cfg.height = 2;
  cfg.sphere_samples = 20;
  cfg.injectivity_pairs = 200;
  const auto v = verify_umbrella(cfg);
  CHECK(v.passed);
  REQUIRE(v.singular_points.size() == 1);
  CHECK(v.singular_points.front().is_origin());
  CHECK(v.frame_failures.empty());
}
