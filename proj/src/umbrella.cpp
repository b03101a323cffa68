#include "umbrella.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <type_traits>

namespace primrank {

namespace {

Rational power(const Rational& x, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

// Lifted Jacobian scaled to integers together with its Gram matrix; used to
// project onto the normal space without forming rational Gram entries.
struct NormalProjector {
  IntegerMatrix jac;
  IntegerMatrix gram;

  explicit NormalProjector(const SourcePoint& p, NormalForm nf)
      : jac(clear_denominators(jacobian(p, true, nf))), gram(4, 4) {
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        Integer s = 0;
        for (std::size_t r = 0; r < jac.rows(); ++r) s += jac(r, a) * jac(r, b);
        gram(a, b) = s;
      }
  }

  // Coefficients c with J c the tangential part of x.
  std::vector<Rational> tangent_coefficients(const Vector8& x) const {
    std::vector<Rational> rhs(4, 0);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t r = 0; r < 8; ++r)
        if (x[r] != 0) rhs[a] += jac(r, a) * x[r];
    Integer scale = 1;
    for (const auto& v : rhs) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> b(4);
    for (std::size_t a = 0; a < 4; ++a) b[a] = rhs[a].get_num() * (scale / rhs[a].get_den());
    auto sol = solve_fraction_free(gram, b);
    if (!sol) throw InternalError("lifted Jacobian lost rank");
    std::vector<Rational> c(4);
    for (std::size_t a = 0; a < 4; ++a) {
      c[a] = Rational(sol->scaled[a], sol->det * scale);
      c[a].canonicalize();
    }
    return c;
  }

  Vector8 project(const Vector8& x) const {
    const auto c = tangent_coefficients(x);
    Vector8 out = x;
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t a = 0; a < 4; ++a)
        if (c[a] != 0 && jac(r, a) != 0) out[r] -= jac(r, a) * c[a];
    return out;
  }
};

Vector8 unit_vector(std::size_t axis) {
  Vector8 e;
  e.fill(0);
  e[axis] = 1;
  return e;
}

bool is_zero(const Vector8& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
}

Rational dot(const Vector8& a, const Vector8& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < 8; ++i) s += a[i] * b[i];
  return s;
}

// Van der Corput radical inverse of i in the given base, as an exact rational.
Rational radical_inverse(std::uint64_t i, unsigned base) {
  Rational out = 0;
  Rational place(1, base);
  while (i > 0) {
    out += place * static_cast<unsigned long>(i % base);
    place /= base;
    i /= base;
  }
  return out;
}

RationalMatrix transpose_times(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.cols(), b.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t r = 0; r < a.rows(); ++r)
        if (a(r, i) != 0 && b(r, j) != 0) out(i, j) += a(r, i) * b(r, j);
  return out;
}

std::vector<Rational> transpose_apply(const RationalMatrix& a, const Vector8& v) {
  std::vector<Rational> out(a.cols(), 0);
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t r = 0; r < a.rows(); ++r) out[i] += a(r, i) * v[r];
  return out;
}

Vector8 multiply(const RationalMatrix& a, const std::vector<Rational>& c) {
  Vector8 out;
  out.fill(0);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) out[r] += a(r, k) * c[k];
  return out;
}

}  // namespace

std::string SourcePoint::to_string() const {
  return "(" + x.get_str() + ", " + t[0].get_str() + ", " + t[1].get_str() + ", " +
         t[2].get_str() + ")";
}

TargetPoint7 umbrella_map(const SourcePoint& p, NormalForm nf) {
  return {p.t[0], p.t[1], p.t[2], p.t[0] * p.x, p.t[1] * p.x, p.t[2] * p.x,
          power(p.x, nf.z4_power)};
}

TargetPoint8 lift_map(const SourcePoint& p, NormalForm nf) {
  const auto u = umbrella_map(p, nf);
  TargetPoint8 out;
  std::copy(u.begin(), u.end(), out.begin());
  out[7] = p.x;
  return out;
}

SourcePoint invert_lift(const TargetPoint8& image) {
  return SourcePoint{image[7], {image[0], image[1], image[2]}};
}

RationalMatrix jacobian(const SourcePoint& p, bool lifted, NormalForm nf) {
  RationalMatrix j(lifted ? 8 : 7, 4);
  for (std::size_t m = 0; m < 3; ++m) {
    j(m, 1 + m) = 1;
    j(3 + m, 0) = p.t[m];
    j(3 + m, 1 + m) = p.x;
  }
  j(6, 0) = nf.z4_power * power(p.x, nf.z4_power - 1);
  if (lifted) j(7, 0) = 1;
  return j;
}

RationalMatrix jacobian_derivative(const SourcePoint& p, const std::array<Rational, 4>& direction,
                                   NormalForm nf) {
  RationalMatrix d(8, 4);
  for (std::size_t m = 0; m < 3; ++m) {
    d(3 + m, 0) = direction[1 + m];
    d(3 + m, 1 + m) = direction[0];
  }
  const int e = nf.z4_power;
  d(6, 0) = e >= 2 ? e * (e - 1) * power(p.x, e - 2) * direction[0] : Rational(0);
  return d;
}

int jacobian_rank(const SourcePoint& p, bool lifted, NormalForm nf) {
  return static_cast<int>(exact_rank(jacobian(p, lifted, nf)));
}

Vector8 section_s1(const SourcePoint& p, NormalForm nf) {
  return NormalProjector(p, nf).project(unit_vector(kVerticalAxis));
}

Vector8 section_s1_derivative(const SourcePoint& p, const std::array<Rational, 4>& direction,
                              NormalForm nf) {
  // s1 = e8 - J a with G a = J^T e8, G = J^T J. Differentiating,
  // ds1 = -P (dJ a) - J G^{-1} dJ^T s1, P the projection onto the normal space.
  const RationalMatrix jac = jacobian(p, true, nf);
  const RationalMatrix djac = jacobian_derivative(p, direction, nf);
  const RationalMatrix gram = transpose_times(jac, jac);
  const Vector8 e8 = unit_vector(kVerticalAxis);

  const auto a = solve_rational(gram, transpose_apply(jac, e8));
  const Vector8 s1 = [&] {
    Vector8 v = e8;
    const Vector8 ja = multiply(jac, a);
    for (std::size_t r = 0; r < 8; ++r) v[r] -= ja[r];
    return v;
  }();

  const Vector8 u = multiply(djac, a);
  const Vector8 u_tangent = multiply(jac, solve_rational(gram, transpose_apply(jac, u)));
  const Vector8 w = multiply(jac, solve_rational(gram, transpose_apply(djac, s1)));

  Vector8 out;
  for (std::size_t r = 0; r < 8; ++r) out[r] = u_tangent[r] - u[r] - w[r];
  return out;
}

Sigma2Check sigma2_check(NormalForm nf) {
  Sigma2Check out;
  out.point = SourcePoint{0, {0, 0, 0}};
  const auto kernel = nullspace(jacobian(out.point, false, nf));
  if (kernel.size() != 1)
    throw InternalError("expected a corank-1 singular point, kernel dimension " +
                        std::to_string(kernel.size()));
  std::copy(kernel.front().begin(), kernel.front().end(), out.kernel.begin());
  out.z2 = section_s1_derivative(out.point, out.kernel, nf);
  out.sigma2_empty = !is_zero(out.z2);

  RationalMatrix ds1(8, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    std::array<Rational, 4> dir{0, 0, 0, 0};
    dir[k] = 1;
    const auto col = section_s1_derivative(out.point, dir, nf);
    for (std::size_t r = 0; r < 8; ++r) ds1(r, k) = col[r];
  }
  out.ds1_rank = exact_rank(ds1);
  return out;
}

bool sigma2_empty_check(NormalForm nf) { return sigma2_check(nf).sigma2_empty; }

NormalFrame framing_frame(const SourcePoint& p, const std::array<std::size_t, 4>& seeds,
                          double tolerance) {
  if (p.is_origin())
    throw InvalidArgument("the framing is defined away from the origin, got " + p.to_string());
  const NormalProjector proj(p, NormalForm{});
  NormalFrame frame;
  frame.base = p;
  frame.v_raw = proj.project(unit_vector(kVerticalAxis));
  if (is_zero(frame.v_raw))
    throw FrameFailureError("section s1 vanishes at " + p.to_string());

  const RationalMatrix jac = jacobian(p, true);
  for (std::size_t k = 0; k < 4; ++k) {
    Rational s = 0;
    for (std::size_t r = 0; r < 8; ++r) s += jac(r, k) * frame.v_raw[r];
    if (s != 0) throw InternalError("s1 is not normal to the lift at " + p.to_string());
  }

  // Exact Gram-Schmidt on the projected seeds, then normalise in double.
  std::array<Vector8, 4> basis;
  for (std::size_t a = 0; a < 4; ++a) {
    if (seeds[a] >= 8) throw InvalidArgument("frame seed index out of range");
    Vector8 w = proj.project(unit_vector(seeds[a]));
    for (std::size_t b = 0; b < a; ++b) {
      const Rational f = dot(w, basis[b]) / dot(basis[b], basis[b]);
      for (std::size_t r = 0; r < 8; ++r) w[r] -= f * basis[b][r];
    }
    if (is_zero(w))
      throw FrameFailureError("seed projections are dependent at " + p.to_string() +
                              " (seed " + std::to_string(seeds[a]) + ")");
    basis[a] = w;
  }
  std::array<std::array<double, 8>, 4> unit{};
  for (std::size_t a = 0; a < 4; ++a) {
    const double norm = std::sqrt(dot(basis[a], basis[a]).get_d());
    for (std::size_t r = 0; r < 8; ++r) unit[a][r] = basis[a][r].get_d() / norm;
  }

  std::array<double, 8> v{};
  for (std::size_t r = 0; r < 8; ++r) v[r] = frame.v_raw[r].get_d();
  std::array<double, 4> q{};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t r = 0; r < 8; ++r) q[a] += v[r] * unit[a][r];

  // Left multiplication by 1, i, j, k on q = q0 + q1 i + q2 j + q3 k.
  const std::array<std::array<double, 4>, 4> images{{
      {q[0], q[1], q[2], q[3]},
      {-q[1], q[0], -q[3], q[2]},
      {-q[2], q[3], q[0], -q[1]},
      {-q[3], -q[2], q[1], q[0]},
  }};
  for (std::size_t f = 0; f < 4; ++f) {
    std::array<double, 8> vec{};
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t r = 0; r < 8; ++r) vec[r] += images[f][a] * unit[a][r];
    double norm = 0;
    for (double c : vec) norm += c * c;
    norm = std::sqrt(norm);
    for (double& c : vec) c /= norm;
    frame.vectors[f] = vec;
  }

  for (std::size_t f = 0; f < 4; ++f) {
    double n2 = 0;
    for (double c : frame.vectors[f]) n2 += c * c;
    frame.max_norm_defect = std::max(frame.max_norm_defect, std::abs(std::sqrt(n2) - 1));
    for (std::size_t g = f + 1; g < 4; ++g) {
      double ip = 0;
      for (std::size_t r = 0; r < 8; ++r) ip += frame.vectors[f][r] * frame.vectors[g][r];
      frame.max_abs_inner_product = std::max(frame.max_abs_inner_product, std::abs(ip));
    }
    for (std::size_t k = 0; k < 4; ++k) {
      double cn = 0;
      double ip = 0;
      for (std::size_t r = 0; r < 8; ++r) {
        const double c = jac(r, k).get_d();
        cn += c * c;
        ip += c * frame.vectors[f][r];
      }
      frame.max_tangent_component =
          std::max(frame.max_tangent_component, std::abs(ip) / std::sqrt(cn));
    }
  }
  if (frame.max_abs_inner_product > tolerance || frame.max_norm_defect > tolerance ||
      frame.max_tangent_component > tolerance)
    throw FrameFailureError("frame at " + p.to_string() + " is not orthonormal and normal within " +
                            std::to_string(tolerance));
  return frame;
}

Rational umbrella_norm_squared(const SourcePoint& p) {
  Rational s = 0;
  for (const auto& c : umbrella_map(p)) s += c * c;
  return s;
}

bool in_umbrella_disk(const SourcePoint& p) { return umbrella_norm_squared(p) <= 1; }

SourcePoint GridPoint::to_source() const {
  SourcePoint p{Rational(num[0], den), {Rational(num[1], den), Rational(num[2], den),
                                        Rational(num[3], den)}};
  p.x.canonicalize();
  for (auto& c : p.t) c.canonicalize();
  return p;
}

namespace {

template <class T>
GridPointScan scan_with(const GridPoint& g) {
  const T b(g.den);
  const T a0(g.num[0]);
  Matrix<T> jac(8, 4);
  for (std::size_t m = 0; m < 3; ++m) {
    jac(m, 1 + m) = b;
    jac(3 + m, 0) = T(g.num[1 + m]);
    jac(3 + m, 1 + m) = a0;
  }
  jac(6, 0) = T(2) * a0;
  jac(7, 0) = b;

  Matrix<T> unlifted(7, 4);
  for (std::size_t r = 0; r < 7; ++r)
    for (std::size_t k = 0; k < 4; ++k) unlifted(r, k) = jac(r, k);

  GridPointScan out;
  out.rank = static_cast<int>(bareiss_rank(unlifted));
  out.lifted_rank = static_cast<int>(bareiss_rank(jac));

  Matrix<T> gram(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      T s = 0;
      for (std::size_t r = 0; r < 8; ++r) s += jac(r, i) * jac(r, j);
      gram(i, j) = s;
    }
  std::vector<T> rhs(4);
  for (std::size_t k = 0; k < 4; ++k) rhs[k] = jac(kVerticalAxis, k);
  const auto sol = bareiss_solve(gram, rhs);
  if (!sol) throw InternalError("lifted Jacobian lost rank");

  // det * s1 = det * e8 - (bJ) y.
  std::array<T, 8> scaled;
  out.s1_zero = true;
  for (std::size_t r = 0; r < 8; ++r) {
    T v = r == kVerticalAxis ? sol->det : T(0);
    for (std::size_t k = 0; k < 4; ++k) v -= jac(r, k) * sol->scaled[k];
    scaled[r] = v;
    if (v != T(0)) out.s1_zero = false;
  }
  for (std::size_t r = 0; r < 8; ++r) {
    if constexpr (std::is_same_v<T, Integer>)
      out.s1[r] = Rational(scaled[r], sol->det);
    else
      out.s1[r] = Rational(scaled[r].to_integer(), sol->det.to_integer());
    out.s1[r].canonicalize();
  }
  return out;
}

}  // namespace

GridPointScan scan_grid_point(const GridPoint& g) {
  if (g.den < 1) throw InvalidArgument("grid denominator must be >= 1");
  try {
    return scan_with<CheckedInt128>(g);
  } catch (const CheckedInt128::Overflow&) {
    return scan_with<Integer>(g);
  }
}

std::vector<GridPoint> integer_grid(int height) {
  if (height < 1) throw InvalidArgument("grid height must be >= 1");
  std::vector<GridPoint> out;
  const long h = height;
  for (long b = 1; b <= h; ++b)
    for (long a0 = -h; a0 <= h; ++a0)
      for (long a1 = -h; a1 <= h; ++a1)
        for (long a2 = -h; a2 <= h; ++a2)
          for (long a3 = -h; a3 <= h; ++a3)
            if (std::gcd(std::gcd(std::gcd(a0, a1), std::gcd(a2, a3)), b) == 1)
              out.push_back(GridPoint{{a0, a1, a2, a3}, b});
  return out;
}

std::vector<SourcePoint> rational_grid(int height) {
  std::vector<SourcePoint> out;
  for (const auto& g : integer_grid(height)) out.push_back(g.to_source());
  return out;
}

std::vector<SourcePoint> sphere_sample(std::size_t count) {
  std::vector<SourcePoint> out;
  out.reserve(count);
  for (std::uint64_t i = 1; out.size() < count; ++i) {
    const std::array<Rational, 3> u{4 * radical_inverse(i, 2) - 2, 4 * radical_inverse(i, 3) - 2,
                                    4 * radical_inverse(i, 5) - 2};
    const Rational s = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
    SourcePoint p{(s - 1) / (s + 1), {2 * u[0] / (s + 1), 2 * u[1] / (s + 1), 2 * u[2] / (s + 1)}};
    out.push_back(std::move(p));
  }
  return out;
}

UmbrellaVerification verify_umbrella(const UmbrellaConfig& config) {
  UmbrellaVerification v;
  v.config = config;

  for (const auto& g : integer_grid(config.height)) {
    ++v.grid_points;
    const auto scan = scan_grid_point(g);
    const bool singular = scan.rank < 4;
    if (singular) v.singular_points.push_back(g.to_source());
    if (scan.lifted_rank != 4) ++v.lifted_rank_failures;
    if (scan.s1_zero) v.s1_zero_points.push_back(g.to_source());
    if (scan.s1_zero != singular) ++v.s1_rank_mismatches;
  }

  const SourcePoint origin{0, {0, 0, 0}};
  v.origin_rank = jacobian_rank(origin, false);
  v.origin_lifted_rank = jacobian_rank(origin, true);

  const auto sigma2 = sigma2_check();
  v.sigma2_empty = sigma2.sigma2_empty;
  v.sigma2_ds1_rank = sigma2.ds1_rank;
  v.negative_control_sigma2_empty = sigma2_empty_check(NormalForm{3});

  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  auto random_point = [&] {
    SourcePoint p{Rational(num(rng), den(rng)),
                  {Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                   Rational(num(rng), den(rng))}};
    p.x.canonicalize();
    for (auto& c : p.t) c.canonicalize();
    return p;
  };
  while (v.injectivity_pairs < config.injectivity_pairs) {
    const SourcePoint a = random_point();
    const SourcePoint b = random_point();
    if (a == b) continue;
    ++v.injectivity_pairs;
    const auto ia = lift_map(a);
    const auto ib = lift_map(b);
    if (ia == ib || invert_lift(ia) != a || invert_lift(ib) != b) ++v.injectivity_failures;
  }

  for (const auto& p : sphere_sample(config.sphere_samples)) {
    ++v.sphere_points;
    if (umbrella_norm_squared(p) != 1) ++v.sphere_off_boundary;
    try {
      const auto frame = framing_frame(p, kDefaultFrameSeeds, config.tolerance);
      v.worst_frame_inner_product =
          std::max(v.worst_frame_inner_product, frame.max_abs_inner_product);
    } catch (const Error& e) {
      v.frame_failures.push_back({p, e.what()});
    }
  }

  const bool locus_is_origin = v.singular_points.size() == 1 && v.singular_points[0].is_origin();
  const bool zeros_are_origin = v.s1_zero_points.size() == 1 && v.s1_zero_points[0].is_origin();
  v.passed = locus_is_origin && zeros_are_origin && v.lifted_rank_failures == 0 &&
             v.s1_rank_mismatches == 0 && v.origin_rank == 3 && v.origin_lifted_rank == 4 &&
             v.sigma2_empty && !v.negative_control_sigma2_empty && v.injectivity_failures == 0 &&
             v.sphere_off_boundary == 0 && v.frame_failures.empty();
  return v;
}

}  // namespace primrank
