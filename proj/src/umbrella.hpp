#pragma once

#include "errors.hpp"
#include "exact_matrix.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace primrank {

// Source point (x, t1, t2, t3).
struct SourcePoint {
  Rational x;
  std::array<Rational, 3> t;

  bool is_origin() const { return x == 0 && t[0] == 0 && t[1] == 0 && t[2] == 0; }
  bool operator==(const SourcePoint&) const = default;
  std::string to_string() const;
};

// (y1, y2, y3, z1, z2, z3, z4) and the lift with z5 appended.
using TargetPoint7 = std::array<Rational, 7>;
using TargetPoint8 = std::array<Rational, 8>;
using Vector8 = std::array<Rational, 8>;

inline constexpr std::size_t kVerticalAxis = 7;  // z5

// y_m = t_m, z_m = t_m x, z4 = x^z4_power. Power 2 is the Whitney umbrella;
// power 3 is the degenerate germ used as a negative control.
struct NormalForm {
  int z4_power = 2;
};

TargetPoint7 umbrella_map(const SourcePoint& p, NormalForm nf = {});
TargetPoint8 lift_map(const SourcePoint& p, NormalForm nf = {});
// Inverse of the lift on its image: x = z5, t = y.
SourcePoint invert_lift(const TargetPoint8& image);

// 7x4 (or 8x4 lifted) Jacobian, columns d/dx, d/dt1..d/dt3.
RationalMatrix jacobian(const SourcePoint& p, bool lifted, NormalForm nf = {});
// Derivative of the lifted Jacobian along a source direction (dx, dt1, dt2, dt3).
RationalMatrix jacobian_derivative(const SourcePoint& p, const std::array<Rational, 4>& direction,
                                   NormalForm nf = {});

int jacobian_rank(const SourcePoint& p, bool lifted, NormalForm nf = {});

// Projection of the vertical vector e8 onto the normal space of the lift.
Vector8 section_s1(const SourcePoint& p, NormalForm nf = {});
// Exact directional derivative of section_s1.
Vector8 section_s1_derivative(const SourcePoint& p, const std::array<Rational, 4>& direction,
                              NormalForm nf = {});

struct Sigma2Check {
  SourcePoint point;
  std::array<Rational, 4> kernel;  // spans ker df at the point
  Vector8 z2;                      // ds1(kernel)
  std::size_t ds1_rank = 0;        // rank of ds1 on the source tangent space
  bool sigma2_empty = false;
};

// At the singular point (the origin): the kernel of df is pushed into the
// normal space of the singular locus, T M / ker ds1, i.e. evaluated by ds1.
// A nonzero result means no Sigma^{1,1} point.
Sigma2Check sigma2_check(NormalForm nf = {});
bool sigma2_empty_check(NormalForm nf = {});

inline constexpr double kDefaultFrameTolerance = 1e-12;
// Coordinate indices z1..z4 used to seed Gram-Schmidt on the normal space.
inline constexpr std::array<std::size_t, 4> kDefaultFrameSeeds{3, 4, 5, 6};

struct NormalFrame {
  SourcePoint base;
  Vector8 v_raw;
  // Unit vectors (v, iv, jv, kv).
  std::array<std::array<double, 8>, 4> vectors{};
  double max_abs_inner_product = 0;   // between distinct frame vectors
  double max_norm_defect = 0;         // max | |f| - 1 |
  double max_tangent_component = 0;   // largest |<f, unit Jacobian column>|
};

// Throws InvalidArgument at the origin and FrameFailureError when the seed
// projections are dependent or the frame is not orthonormal within tolerance.
NormalFrame framing_frame(const SourcePoint& p,
                          const std::array<std::size_t, 4>& seeds = kDefaultFrameSeeds,
                          double tolerance = kDefaultFrameTolerance);

// |U(p)|^2 <= 1, exactly.
bool in_umbrella_disk(const SourcePoint& p);
Rational umbrella_norm_squared(const SourcePoint& p);

inline constexpr int kDefaultGridHeight = 8;

// Source point with a common denominator: (a0, a1, a2, a3) / b, b >= 1.
struct GridPoint {
  std::array<long, 4> num{};
  long den = 1;

  SourcePoint to_source() const;
};

// Unlifted and lifted Jacobian ranks and s1 at a grid point, evaluated on the
// integer matrix b * J (same column space). Runs in checked 128-bit arithmetic
// and redoes the point with GMP if anything overflows.
struct GridPointScan {
  int rank = 0;
  int lifted_rank = 0;
  Vector8 s1;
  bool s1_zero = false;
};

GridPointScan scan_grid_point(const GridPoint& g);

std::vector<GridPoint> integer_grid(int height);

// Points (a0, a1, a2, a3) / b with 1 <= b <= height, |a_i| <= height and
// gcd(a0, a1, a2, a3, b) = 1, so each rational point appears once.
std::vector<SourcePoint> rational_grid(int height);

// Rational points of the boundary sphere |U(p)| = 1, which in source
// coordinates is the unit 3-sphere. Inverse stereographic projection of a
// Halton sequence in [-2, 2]^3 with dyadic/triadic/pentadic denominators.
std::vector<SourcePoint> sphere_sample(std::size_t count);

struct UmbrellaConfig {
  int height = kDefaultGridHeight;
  std::size_t sphere_samples = 200;
  std::size_t injectivity_pairs = 10000;
  std::uint64_t seed = 20240917;
  double tolerance = kDefaultFrameTolerance;
};

struct FrameFailure {
  SourcePoint point;
  std::string reason;
};

struct UmbrellaVerification {
  UmbrellaConfig config;
  std::size_t grid_points = 0;
  std::vector<SourcePoint> singular_points;  // rank 3 on the unlifted Jacobian
  std::vector<SourcePoint> s1_zero_points;
  std::size_t lifted_rank_failures = 0;      // lifted rank != 4
  std::size_t s1_rank_mismatches = 0;        // s1 = 0 disagrees with rank 3
  int origin_rank = 0;
  int origin_lifted_rank = 0;
  bool sigma2_empty = false;
  std::size_t sigma2_ds1_rank = 0;
  bool negative_control_sigma2_empty = true;
  std::size_t injectivity_pairs = 0;
  std::size_t injectivity_failures = 0;
  std::size_t sphere_points = 0;
  std::size_t sphere_off_boundary = 0;
  std::vector<FrameFailure> frame_failures;
  double worst_frame_inner_product = 0;
  bool passed = false;
};

UmbrellaVerification verify_umbrella(const UmbrellaConfig& config = {});

}  // namespace primrank
