#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "psc/arith.hpp"

namespace psc::curvature {

using arith::Int;
using arith::Rat;

// Base field of the projective space: real, complex, or quaternionic.
enum class Field { R, C, H };

// Real dimension of the field as an R-algebra (1, 2 or 4).
int field_dim(Field kind);

// Scalar curvature (n-1)(n-2) of the unit round sphere S^n, n >= 1.
Rat sphere_scal(long n);

// Curvature constants of the projective space KP^n carrying the metric
// submersion S^(kn+k-1) -> KP^n with fiber S^(k-1):
//   b:       scalar curvature of the base KP^n,
//   c_fiber: scalar curvature of the unit fiber sphere,
//   a:       squared norm of the fundamental tensor of the submersion.
struct CurvatureConstants {
  Field kind;
  long n;
  Rat b;
  Rat c_fiber;
  Rat a;
};

CurvatureConstants constants(Field kind, long n);

// Scalar curvature of the metric s*g_base + t*g_fiber on the sphere bundle
// over KP^n: b/s + c_fiber/t - t*a/s^2. Requires n >= 1, s > 0, t > 0.
Rat scal_berger(Field kind, long n, const Rat& s, const Rat& t);

// Scalar curvature of the two-base connection metric with base factors
// KP^n (scale s) and KP^m (scale u) and fiber scale t.
Rat scal_double_connection(Field kind, long n, long m, const Rat& s,
                           const Rat& u, const Rat& t);

// Evaluates both sides of the scaling identity
//   scal(lambda*s, lambda*u, lambda*t) == scal(s, u, t) / lambda
// and returns them; throws std::logic_error if they differ.
std::pair<Rat, Rat> global_scaling_check(Field kind, long n, long m,
                                         const Rat& s, const Rat& u,
                                         const Rat& t, const Rat& lambda);

// Positivity region of the double connection metric, normalized to fiber
// scale 1 and inverse base scales x = 1/s, y = 1/u:
//   q(x,y) - l(x,y) < c  on the open quadrant x, y > 0,
// with q = a_x x^2 + a_y y^2, l = b_x x + b_y y.
struct RegionProblem {
  Rat a_x, a_y;  // quadratic coefficients, >= 0
  Rat b_x, b_y;  // linear coefficients
  Rat c;
};

RegionProblem region_problem_from(Field kind, long n, long m);

enum class RegionStatus { Empty, NonEmpty, AllOfQuadrant };

struct RegionReport {
  RegionStatus status = RegionStatus::Empty;
  std::optional<std::pair<Rat, Rat>> witness;  // exact feasible point
  bool convex = true;
};

RegionReport solve_region(const RegionProblem& p);

// Exact membership test; requires x > 0 and y > 0.
bool region_contains(const RegionProblem& p, const Rat& x, const Rat& y);

// Dimension of the space of invariant metrics of the associated bundle:
// one modulus per base factor that is a genuine projective space plus one
// fiber modulus in the complex and quaternionic cases.
int invariant_metric_dimension(Field kind, long n, long m);

// Piecewise profile of a torpedo metric on R^k: a round cap delta*sin(r/delta)
// blended through a concave parabolic arc into the flat cylinder f == delta.
struct ProfileSample {
  double r, f, df, ddf;
};

struct TorpedoProfile {
  long k = 0;            // fiber dimension, >= 2
  double delta = 0;      // cylinder radius
  double cap_end = 0;    // end of the spherical cap
  double flat_start = 0; // start of the cylindrical part
  double length = 0;     // total profile length
  std::vector<ProfileSample> samples;
};

// Uniform grid of at least 16 samples on [0, length]; certifies f(0) = 0,
// f'(0) = 1, 0 <= f' <= 1, f'' <= 0 and a flat final segment.
TorpedoProfile make_torpedo(long k, const Rat& delta, int grid_points);

// Scalar curvature of dr^2 + f(r)^2 g_{S^(k-1)} along the profile:
//   scal = (k-1) * (-2 f''/f + (k-2)(1 - f'^2)/f^2),
// with the r = 0 limit k(k-1)/delta^2 at the cap tip. min_scal is taken
// over the interior samples.
struct ScalCurve {
  std::vector<std::pair<double, double>> samples;  // (r, scal)
  double min_scal = 0;
};

ScalCurve rotsym_scal(const TorpedoProfile& profile);

// Lower scalar curvature bounds of the disc construction and of its fiberwise
// family version: (8, 6) for unit torpedo radius.
std::pair<Rat, Rat> wu_curvature_bounds();

}  // namespace psc::curvature
