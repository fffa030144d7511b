#include "psc/curvature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace psc::curvature {

namespace {

void require_positive(const Rat& v, const char* what) {
  if (!(v > 0)) throw std::domain_error(std::string(what) + " must be > 0");
}

Rat pow2(long e) {  // exact 2^e for any sign of e
  Rat r = 1;
  if (e >= 0)
    mpz_mul_2exp(r.get_num().get_mpz_t(), r.get_num().get_mpz_t(),
                 static_cast<unsigned long>(e));
  else
    mpz_mul_2exp(r.get_den().get_mpz_t(), r.get_den().get_mpz_t(),
                 static_cast<unsigned long>(-e));
  return r;
}

}  // namespace

int field_dim(Field kind) {
  switch (kind) {
    case Field::R: return 1;
    case Field::C: return 2;
    case Field::H: return 4;
  }
  throw std::domain_error("field_dim: bad field");
}

Rat sphere_scal(long n) {
  if (n < 1) throw std::domain_error("sphere_scal: n must be >= 1");
  return Rat((n - 1) * (n - 2));
}

CurvatureConstants constants(Field kind, long n) {
  if (n < 1) throw std::domain_error("constants: n must be >= 1");
  CurvatureConstants cc{kind, n, 0, 0, 0};
  switch (kind) {
    case Field::R:
      cc.b = Rat((n - 1) * (n - 2));
      break;
    case Field::C:
      cc.b = Rat(4 * n * (n - 1));
      cc.a = Rat(2 * (n - 1));
      break;
    case Field::H:
      cc.b = Rat(16 * (n * n - 1));
      cc.c_fiber = 6;
      cc.a = Rat(12 * (n - 1));
      break;
  }
  return cc;
}

Rat scal_berger(Field kind, long n, const Rat& s, const Rat& t) {
  require_positive(s, "scal_berger: s");
  require_positive(t, "scal_berger: t");
  CurvatureConstants cc = constants(kind, n);
  return cc.b / s + cc.c_fiber / t - t * cc.a / (s * s);
}

Rat scal_double_connection(Field kind, long n, long m, const Rat& s,
                           const Rat& u, const Rat& t) {
  require_positive(s, "scal_double_connection: s");
  require_positive(u, "scal_double_connection: u");
  require_positive(t, "scal_double_connection: t");
  CurvatureConstants cn = constants(kind, n);
  CurvatureConstants cm = constants(kind, m);
  return cn.b / s + cm.b / u + cn.c_fiber / t - t * cm.a / (u * u) -
         t * cn.a / (s * s);
}

std::pair<Rat, Rat> global_scaling_check(Field kind, long n, long m,
                                         const Rat& s, const Rat& u,
                                         const Rat& t, const Rat& lambda) {
  require_positive(lambda, "global_scaling_check: lambda");
  Rat lhs = scal_double_connection(kind, n, m, lambda * s, lambda * u,
                                   lambda * t);
  Rat rhs = scal_double_connection(kind, n, m, s, u, t) / lambda;
  if (lhs != rhs)
    throw std::logic_error("global_scaling_check: identity violated");
  return {lhs, rhs};
}

RegionProblem region_problem_from(Field kind, long n, long m) {
  CurvatureConstants cn = constants(kind, n);
  CurvatureConstants cm = constants(kind, m);
  return RegionProblem{cn.a, cm.a, cn.b, cm.b, cn.c_fiber};
}

namespace {

struct AxisInf {
  bool unbounded = false;
  Rat value = 0;
};

// Infimum of a*x^2 - b*x over x > 0.
AxisInf axis_infimum(const Rat& a, const Rat& b) {
  if (a == 0 && b > 0) return {true, 0};
  if (a > 0 && b > 0) return {false, -(b * b) / (4 * a)};
  return {false, 0};
}

Rat objective(const RegionProblem& p, const Rat& x, const Rat& y) {
  return p.a_x * x * x + p.a_y * y * y - p.b_x * x - p.b_y * y;
}

// Coordinate of the search point at step j: the vertex if there is one,
// otherwise a point running off to +infinity or shrinking to 0, whichever
// direction lowers a*x^2 - b*x.
Rat axis_pick(const Rat& a, const Rat& b, long j) {
  if (a > 0 && b > 0) return b / (2 * a);
  if (a == 0 && b > 0) return pow2(j);
  return pow2(-j);
}

std::pair<Rat, Rat> find_witness(const RegionProblem& p) {
  constexpr long kMaxSteps = 4096;
  if (p.c > 0) {
    for (long j = 0; j < kMaxSteps; ++j) {
      Rat x = pow2(-j);
      if (objective(p, x, x) < p.c) return {x, x};
    }
  } else {
    for (long j = 0; j < kMaxSteps; ++j) {
      Rat x = axis_pick(p.a_x, p.b_x, j);
      Rat y = axis_pick(p.a_y, p.b_y, j);
      if (objective(p, x, y) < p.c) return {x, y};
    }
  }
  throw std::logic_error("find_witness: no certificate within step budget");
}

}  // namespace

RegionReport solve_region(const RegionProblem& p) {
  if (p.a_x < 0 || p.a_y < 0)
    throw std::domain_error("solve_region: quadratic coefficients must be >= 0");
  AxisInf ix = axis_infimum(p.a_x, p.b_x);
  AxisInf iy = axis_infimum(p.a_y, p.b_y);

  RegionReport rep;
  rep.convex = true;
  const bool feasible =
      ix.unbounded || iy.unbounded || ix.value + iy.value < p.c;
  if (!feasible) {
    rep.status = RegionStatus::Empty;
    return rep;
  }
  const bool everywhere = p.a_x == 0 && p.a_y == 0 && p.b_x >= 0 &&
                          p.b_y >= 0 && p.c >= 0 &&
                          (p.c > 0 || p.b_x > 0 || p.b_y > 0);
  if (everywhere) {
    rep.status = RegionStatus::AllOfQuadrant;
    rep.witness = {Rat(1), Rat(1)};
    return rep;
  }
  rep.status = RegionStatus::NonEmpty;
  rep.witness = find_witness(p);
  return rep;
}

bool region_contains(const RegionProblem& p, const Rat& x, const Rat& y) {
  require_positive(x, "region_contains: x");
  require_positive(y, "region_contains: y");
  return objective(p, x, y) < p.c;
}

int invariant_metric_dimension(Field kind, long n, long m) {
  if (n < 1 || m < 1)
    throw std::domain_error("invariant_metric_dimension: n, m must be >= 1");
  int d = (n >= 2 ? 1 : 0) + (m >= 2 ? 1 : 0);
  if (kind != Field::R) ++d;  // fiber scale is a modulus only for C and H
  return d;
}

TorpedoProfile make_torpedo(long k, const Rat& delta, int grid_points) {
  if (k < 2) throw std::domain_error("make_torpedo: k must be >= 2");
  require_positive(delta, "make_torpedo: delta");
  if (grid_points < 16)
    throw std::domain_error("make_torpedo: need at least 16 grid points");

  const double del = mpq_get_d(delta.get_mpq_t());
  const double pi = std::numbers::pi;
  // Opening angle of the blend; shrinking it with k keeps the curvature of
  // the blended part above the cylinder value.
  const double eps = std::min(pi / 6, 1.0 / static_cast<double>(k));
  const double r0 = del * (pi / 2 - eps);
  const double ca = std::cos(eps / 2);
  const double A = ca * ca / del;
  const double L = std::sin(eps) / A;
  const double r1 = r0 + L;
  const double total = r1 + del / 2;

  TorpedoProfile pr;
  pr.k = k;
  pr.delta = del;
  pr.cap_end = r0;
  pr.flat_start = r1;
  pr.length = total;
  pr.samples.reserve(static_cast<std::size_t>(grid_points));
  for (int i = 0; i < grid_points; ++i) {
    const double r = i == grid_points - 1
                         ? total
                         : total * static_cast<double>(i) / (grid_points - 1);
    ProfileSample s{r, 0, 0, 0};
    if (r < r0) {
      s.f = del * std::sin(r / del);
      s.df = std::cos(r / del);
      s.ddf = -std::sin(r / del) / del;
    } else if (r < r1) {
      const double rem = L - (r - r0);
      s.f = del - A * rem * rem / 2;
      s.df = A * rem;
      s.ddf = -A;
    } else {
      s.f = del;
      s.df = 0;
      s.ddf = 0;
    }
    pr.samples.push_back(s);
  }

  const auto& ss = pr.samples;
  bool ok = ss.front().r == 0 && ss.front().f == 0 && ss.front().df == 1;
  for (const ProfileSample& s : ss)
    ok = ok && s.f >= 0 && s.f <= del && s.df >= 0 && s.df <= 1 && s.ddf <= 0;
  const ProfileSample& penlt = ss[ss.size() - 2];
  ok = ok && penlt.r >= r1 && penlt.f == del && ss.back().f == del;
  if (!ok) throw std::runtime_error("make_torpedo: certification failed");
  return pr;
}

ScalCurve rotsym_scal(const TorpedoProfile& profile) {
  if (profile.k < 2) throw std::domain_error("rotsym_scal: k must be >= 2");
  if (!(profile.delta > 0))
    throw std::domain_error("rotsym_scal: delta must be > 0");
  if (profile.samples.size() < 2)
    throw std::domain_error("rotsym_scal: too few samples");

  const double k = static_cast<double>(profile.k);
  ScalCurve out;
  out.samples.reserve(profile.samples.size());
  bool have_min = false;
  for (const ProfileSample& s : profile.samples) {
    double scal;
    if (s.r == 0) {
      scal = k * (k - 1) / (profile.delta * profile.delta);
    } else {
      if (s.f <= 0)
        throw std::domain_error("rotsym_scal: profile vanishes away from r=0");
      scal = (k - 1) * (-2 * s.ddf / s.f +
                        (k - 2) * (1 - s.df * s.df) / (s.f * s.f));
      if (!have_min || scal < out.min_scal) {
        out.min_scal = scal;
        have_min = true;
      }
    }
    out.samples.emplace_back(s.r, scal);
  }
  if (!have_min) throw std::domain_error("rotsym_scal: no interior samples");
  return out;
}

std::pair<Rat, Rat> wu_curvature_bounds() {
  CurvatureConstants cc = constants(Field::C, 2);
  Rat disc = cc.b + sphere_scal(3) - cc.a;
  Rat family = cc.b - cc.a;
  return {disc, family};
}

}  // namespace psc::curvature
