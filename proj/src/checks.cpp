#include "psc/checks.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "psc/arith.hpp"
#include "psc/charnum.hpp"
#include "psc/curvature.hpp"
#include "psc/homalg.hpp"
#include "psc/sweeps.hpp"

namespace psc::checks {

namespace {

using arith::Int;
using arith::Rat;
using arith::make_rat;
using curvature::Field;

void add(CriterionResult& cr, std::string claim, bool pass,
         std::string computed, std::string expected) {
  cr.items.push_back(
      {std::move(claim), std::move(computed), std::move(expected), pass});
}

std::string frac(const Rat& r) { return r.get_str(); }
std::string num(const Int& i) { return i.get_str(); }

std::string ratio(long ok, long total) {
  return std::to_string(ok) + "/" + std::to_string(total);
}

std::string fp(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string list_str(const std::vector<long>& v) {
  std::string s = "[";
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t) s += ", ";
    s += std::to_string(v[t]);
  }
  return s + "]";
}

constexpr Field kKinds[] = {Field::R, Field::C, Field::H};

Rat rat_pow2(long e) {
  Int n = 1, d = 1;
  if (e >= 0)
    n <<= static_cast<unsigned>(e);
  else
    d <<= static_cast<unsigned>(-e);
  return make_rat(n, d);
}

CriterionResult criterion_constants() {
  CriterionResult cr{1, "curvature constants", {}};
  long ok = 0, total = 0;
  for (Field kind : kKinds)
    for (long n = 1; n <= 50; ++n) {
      auto cc = curvature::constants(kind, n);
      Rat lhs = cc.b + cc.c_fiber - cc.a;
      Rat rhs = curvature::sphere_scal(curvature::field_dim(kind) * n);
      ++total;
      if (lhs == rhs) ++ok;
    }
  add(cr, "b + c_fiber - a = (kn-1)(kn-2) for kinds R/C/H, n = 1..50",
      ok == total, ratio(ok, total), ratio(total, total));

  auto h2 = curvature::constants(Field::H, 2);
  add(cr, "base curvature b(H,2)", h2.b == 48, frac(h2.b), "48");
  add(cr, "integrability term a(H,2)", h2.a == 12, frac(h2.a), "12");
  add(cr, "fiber curvature c(H)", h2.c_fiber == 6, frac(h2.c_fiber), "6");
  auto c3 = curvature::constants(Field::C, 3);
  add(cr, "base curvature b(C,3)", c3.b == 24, frac(c3.b), "24");
  add(cr, "integrability term a(C,3)", c3.a == 4, frac(c3.a), "4");
  auto r5 = curvature::constants(Field::R, 5);
  add(cr, "base curvature b(R,5)", r5.b == 12, frac(r5.b), "12");
  return cr;
}

CriterionResult criterion_round_sphere() {
  CriterionResult cr{2, "unit-scale metrics recover round spheres", {}};
  long ok = 0, total = 0;
  for (Field kind : kKinds)
    for (long n = 1; n <= 50; ++n) {
      Rat lhs = curvature::scal_berger(kind, n, 1, 1);
      Rat rhs = curvature::sphere_scal(curvature::field_dim(kind) * n);
      ++total;
      if (lhs == rhs) ++ok;
    }
  add(cr, "scal(kind, n, 1, 1) = scal of round S^(kn), n = 1..50", ok == total,
      ratio(ok, total), ratio(total, total));

  Rat h2 = curvature::scal_berger(Field::H, 2, 1, 1);
  add(cr, "scal(H, 2, 1, 1)", h2 == 42, frac(h2), "42");
  Rat c2 = curvature::scal_berger(Field::C, 2, 1, 1);
  add(cr, "scal(C, 2, 1, 1)", c2 == 6, frac(c2), "6");
  Rat r4 = curvature::scal_berger(Field::R, 4, 2, 7);
  add(cr, "scal(R, 4, s=2, t=7)", r4 == 3, frac(r4), "3");
  return cr;
}

CriterionResult criterion_scaling(const CheckOptions& opt, sweeps::Mode mode) {
  CriterionResult cr{3, "global scaling identity", {}};
  auto samples = sweeps::random_scaling_samples(500, opt.seed);
  auto flags = sweeps::scaling_identity_holds(samples, mode);
  long ok = 0;
  for (auto f : flags) ok += f;
  add(cr, "scal(lambda*g) = scal(g)/lambda on 500 random parameter sets",
      ok == 500, ratio(ok, 500), "500/500");

  auto p1 = curvature::global_scaling_check(Field::C, 2, 2, 1, 1, 1, 2);
  add(cr, "both sides at (C,2,2,1,1,1), lambda=2", p1.first == 6 && p1.second == 6,
      frac(p1.first) + ", " + frac(p1.second), "6, 6");
  auto p2 = curvature::global_scaling_check(Field::H, 1, 1, 1, 1, 3, 1);
  add(cr, "both sides at (H,1,1,1,1,3), lambda=1", p2.first == 2 && p2.second == 2,
      frac(p2.first) + ", " + frac(p2.second), "2, 2");
  auto p3 = curvature::global_scaling_check(Field::H, 2, 2, 1, 1, 1, 3);
  add(cr, "both sides at (H,2,2,1,1,1), lambda=3",
      p3.first == 26 && p3.second == 26,
      frac(p3.first) + ", " + frac(p3.second), "26, 26");
  return cr;
}

CriterionResult criterion_region(const CheckOptions& opt) {
  CriterionResult cr{4, "positivity region trichotomy", {}};
  using curvature::RegionStatus;

  long ok = 0, total = 0;
  for (long n = 3; n <= 8; ++n)
    for (long m = 3; m <= 8; ++m) {
      auto rep = curvature::solve_region(
          curvature::region_problem_from(Field::R, n, m));
      ++total;
      if (rep.status == RegionStatus::AllOfQuadrant) ++ok;
    }
  add(cr, "(R,n,m), n,m = 3..8: all of the quadrant", ok == total,
      ratio(ok, total), ratio(total, total));

  auto c11 = curvature::solve_region(
      curvature::region_problem_from(Field::C, 1, 1));
  add(cr, "(C,1,1): empty region",
      c11.status == RegionStatus::Empty && !c11.witness,
      c11.status == RegionStatus::Empty ? "empty" : "not empty", "empty");

  ok = total = 0;
  for (long n = 2; n <= 8; ++n)
    for (long m = 2; m <= 8; ++m) {
      auto p = curvature::region_problem_from(Field::C, n, m);
      auto rep = curvature::solve_region(p);
      ++total;
      if (rep.status == RegionStatus::NonEmpty && rep.witness &&
          curvature::region_contains(p, rep.witness->first,
                                     rep.witness->second))
        ++ok;
    }
  add(cr, "(C,n,m), n,m = 2..8: nonempty with exact witness", ok == total,
      ratio(ok, total), ratio(total, total));

  ok = total = 0;
  bool h11_all = false;
  for (long n = 1; n <= 8; ++n)
    for (long m = 1; m <= 8; ++m) {
      auto p = curvature::region_problem_from(Field::H, n, m);
      auto rep = curvature::solve_region(p);
      ++total;
      if (rep.status != RegionStatus::Empty && rep.witness &&
          curvature::region_contains(p, rep.witness->first,
                                     rep.witness->second))
        ++ok;
      if (n == 1 && m == 1) h11_all = rep.status == RegionStatus::AllOfQuadrant;
    }
  add(cr, "(H,n,m), n,m = 1..8: never empty, witness verified", ok == total,
      ratio(ok, total), ratio(total, total));
  add(cr, "(H,1,1): all of the quadrant", h11_all,
      h11_all ? "all of quadrant" : "smaller", "all of quadrant");

  // Midpoint convexity over every nonempty instance above.
  sweeps::SplitMix64 rng(opt.seed ^ 0xa5a5a5a5ULL);
  auto pick_coord = [&rng](const Rat& a, const Rat& b) -> Rat {
    if (a > 0 && b > 0)
      return Rat(b / (2 * a)) * make_rat(Int(rng.uniform(1, 63)), Int(32));
    return rat_pow2(rng.uniform(-5, 5));
  };
  long pairs_ok = 0, pairs_total = 0;
  auto run_instance = [&](Field kind, long n, long m) {
    auto p = curvature::region_problem_from(kind, n, m);
    for (int t = 0; t < 1000; ++t) {
      Rat x1 = pick_coord(p.a_x, p.b_x), y1 = pick_coord(p.a_y, p.b_y);
      Rat x2 = pick_coord(p.a_x, p.b_x), y2 = pick_coord(p.a_y, p.b_y);
      ++pairs_total;
      if (curvature::region_contains(p, x1, y1) &&
          curvature::region_contains(p, x2, y2) &&
          curvature::region_contains(p, (x1 + x2) / 2, (y1 + y2) / 2))
        ++pairs_ok;
    }
  };
  for (long n = 3; n <= 8; ++n)
    for (long m = 3; m <= 8; ++m) run_instance(Field::R, n, m);
  for (long n = 2; n <= 8; ++n)
    for (long m = 2; m <= 8; ++m) run_instance(Field::C, n, m);
  for (long n = 1; n <= 8; ++n)
    for (long m = 1; m <= 8; ++m) run_instance(Field::H, n, m);
  add(cr, "midpoint convexity on 1000 random feasible pairs per instance",
      pairs_ok == pairs_total, ratio(pairs_ok, pairs_total),
      ratio(pairs_total, pairs_total));
  return cr;
}

CriterionResult criterion_dimension() {
  CriterionResult cr{5, "invariant metric moduli dimensions", {}};
  const struct {
    Field kind;
    int d11, d12, d22;
  } rows[] = {{Field::R, 0, 1, 2}, {Field::C, 1, 2, 3}, {Field::H, 1, 2, 3}};
  for (auto& row : rows) {
    const char* kn = row.kind == Field::R   ? "R"
                     : row.kind == Field::C ? "C"
                                            : "H";
    int d11 = curvature::invariant_metric_dimension(row.kind, 1, 1);
    int d12 = curvature::invariant_metric_dimension(row.kind, 1, 2);
    int d21 = curvature::invariant_metric_dimension(row.kind, 2, 1);
    int d22 = curvature::invariant_metric_dimension(row.kind, 2, 2);
    int d35 = curvature::invariant_metric_dimension(row.kind, 3, 5);
    add(cr, std::string("moduli count (") + kn + ", 1, 1)", d11 == row.d11,
        std::to_string(d11), std::to_string(row.d11));
    add(cr, std::string("moduli count (") + kn + ", one factor a point)",
        d12 == row.d12 && d21 == row.d12, std::to_string(d12),
        std::to_string(row.d12));
    add(cr, std::string("moduli count (") + kn + ", both factors curved)",
        d22 == row.d22 && d35 == row.d22, std::to_string(d22),
        std::to_string(row.d22));
  }
  return cr;
}

CriterionResult criterion_torpedo() {
  CriterionResult cr{6, "torpedo profiles", {}};
  auto t1 = curvature::make_torpedo(3, Rat(1), 256);
  auto s1 = curvature::rotsym_scal(t1);
  add(cr, "min scal of the (k=3, delta=1) torpedo within 1e-6 of >= 2",
      s1.min_scal >= 2 - 1e-6, fp(s1.min_scal), ">= 2 - 1e-6");

  double cap_worst = 0;
  for (std::size_t t = 0; t < t1.samples.size(); ++t)
    if (t1.samples[t].r < t1.cap_end)
      cap_worst = std::max(cap_worst, std::fabs(s1.samples[t].second - 6));
  add(cr, "cap samples carry the round S^3 value 6 (tol 1e-6)",
      cap_worst <= 1e-6, "max deviation " + fp(cap_worst), "<= 1e-6");

  auto t2 = curvature::make_torpedo(3, make_rat(Int(1), Int(2)), 256);
  auto s2 = curvature::rotsym_scal(t2);
  double cyl_worst = 0;
  for (std::size_t t = 0; t < t2.samples.size(); ++t)
    if (t2.samples[t].r >= t2.flat_start)
      cyl_worst = std::max(cyl_worst, std::fabs(s2.samples[t].second - 8));
  add(cr, "cylinder samples at delta=1/2 carry scal 8 (tol 1e-6)",
      cyl_worst <= 1e-6, "max deviation " + fp(cyl_worst), "<= 1e-6");

  bool boundary = t1.samples.front().f == 0 && t1.samples.front().df == 1 &&
                  t1.samples.back().f == 1 && t1.samples.back().df == 0;
  add(cr, "profile boundary data f(0)=0, f'(0)=1, flat end", boundary,
      boundary ? "as stated" : "violated", "as stated");
  double maxf = 0;
  for (const auto& s : t2.samples) maxf = std::max(maxf, s.f);
  add(cr, "delta=1/2 profile tops out at 1/2", maxf == 0.5, fp(maxf), "0.5");
  return cr;
}

CriterionResult criterion_wu_bounds() {
  CriterionResult cr{7, "disc and family curvature bounds", {}};
  auto [disc, family] = curvature::wu_curvature_bounds();
  add(cr, "scal bound of the disc construction", disc == 8, frac(disc), "8");
  add(cr, "scal bound of the fiberwise family", family == 6, frac(family),
      "6");
  auto cc = curvature::constants(Field::C, 2);
  add(cr, "family bound is the base bound minus |A|^2 = 2",
      cc.a == 2 && family == disc - curvature::sphere_scal(3),
      frac(family), frac(Rat(disc - curvature::sphere_scal(3))));
  return cr;
}

CriterionResult criterion_s_numbers() {
  CriterionResult cr{8, "s-numbers through the ring engine", {}};
  using charnum::ManifoldDescriptor;

  Int s_cp4 = charnum::s_number(ManifoldDescriptor::cp(4), 2);
  add(cr, "s_2 of cp4", s_cp4 == 5, num(s_cp4), "5");
  Int s_hp2 = charnum::s_number(ManifoldDescriptor::hp2(), 2);
  add(cr, "s_2 of hp2", s_hp2 == -10, num(s_hp2), "-10");
  Int s_prod = charnum::s_number(
      ManifoldDescriptor::product(
          {ManifoldDescriptor::cp(2), ManifoldDescriptor::cp(2)}),
      2);
  add(cr, "s_2 of cp2*cp2", s_prod == 0, num(s_prod), "0");

  long ok = 0, total = 0;
  for (long k = 1; k <= 10; ++k) {
    ++total;
    if (charnum::s_number(ManifoldDescriptor::cp(2 * k),
                          static_cast<int>(k)) == 2 * k + 1)
      ++ok;
  }
  add(cr, "s_k of cp(2k) = 2k+1 for k = 1..10", ok == total, ratio(ok, total),
      ratio(total, total));

  ok = total = 0;
  for (long sum = 5; sum <= 21; sum += 2)
    for (long i = 2; i <= (sum - 1) / 2; ++i) {
      const long j = sum - i;
      const int k = static_cast<int>((sum - 1) / 2);
      ++total;
      if (charnum::s_number(ManifoldDescriptor::milnor(i, j), k) ==
          -arith::binomial(sum, i))
        ++ok;
    }
  add(cr, "s_k of h_i_j = -C(i+j, i) for 2 <= i <= j, i+j <= 21", ok == total,
      ratio(ok, total), ratio(total, total));
  return cr;
}

CriterionResult criterion_omega8() {
  CriterionResult cr{9, "rank-two lattice in dimension eight", {}};
  using charnum::ManifoldDescriptor;
  auto rep = charnum::omega8_report();
  add(cr, "[hp2] = -2*[cp4] + 3*[cp2*cp2]", rep.a == -2 && rep.b == 3,
      "(" + num(rep.a) + ", " + num(rep.b) + ")", "(-2, 3)");
  add(cr, "index of the span of [cp4] and [hp2]", rep.index == 3,
      num(rep.index), "3");
  add(cr, "(signature, s_2) of hp2", rep.sig_hp2 == 1 && rep.s_hp2 == -10,
      "(" + num(rep.sig_hp2) + ", " + num(rep.s_hp2) + ")", "(1, -10)");

  Int sig_cp4 = charnum::signature(ManifoldDescriptor::cp(4));
  Int sig_prod = charnum::signature(ManifoldDescriptor::product(
      {ManifoldDescriptor::cp(2), ManifoldDescriptor::cp(2)}));
  add(cr, "signatures of the generators", sig_cp4 == 1 && sig_prod == 1,
      num(sig_cp4) + ", " + num(sig_prod), "1, 1");
  return cr;
}

CriterionResult criterion_gcd_facts(sweeps::Mode mode) {
  CriterionResult cr{10, "binomial gcd facts", {}};
  auto gcds = sweeps::binomial_row_gcds(2, 2000, mode);
  long ok = 0, total = 0;
  for (long n = 2; n <= 2000; ++n) {
    auto pp = arith::prime_power_classify(n);
    Int expected = pp ? pp->p : Int(1);
    ++total;
    if (gcds[static_cast<std::size_t>(n - 2)] == expected) ++ok;
  }
  add(cr, "row gcd is p on p-power rows and 1 otherwise, n = 2..2000",
      ok == total, ratio(ok, total), ratio(total, total));

  ok = total = 0;
  for (long k = 3; k <= 60; ++k) {
    ++total;
    if (arith::restricted_gcd_d(k) == arith::gcd_row_binomials(2 * k + 1))
      ++ok;
  }
  add(cr, "restricted gcd d(2k+1) equals the full row gcd, k = 3..60",
      ok == total, ratio(ok, total), ratio(total, total));

  ok = total = 0;
  for (int k = 2; k <= 20; ++k) {
    auto cert = charnum::generator_search(k);
    Int achieved = 0;
    for (const auto& [coeff, d] : cert.combination)
      achieved += coeff * charnum::s_number(d, k);
    auto pp = arith::prime_power_classify(2 * k + 1);
    Int target = pp ? pp->p : Int(1);
    ++total;
    if (achieved == cert.target && cert.target == target) ++ok;
  }
  add(cr, "combinations achieve the minimal positive s-number, k = 2..20",
      ok == total, ratio(ok, total), ratio(total, total));
  return cr;
}

CriterionResult criterion_homology(const CheckOptions& opt,
                                   sweeps::Mode mode) {
  CriterionResult cr{11, "smith normal form and homology", {}};
  homalg::IntMatrix mv(2, 2);
  mv.at(0, 0) = 1;
  mv.at(0, 1) = 1;
  mv.at(1, 0) = -1;
  mv.at(1, 1) = 1;
  auto snf = homalg::smith_normal_form(mv);
  bool diag_ok = snf.d.at(0, 0) == 1 && snf.d.at(1, 1) == 2 &&
                 snf.d.at(0, 1) == 0 && snf.d.at(1, 0) == 0;
  add(cr, "smith form of [[1,1],[-1,1]]", diag_ok,
      snf.d.at(0, 0).get_str() + "," + snf.d.at(1, 1).get_str(), "1,2");
  auto coker = homalg::cokernel_invariants(mv);
  bool coker_ok = coker.free_rank == 0 && coker.torsion.size() == 1 &&
                  coker.torsion[0] == 2;
  add(cr, "its cokernel is Z/2", coker_ok,
      coker_ok ? "Z/2" : "other", "Z/2");

  auto mats = sweeps::random_matrices(1000, opt.seed ^ 0x9e37ULL, 5, 9);
  auto checks = sweeps::snf_soundness(mats, mode);
  long ok = 0;
  for (const auto& ck : checks) ok += ck.ok();
  add(cr, "SNF soundness (UAV=D, unimodularity, chain) on 1000 matrices",
      ok == 1000, ratio(ok, 1000), "1000/1000");

  homalg::IntegralHomology wu{{{1, {}}, {0, {}}, {0, {Int(2)}}, {0, {}},
                               {0, {}}, {1, {}}}};
  homalg::IntegralHomology s5{{{1, {}}, {0, {}}, {0, {}}, {0, {}},
                               {0, {}}, {1, {}}}};
  int lmp_wu = homalg::lmp_difference(wu);
  int lmp_s5 = homalg::lmp_difference(s5);
  add(cr, "semi-characteristic gap of the Wu homology", lmp_wu == 1,
      std::to_string(lmp_wu), "1");
  add(cr, "semi-characteristic gap of S^5", lmp_s5 == 0,
      std::to_string(lmp_s5), "0");
  return cr;
}

CriterionResult criterion_series() {
  CriterionResult cr{12, "series and generator catalogs", {}};
  auto hs = homalg::hilbert_series({4, 8}, 8);
  add(cr, "two-generator series has coefficient 2 in degree 8",
      hs.coeffs.at(8) == 2, num(hs.coeffs.at(8)), "2");

  auto wall = homalg::wall_generator_degrees(12);
  std::vector<long> wall_expected{4, 5, 6, 8, 9, 10, 11, 12};
  add(cr, "generator degrees <= 12 (torsion-sensitive catalog)",
      wall == wall_expected, list_str(wall), list_str(wall_expected));

  auto thom = homalg::thom_generator_degrees(16);
  std::vector<long> thom_expected{2, 4, 5, 6, 8, 9, 10, 11, 12, 13, 14, 16};
  add(cr, "rational generator degrees <= 16 exclude exactly {1,3,7,15}",
      thom == thom_expected, list_str(thom), list_str(thom_expected));
  return cr;
}

}  // namespace

std::vector<CriterionResult> run_criteria(const CheckOptions& opt) {
  const sweeps::Mode mode =
      opt.parallel ? sweeps::Mode::Parallel : sweeps::Mode::Serial;
  std::vector<CriterionResult> out;
  auto guard = [&out](int number, const char* title, auto&& fn) {
    try {
      out.push_back(fn());
    } catch (const std::exception& e) {
      CriterionResult cr{number, title, {}};
      add(cr, "criterion aborted", false, e.what(), "no exception");
      out.push_back(std::move(cr));
    }
  };
  guard(1, "curvature constants", [] { return criterion_constants(); });
  guard(2, "unit-scale metrics recover round spheres",
        [] { return criterion_round_sphere(); });
  guard(3, "global scaling identity",
        [&] { return criterion_scaling(opt, mode); });
  guard(4, "positivity region trichotomy",
        [&] { return criterion_region(opt); });
  guard(5, "invariant metric moduli dimensions",
        [] { return criterion_dimension(); });
  guard(6, "torpedo profiles", [] { return criterion_torpedo(); });
  guard(7, "disc and family curvature bounds",
        [] { return criterion_wu_bounds(); });
  guard(8, "s-numbers through the ring engine",
        [] { return criterion_s_numbers(); });
  guard(9, "rank-two lattice in dimension eight",
        [] { return criterion_omega8(); });
  guard(10, "binomial gcd facts", [&] { return criterion_gcd_facts(mode); });
  guard(11, "smith normal form and homology",
        [&] { return criterion_homology(opt, mode); });
  guard(12, "series and generator catalogs",
        [] { return criterion_series(); });
  return out;
}

}  // namespace psc::checks
