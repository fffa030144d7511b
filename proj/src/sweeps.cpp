#include "psc/sweeps.hpp"

#include <stdexcept>

namespace psc::sweeps {

using arith::Int;
using arith::Rat;

std::vector<Int> binomial_row_gcds(long lo, long hi, Mode mode) {
  if (lo < 2 || hi < lo)
    throw std::domain_error("binomial_row_gcds: need 2 <= lo <= hi");
  const long count = hi - lo + 1;
  std::vector<Int> out(static_cast<std::size_t>(count));
  if (mode == Mode::Serial) {
    for (long t = 0; t < count; ++t)
      out[static_cast<std::size_t>(t)] = arith::gcd_row_binomials(lo + t);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < count; ++t)
      out[static_cast<std::size_t>(t)] = arith::gcd_row_binomials(lo + t);
  }
  return out;
}

Rat region_sweep_xmax(const curvature::RegionProblem& p) {
  if (p.a_x == 0 && p.a_y == 0) return Rat(10);
  Rat m = 0;
  if (p.a_x > 0 && p.b_x > 0) m = p.b_x / (2 * p.a_x);
  if (p.a_y > 0 && p.b_y > 0) {
    Rat v = p.b_y / (2 * p.a_y);
    if (v > m) m = v;
  }
  Rat x_max = 4;
  while (x_max < 2 * m) x_max *= 2;
  return x_max;
}

RegionGrid region_feasibility_grid(const curvature::RegionProblem& p,
                                   int grid, Mode mode) {
  if (grid < 2)
    throw std::domain_error("region_feasibility_grid: grid must be >= 2");
  RegionGrid g;
  g.grid = grid;
  g.x_max = region_sweep_xmax(p);
  g.points.resize(static_cast<std::size_t>(grid));
  for (int j = 0; j < grid; ++j) {
    Rat v;
    mpq_div_2exp(v.get_mpq_t(), g.x_max.get_mpq_t(),
                 static_cast<mp_bitcnt_t>(grid - 1 - j));
    g.points[static_cast<std::size_t>(j)] = v;
  }
  g.feasible.assign(static_cast<std::size_t>(grid) * grid, 0);
  const long cells = static_cast<long>(grid) * grid;
  auto eval = [&](long cell) {
    const Rat& x = g.points[static_cast<std::size_t>(cell / grid)];
    const Rat& y = g.points[static_cast<std::size_t>(cell % grid)];
    g.feasible[static_cast<std::size_t>(cell)] =
        curvature::region_contains(p, x, y) ? 1 : 0;
  };
  if (mode == Mode::Serial) {
    for (long cell = 0; cell < cells; ++cell) eval(cell);
  } else {
#pragma omp parallel for schedule(static)
    for (long cell = 0; cell < cells; ++cell) eval(cell);
  }
  return g;
}

std::vector<ScalingSample> random_scaling_samples(int count,
                                                  std::uint64_t seed) {
  if (count < 0) throw std::domain_error("random_scaling_samples: count < 0");
  SplitMix64 rng(seed);
  auto rat = [&rng]() {
    return arith::make_rat(Int(rng.uniform(1, 1000)),
                           Int(rng.uniform(1, 1000)));
  };
  std::vector<ScalingSample> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int t = 0; t < count; ++t) {
    ScalingSample s;
    s.kind = static_cast<curvature::Field>(rng.uniform(0, 2));
    s.n = rng.uniform(1, 6);
    s.m = rng.uniform(1, 6);
    s.s = rat();
    s.u = rat();
    s.t = rat();
    s.lambda = rat();
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::uint8_t> scaling_identity_holds(
    const std::vector<ScalingSample>& samples, Mode mode) {
  const long count = static_cast<long>(samples.size());
  std::vector<std::uint8_t> out(samples.size(), 0);
  auto eval = [&](long t) {
    const ScalingSample& s = samples[static_cast<std::size_t>(t)];
    try {
      auto [lhs, rhs] = curvature::global_scaling_check(s.kind, s.n, s.m, s.s,
                                                        s.u, s.t, s.lambda);
      out[static_cast<std::size_t>(t)] = lhs == rhs ? 1 : 0;
    } catch (const std::exception&) {
      out[static_cast<std::size_t>(t)] = 0;
    }
  };
  if (mode == Mode::Serial) {
    for (long t = 0; t < count; ++t) eval(t);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < count; ++t) eval(t);
  }
  return out;
}

std::vector<homalg::IntMatrix> random_matrices(int count, std::uint64_t seed,
                                               int max_dim, long max_abs) {
  if (count < 0 || max_dim < 1 || max_abs < 0)
    throw std::domain_error("random_matrices: bad parameters");
  SplitMix64 rng(seed);
  std::vector<homalg::IntMatrix> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int t = 0; t < count; ++t) {
    const int r = static_cast<int>(rng.uniform(1, max_dim));
    const int c = static_cast<int>(rng.uniform(1, max_dim));
    homalg::IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        m.at(i, j) = Int(rng.uniform(-max_abs, max_abs));
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

SnfCheck check_one(const homalg::IntMatrix& a) {
  SnfCheck ck;
  homalg::SnfResult snf = homalg::smith_normal_form(a);
  ck.product_matches = homalg::mul(homalg::mul(snf.u, a), snf.v) == snf.d;
  ck.u_unimodular = abs(homalg::determinant(snf.u)) == 1;
  ck.v_unimodular = abs(homalg::determinant(snf.v)) == 1;
  ck.diagonal = true;
  for (int i = 0; i < snf.d.rows; ++i)
    for (int j = 0; j < snf.d.cols; ++j)
      if (i != j && snf.d.at(i, j) != 0) ck.diagonal = false;
  ck.nonneg = true;
  ck.divisibility = true;
  const int steps = std::min(snf.d.rows, snf.d.cols);
  for (int t = 0; t < steps; ++t) {
    const Int& dt = snf.d.at(t, t);
    if (dt < 0) ck.nonneg = false;
    if (t + 1 < steps) {
      const Int& dn = snf.d.at(t + 1, t + 1);
      if (dt == 0 && dn != 0) ck.divisibility = false;
      if (dt != 0 && dn % dt != 0) ck.divisibility = false;
    }
  }
  return ck;
}

}  // namespace

std::vector<SnfCheck> snf_soundness(const std::vector<homalg::IntMatrix>& mats,
                                    Mode mode) {
  const long count = static_cast<long>(mats.size());
  std::vector<SnfCheck> out(mats.size());
  if (mode == Mode::Serial) {
    for (long t = 0; t < count; ++t)
      out[static_cast<std::size_t>(t)] =
          check_one(mats[static_cast<std::size_t>(t)]);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < count; ++t)
      out[static_cast<std::size_t>(t)] =
          check_one(mats[static_cast<std::size_t>(t)]);
  }
  return out;
}

}  // namespace psc::sweeps
