#pragma once

#include <cstdint>
#include <vector>

#include "psc/arith.hpp"
#include "psc/curvature.hpp"
#include "psc/homalg.hpp"

namespace psc::sweeps {

// Every kernel here has a serial reference path and an OpenMP path that must
// produce identical results; Mode selects between them.
enum class Mode { Serial, Parallel };

// splitmix64: tiny, fully portable deterministic generator used for all
// randomized batches, so results are reproducible across platforms.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  long uniform(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(next() %
                                  static_cast<std::uint64_t>(hi - lo + 1));
  }
};

// gcd of the interior binomial entries of rows lo..hi of Pascal's triangle.
std::vector<arith::Int> binomial_row_gcds(long lo, long hi, Mode mode);

// Exact feasibility table of a region problem over a dyadic log grid
// (x_max * 2^-j per axis). feasible is row-major over (x index, y index).
struct RegionGrid {
  int grid = 0;
  arith::Rat x_max;
  std::vector<arith::Rat> points;
  std::vector<std::uint8_t> feasible;
};

arith::Rat region_sweep_xmax(const curvature::RegionProblem& p);
RegionGrid region_feasibility_grid(const curvature::RegionProblem& p,
                                   int grid, Mode mode);

// Deterministic random samples for the metric scaling identity.
struct ScalingSample {
  curvature::Field kind;
  long n, m;
  arith::Rat s, u, t, lambda;
};

std::vector<ScalingSample> random_scaling_samples(int count,
                                                  std::uint64_t seed);
std::vector<std::uint8_t> scaling_identity_holds(
    const std::vector<ScalingSample>& samples, Mode mode);

// Deterministic random integer matrices and per-matrix soundness of their
// Smith normal form decomposition.
std::vector<homalg::IntMatrix> random_matrices(int count, std::uint64_t seed,
                                               int max_dim, long max_abs);

struct SnfCheck {
  bool product_matches = false;  // u * a * v == d
  bool u_unimodular = false;
  bool v_unimodular = false;
  bool diagonal = false;
  bool nonneg = false;
  bool divisibility = false;

  bool ok() const {
    return product_matches && u_unimodular && v_unimodular && diagonal &&
           nonneg && divisibility;
  }
};

std::vector<SnfCheck> snf_soundness(const std::vector<homalg::IntMatrix>& mats,
                                    Mode mode);

}  // namespace psc::sweeps
