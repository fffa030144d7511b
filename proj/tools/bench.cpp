// bench: times every batch kernel in its serial and OpenMP variants and
// verifies that both produce identical results.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "psc/curvature.hpp"
#include "psc/sweeps.hpp"

namespace {

using psc::sweeps::Mode;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// Runs fn(mode) `repeat` times and keeps the fastest wall time.
template <typename Fn>
double best_time(Fn&& fn, Mode mode, int repeat) {
  double best = 1e300;
  for (int t = 0; t < repeat; ++t) {
    auto start = std::chrono::steady_clock::now();
    fn(mode);
    double dt = seconds_since(start);
    if (dt < best) best = dt;
  }
  return best;
}

template <typename Fn>
void run_case(const std::string& name, Fn&& fn, int repeat) {
  auto serial_out = fn(Mode::Serial);
  auto parallel_out = fn(Mode::Parallel);
  const bool match = serial_out == parallel_out;
  double ts = best_time(fn, Mode::Serial, repeat);
  double tp = best_time(fn, Mode::Parallel, repeat);
  std::printf("%-28s %10.4fs %10.4fs %8.2fx   %s\n", name.c_str(), ts, tp,
              ts / tp, match ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP timing of the batch kernels"};
  int repeat = 3;
  std::uint64_t seed = 12345;
  app.add_option("--repeat", repeat, "timed runs per kernel (best kept)")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for the randomized batches")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both columns run serially\n");
#endif
  std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  run_case(
      "binomial row gcds 2..1200",
      [](Mode mode) { return psc::sweeps::binomial_row_gcds(2, 1200, mode); },
      repeat);

  auto problem =
      psc::curvature::region_problem_from(psc::curvature::Field::C, 2, 2);
  run_case(
      "region grid 96x96",
      [&problem](Mode mode) {
        return psc::sweeps::region_feasibility_grid(problem, 96, mode)
            .feasible;
      },
      repeat);

  auto samples = psc::sweeps::random_scaling_samples(400, seed);
  run_case(
      "scaling identity x400",
      [&samples](Mode mode) {
        return psc::sweeps::scaling_identity_holds(samples, mode);
      },
      repeat);

  auto mats = psc::sweeps::random_matrices(400, seed, 5, 9);
  run_case(
      "snf soundness x400",
      [&mats](Mode mode) {
        auto checks = psc::sweeps::snf_soundness(mats, mode);
        std::vector<int> flat;
        flat.reserve(checks.size());
        for (const auto& c : checks) flat.push_back(c.ok());
        return flat;
      },
      repeat);

  return 0;
}
