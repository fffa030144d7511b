#include <stdexcept>

#include "doctest.h"
#include "psc/curvature.hpp"
#include "psc/sweeps.hpp"

using namespace psc::sweeps;
using psc::arith::Rat;
using psc::curvature::Field;
using psc::curvature::RegionProblem;
using psc::curvature::region_contains;
using psc::curvature::region_problem_from;

TEST_CASE("binomial row gcds agree between serial and parallel") {
  auto serial = binomial_row_gcds(2, 400, Mode::Serial);
  auto parallel = binomial_row_gcds(2, 400, Mode::Parallel);
  REQUIRE(serial.size() == 399);
  CHECK(serial == parallel);
  CHECK(serial[0] == 2);    // row 2
  CHECK(serial[4] == 1);    // row 6
  CHECK(serial[5] == 7);    // row 7
  CHECK(serial[6] == 2);    // row 8
  CHECK(serial[7] == 3);    // row 9
  CHECK_THROWS_AS(binomial_row_gcds(5, 4, Mode::Serial), std::domain_error);
  CHECK_THROWS_AS(binomial_row_gcds(1, 4, Mode::Serial), std::domain_error);
}

TEST_CASE("sweep window for region problems") {
  // Vertex of the complex (2,2) instance sits at x = 8/4 = 2, so the window
  // doubles up to 4.
  CHECK(region_sweep_xmax(region_problem_from(Field::C, 2, 2)) == Rat(4));
  // Purely linear problems get the fixed default window.
  CHECK(region_sweep_xmax(region_problem_from(Field::R, 3, 3)) == Rat(10));
  CHECK(region_sweep_xmax(region_problem_from(Field::H, 1, 1)) == Rat(10));
}

TEST_CASE("region feasibility grids match the membership predicate") {
  auto p = region_problem_from(Field::C, 2, 2);
  auto serial = region_feasibility_grid(p, 32, Mode::Serial);
  auto parallel = region_feasibility_grid(p, 32, Mode::Parallel);
  REQUIRE(serial.points.size() == 32);
  CHECK(serial.feasible == parallel.feasible);
  CHECK(serial.points == parallel.points);
  CHECK(serial.x_max == Rat(4));
  // Smallest and largest sampled abscissae.
  CHECK(serial.points.front() == Rat(4) / (Rat(1) << 31));
  CHECK(serial.points.back() == Rat(4));

  int feasible_count = 0;
  for (int xi = 0; xi < 32; ++xi)
    for (int yi = 0; yi < 32; ++yi) {
      const bool want = region_contains(p, serial.points[std::size_t(xi)],
                                        serial.points[std::size_t(yi)]);
      const bool got = serial.feasible[std::size_t(xi) * 32 + yi] != 0;
      CHECK(want == got);
      feasible_count += got;
    }
  CHECK(feasible_count > 0);

  // (1, 1) is a known feasible point and lands exactly on the grid.
  const std::size_t j1 = 32 - 3;  // 4 * 2^-2 == 1
  REQUIRE(serial.points[j1] == Rat(1));
  CHECK(serial.feasible[j1 * 32 + j1] == 1);

  CHECK_THROWS_AS(region_feasibility_grid(p, 1, Mode::Serial),
                  std::domain_error);
}

TEST_CASE("degenerate grids are uniformly infeasible or feasible") {
  auto empty = region_feasibility_grid(region_problem_from(Field::C, 1, 1), 8,
                                       Mode::Parallel);
  for (auto f : empty.feasible) CHECK(f == 0);

  auto full = region_feasibility_grid(region_problem_from(Field::R, 3, 3), 8,
                                      Mode::Parallel);
  for (auto f : full.feasible) CHECK(f == 1);
}

TEST_CASE("scaling identity holds on deterministic random samples") {
  auto samples = random_scaling_samples(300, 20240817);
  REQUIRE(samples.size() == 300);
  auto again = random_scaling_samples(300, 20240817);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    CHECK(samples[i].kind == again[i].kind);
    CHECK(samples[i].s == again[i].s);
    CHECK(samples[i].lambda == again[i].lambda);
    CHECK(samples[i].lambda > 0);
    CHECK(samples[i].s > 0);
    CHECK(samples[i].u > 0);
    CHECK(samples[i].t > 0);
  }

  auto serial = scaling_identity_holds(samples, Mode::Serial);
  auto parallel = scaling_identity_holds(samples, Mode::Parallel);
  CHECK(serial == parallel);
  REQUIRE(serial.size() == samples.size());
  for (auto ok : serial) CHECK(ok == 1);

  CHECK_THROWS_AS(random_scaling_samples(-1, 1), std::domain_error);
}

TEST_CASE("smith decomposition soundness over random matrices") {
  auto mats = random_matrices(200, 97, 5, 9);
  REQUIRE(mats.size() == 200);
  for (const auto& m : mats) {
    CHECK(m.rows >= 1);
    CHECK(m.rows <= 5);
    CHECK(m.cols >= 1);
    CHECK(m.cols <= 5);
  }
  auto same = random_matrices(200, 97, 5, 9);
  CHECK(mats[0] == same[0]);
  CHECK(mats[199] == same[199]);

  auto serial = snf_soundness(mats, Mode::Serial);
  auto parallel = snf_soundness(mats, Mode::Parallel);
  REQUIRE(serial.size() == mats.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].ok());
    CHECK(parallel[i].ok());
  }

  CHECK_THROWS_AS(random_matrices(-2, 1, 3, 5), std::domain_error);
}
