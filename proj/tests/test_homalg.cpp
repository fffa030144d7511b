#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "psc/homalg.hpp"
#include "psc/sweeps.hpp"

using namespace psc::homalg;
using psc::arith::Int;
using psc::sweeps::SplitMix64;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()),
              static_cast<int>(rows.at(0).size()));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      m.at(r, c) = rows[static_cast<std::size_t>(r)]
                       [static_cast<std::size_t>(c)];
  return m;
}

// Cofactor-expansion determinant, independent of the production algorithm.
Int det_oracle(const IntMatrix& m) {
  const int n = m.rows;
  if (n == 1) return m.at(0, 0);
  Int sum = 0;
  for (int c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int k = 0; k < n; ++k) {
        if (k == c) continue;
        minor.at(r - 1, cc++) = m.at(r, k);
      }
    }
    Int term = m.at(0, c) * det_oracle(minor);
    if (c % 2) term = -term;
    sum += term;
  }
  return sum;
}

bool is_diagonal(const IntMatrix& m) {
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (r != c && m.at(r, c) != 0) return false;
  return true;
}

void check_snf_sound(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  CHECK(mul(mul(snf.u, a), snf.v) == snf.d);
  Int du = determinant(snf.u);
  Int dv = determinant(snf.v);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  CHECK(is_diagonal(snf.d));
  const int k = std::min(a.rows, a.cols);
  for (int t = 0; t < k; ++t) CHECK(snf.d.at(t, t) >= 0);
  for (int t = 0; t + 1 < k; ++t) {
    const Int& cur = snf.d.at(t, t);
    const Int& nxt = snf.d.at(t + 1, t + 1);
    if (cur == 0)
      CHECK(nxt == 0);
    else
      CHECK(nxt % cur == 0);
  }
}

// Applies random elementary row (left) or column (right) operations, which
// multiply by unimodular matrices.
IntMatrix scramble(const IntMatrix& a, SplitMix64& rng, int ops) {
  IntMatrix m = a;
  for (int t = 0; t < ops; ++t) {
    const bool row = rng.uniform(0, 1) == 0;
    const int limit = row ? m.rows : m.cols;
    if (limit < 2) continue;
    int i = static_cast<int>(rng.uniform(0, limit - 1));
    int j = static_cast<int>(rng.uniform(0, limit - 1));
    if (i == j) j = (j + 1) % limit;
    const Int c = rng.uniform(-3, 3);
    if (row)
      for (int k = 0; k < m.cols; ++k) m.at(j, k) += c * m.at(i, k);
    else
      for (int k = 0; k < m.rows; ++k) m.at(k, j) += c * m.at(k, i);
  }
  return m;
}

}  // namespace

TEST_CASE("determinant examples and oracle") {
  CHECK(determinant(from_rows({{5}})) == 5);
  CHECK(determinant(from_rows({{1, 2}, {3, 4}})) == -2);
  CHECK(determinant(IntMatrix::identity(4)) == 1);
  CHECK(determinant(from_rows({{2, 0, 1}, {1, 1, 0}, {0, 3, 1}})) == 5);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), std::domain_error);

  SplitMix64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 4));
    IntMatrix m(n, n);
    for (auto& e : m.a) e = rng.uniform(-9, 9);
    CHECK(determinant(m) == det_oracle(m));
  }
}

TEST_CASE("matrix multiplication") {
  auto a = from_rows({{1, 2}, {3, 4}});
  auto b = from_rows({{0, 1}, {1, 0}});
  CHECK(mul(a, b) == from_rows({{2, 1}, {4, 3}}));
  CHECK(mul(a, IntMatrix::identity(2)) == a);
  CHECK_THROWS_AS(mul(a, IntMatrix(3, 2)), std::domain_error);
}

TEST_CASE("smith normal form examples") {
  auto s1 = smith_normal_form(from_rows({{1, 1}, {-1, 1}}));
  CHECK(s1.d == from_rows({{1, 0}, {0, 2}}));

  auto s2 = smith_normal_form(from_rows({{2, 0}, {0, 4}}));
  CHECK(s2.d == from_rows({{2, 0}, {0, 4}}));

  auto s3 = smith_normal_form(from_rows({{6, 0}, {0, 4}}));
  CHECK(s3.d == from_rows({{2, 0}, {0, 12}}));

  auto s4 = smith_normal_form(from_rows({{0, 0}, {0, 0}}));
  CHECK(s4.d == from_rows({{0, 0}, {0, 0}}));

  // Shapes other than square, including the empty decomposition.
  auto s5 = smith_normal_form(from_rows({{4, 6, 8}}));
  CHECK(s5.d == from_rows({{2, 0, 0}}));
  CHECK(smith_normal_form(IntMatrix(0, 0)).d == IntMatrix(0, 0));

  for (const auto& m :
       {from_rows({{1, 1}, {-1, 1}}), from_rows({{6, 0}, {0, 4}}),
        from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}})})
    check_snf_sound(m);
}

TEST_CASE("smith diagonal multiplies to the determinant") {
  SplitMix64 rng(777);
  int done = 0;
  while (done < 200) {
    const int n = static_cast<int>(rng.uniform(2, 3));
    IntMatrix m(n, n);
    for (auto& e : m.a) e = rng.uniform(-6, 6);
    Int det = det_oracle(m);
    if (det == 0 || det > 60 || det < -60) continue;
    ++done;
    auto snf = smith_normal_form(m);
    Int prod = 1;
    for (int t = 0; t < n; ++t) prod *= snf.d.at(t, t);
    CHECK(prod == abs(det));
  }
}

TEST_CASE("cokernel invariants") {
  auto z2 = cokernel_invariants(from_rows({{1, 1}, {-1, 1}}));
  CHECK(z2.free_rank == 0);
  REQUIRE(z2.torsion.size() == 1);
  CHECK(z2.torsion[0] == 2);

  auto z6 = cokernel_invariants(from_rows({{2, 0}, {0, 3}}));
  CHECK(z6.free_rank == 0);
  REQUIRE(z6.torsion.size() == 1);
  CHECK(z6.torsion[0] == 6);

  auto trivial = cokernel_invariants(IntMatrix::identity(3));
  CHECK(trivial.free_rank == 0);
  CHECK(trivial.torsion.empty());

  auto free2 = cokernel_invariants(IntMatrix(2, 3));  // zero map
  CHECK(free2.free_rank == 2);
  CHECK(free2.torsion.empty());

  auto mixed = cokernel_invariants(from_rows({{2, 0}, {0, 0}, {0, 0}}));
  CHECK(mixed.free_rank == 2);
  REQUIRE(mixed.torsion.size() == 1);
  CHECK(mixed.torsion[0] == 2);
}

TEST_CASE("cokernel invariants do not depend on bases") {
  SplitMix64 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    const int r = static_cast<int>(rng.uniform(1, 4));
    const int c = static_cast<int>(rng.uniform(1, 4));
    IntMatrix m(r, c);
    for (auto& e : m.a) e = rng.uniform(-5, 5);
    auto base = cokernel_invariants(m);
    auto twisted = cokernel_invariants(scramble(m, rng, 12));
    CHECK(base == twisted);
  }
}

TEST_CASE("Betti numbers over coefficient fields") {
  // Degrees 0..5: Z, 0, Z/2, 0, 0, Z.
  IntegralHomology wu{{{1, {}}, {0, {}}, {0, {Int(2)}}, {0, {}},
                       {0, {}}, {1, {}}}};
  CHECK(betti_over_field(wu, HomologyField::Q()) ==
        std::vector<int>{1, 0, 0, 0, 0, 1});
  CHECK(betti_over_field(wu, HomologyField::Fp(2)) ==
        std::vector<int>{1, 0, 1, 1, 0, 1});
  CHECK(betti_over_field(wu, HomologyField::Fp(3)) ==
        std::vector<int>{1, 0, 0, 0, 0, 1});

  // Torsion prime to the field characteristic is invisible.
  IntegralHomology lens{{{1, {}}, {0, {Int(5)}}, {0, {}}, {1, {}}}};
  CHECK(betti_over_field(lens, HomologyField::Fp(5)) ==
        std::vector<int>{1, 1, 1, 1});
  CHECK(betti_over_field(lens, HomologyField::Fp(3)) ==
        std::vector<int>{1, 0, 0, 1});

  CHECK_THROWS_AS(betti_over_field(wu, HomologyField::Fp(4)),
                  std::domain_error);
  CHECK_THROWS_AS(betti_over_field(IntegralHomology{}, HomologyField::Q()),
                  std::domain_error);
  IntegralHomology bad{{{-1, {}}}};
  CHECK_THROWS_AS(betti_over_field(bad, HomologyField::Q()),
                  std::domain_error);
}

TEST_CASE("rational Betti numbers alternate to the free Euler characteristic") {
  SplitMix64 rng(5150);
  for (int trial = 0; trial < 100; ++trial) {
    IntegralHomology h;
    const long top = rng.uniform(0, 6);
    long chi = 0, sign = 1;
    for (long d = 0; d <= top; ++d) {
      AbelianGroupInvariants g;
      g.free_rank = static_cast<int>(rng.uniform(0, 3));
      const long torsion_count = rng.uniform(0, 2);
      for (long t = 0; t < torsion_count; ++t)
        g.torsion.push_back(rng.uniform(2, 9));
      h.groups.push_back(g);
      chi += sign * g.free_rank;
      sign = -sign;
    }
    auto betti = betti_over_field(h, HomologyField::Q());
    long alt = 0;
    sign = 1;
    for (int b : betti) {
      alt += sign * b;
      sign = -sign;
    }
    CHECK(alt == chi);
  }
}

TEST_CASE("semi-characteristic and the mod-2 gap") {
  IntegralHomology wu{{{1, {}}, {0, {}}, {0, {Int(2)}}, {0, {}},
                       {0, {}}, {1, {}}}};
  CHECK(semi_characteristic(wu, HomologyField::Q(), 2) == 1);
  CHECK(semi_characteristic(wu, HomologyField::Fp(2), 2) == 0);
  CHECK(lmp_difference(wu) == 1);

  IntegralHomology s5{{{1, {}}, {0, {}}, {0, {}}, {0, {}}, {0, {}}, {1, {}}}};
  CHECK(semi_characteristic(s5, HomologyField::Q(), 2) == 1);
  CHECK(semi_characteristic(s5, HomologyField::Fp(2), 2) == 1);
  CHECK(lmp_difference(s5) == 0);

  // All Betti numbers equal to one in degrees 0..5.
  IntegralHomology ring{{{1, {}}, {1, {}}, {1, {}}, {1, {}}, {1, {}},
                         {1, {}}}};
  CHECK(lmp_difference(ring) == 0);

  IntegralHomology even{{{1, {}}, {0, {}}, {1, {}}}};
  CHECK_THROWS_AS(lmp_difference(even), std::domain_error);
  CHECK_THROWS_AS(semi_characteristic(wu, HomologyField::Q(), 1),
                  std::domain_error);
}

TEST_CASE("series of graded polynomial rings") {
  auto one_gen = hilbert_series({4}, 12);
  REQUIRE(one_gen.coeffs.size() == 13);
  for (int d = 0; d <= 12; ++d)
    CHECK(one_gen.coeffs[static_cast<std::size_t>(d)] ==
          (d % 4 == 0 ? 1 : 0));

  auto two_gen = hilbert_series({4, 8}, 8);
  CHECK(two_gen.coeffs[8] == 2);

  auto four_gen = hilbert_series({4, 5, 6, 8}, 8);
  CHECK(four_gen.coeffs ==
        std::vector<Int>{1, 0, 0, 0, 1, 1, 1, 0, 2});

  // Geometric series: a single generator contributes exactly at multiples.
  for (long d = 1; d <= 7; ++d) {
    auto s = hilbert_series({d}, 20);
    for (int q = 0; q <= 20; ++q)
      CHECK(s.coeffs[static_cast<std::size_t>(q)] == (q % d == 0 ? 1 : 0));
  }

  CHECK_THROWS_AS(hilbert_series({0}, 4), std::domain_error);
  CHECK_THROWS_AS(hilbert_series({4}, -1), std::domain_error);
}

TEST_CASE("generator degree catalogs") {
  CHECK(wall_generator_degrees(12) ==
        std::vector<long>{4, 5, 6, 8, 9, 10, 11, 12});
  CHECK(wall_generator_degrees(3).empty());
  CHECK(wall_generator_degrees(4) == std::vector<long>{4});
  CHECK(wall_generator_degrees(16) ==
        std::vector<long>{4, 5, 6, 8, 9, 10, 11, 12, 13, 14, 16});

  CHECK(thom_generator_degrees(10) ==
        std::vector<long>{2, 4, 5, 6, 8, 9, 10});
  CHECK(thom_generator_degrees(1).empty());
  auto t16 = thom_generator_degrees(16);
  CHECK(t16 == std::vector<long>{2, 4, 5, 6, 8, 9, 10, 11, 12, 13, 14, 16});

  CHECK_THROWS_AS(wall_generator_degrees(-1), std::domain_error);
  CHECK_THROWS_AS(thom_generator_degrees(-1), std::domain_error);
}
