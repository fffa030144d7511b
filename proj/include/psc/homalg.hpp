#pragma once

#include <vector>

#include "psc/arith.hpp"

namespace psc::homalg {

using arith::Int;

// Dense integer matrix, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, Int(0)) {}

  static IntMatrix identity(int n);

  Int& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

  bool operator==(const IntMatrix&) const = default;
};

IntMatrix mul(const IntMatrix& x, const IntMatrix& y);

// Determinant of a square matrix (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& m);

// Smith normal form: unimodular u (rows x rows) and v (cols x cols) with
// u * a * v = d, d diagonal with nonnegative entries and d[i] | d[i+1].
struct SnfResult {
  IntMatrix u, d, v;
};

SnfResult smith_normal_form(const IntMatrix& a);

// Invariant factors of the cokernel of a : Z^cols -> Z^rows.
struct AbelianGroupInvariants {
  int free_rank = 0;
  std::vector<Int> torsion;  // each >= 2, in divisibility order

  bool operator==(const AbelianGroupInvariants&) const = default;
};

AbelianGroupInvariants cokernel_invariants(const IntMatrix& a);

// Graded list of homology groups, degrees 0..top.
struct IntegralHomology {
  std::vector<AbelianGroupInvariants> groups;

  int top() const { return static_cast<int>(groups.size()) - 1; }
};

// Coefficient field for Betti numbers: Q or F_p with p prime.
struct HomologyField {
  bool is_rational = true;
  long p = 0;

  static HomologyField Q() { return {true, 0}; }
  static HomologyField Fp(long p) { return {false, p}; }
};

std::vector<int> betti_over_field(const IntegralHomology& h,
                                  const HomologyField& field);

// Kervaire semi-characteristic: sum of the first m+1 Betti numbers mod 2.
// Requires top degree equal to 2m+1.
int semi_characteristic(const IntegralHomology& h, const HomologyField& field,
                        int m);

// Difference (mod 2) of the rational and mod-2 semi-characteristics of an
// odd-dimensional homology, an obstruction valued in {0, 1}.
int lmp_difference(const IntegralHomology& h);

// Coefficients 0..n_max of prod_d 1/(1 - t^d) over the degree multiset.
struct TruncatedPowerSeries {
  std::vector<Int> coeffs;
};

TruncatedPowerSeries hilbert_series(const std::vector<long>& degrees,
                                    int n_max);

// Degrees <= n_max in which the oriented cobordism ring needs a generator:
// one in 2^r for every r >= 2, and a pair 2k-1, 2k for every k >= 3 that is
// not a power of two.
std::vector<long> wall_generator_degrees(long n_max);

// Degrees 2..n_max of polynomial generators over Q: every i except 2^r - 1.
std::vector<long> thom_generator_degrees(long n_max);

}  // namespace psc::homalg
