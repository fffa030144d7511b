#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace psc::arith {

// Arbitrary-precision integers and rationals. Rationals are kept canonical
// (lowest terms, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

// Builds a canonical rational num/den. Throws std::domain_error if den == 0.
Rat make_rat(const Int& num, const Int& den);

Int gcd(const Int& a, const Int& b);

// Binomial coefficient C(n, j). Returns 0 when j < 0 or j > n.
// Throws std::domain_error if n < 0.
Int binomial(long n, long j);

// gcd of the interior entries of row n of Pascal's triangle,
// gcd{ C(n,j) : 1 <= j <= n-1 }. Requires n >= 2.
Int gcd_row_binomials(long n);

struct PrimePower {
  Int p;
  unsigned exponent;
};

// Classifies n >= 2 as p^s (returning p and s) or as not a prime power.
std::optional<PrimePower> prime_power_classify(long n);

// Convenience: true iff n is prime.
bool is_prime(long n);

// gcd of 2k+1 together with the binomials C(2k+1, 2k+1-j) for
// 4 <= j <= 2k-1. Requires k >= 3.
Int restricted_gcd_d(long k);

struct Bezout {
  Int g;                    // gcd, always positive
  std::vector<Int> coeffs;  // sum coeffs[i] * values[i] == g
};

// Extended gcd of a nonempty list of nonzero integers, with certificate.
Bezout extended_gcd_list(const std::vector<Int>& values);

}  // namespace psc::arith
