#include "psc/arith.hpp"

#include <stdexcept>

namespace psc::arith {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int binomial(long n, long j) {
  if (n < 0) throw std::domain_error("binomial: n must be nonnegative");
  if (j < 0 || j > n) return 0;
  if (j > n - j) j = n - j;
  // Multiplicative form; each intermediate quotient is exact.
  Int c = 1;
  for (long i = 1; i <= j; ++i) {
    c *= n - j + i;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return c;
}

Int gcd_row_binomials(long n) {
  if (n < 2) throw std::domain_error("gcd_row_binomials: n must be >= 2");
  // C(n,j) = C(n,n-j), so the half row up to n/2 carries the full gcd.
  Int g = n;  // C(n,1)
  Int c = n;
  for (long j = 2; j <= n / 2 && g != 1; ++j) {
    c *= n - j + 1;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(j));
    g = gcd(g, c);
  }
  return g;
}

std::optional<PrimePower> prime_power_classify(long n) {
  if (n < 2) throw std::domain_error("prime_power_classify: n must be >= 2");
  long p = 0;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{Int(n), 1};  // n itself is prime
  unsigned s = 0;
  long m = n;
  while (m % p == 0) {
    m /= p;
    ++s;
  }
  if (m != 1) return std::nullopt;
  return PrimePower{Int(p), s};
}

bool is_prime(long n) {
  if (n < 2) return false;
  auto pp = prime_power_classify(n);
  return pp && pp->exponent == 1;
}

Int restricted_gcd_d(long k) {
  if (k < 3) throw std::domain_error("restricted_gcd_d: k must be >= 3");
  Int g = 2 * k + 1;
  for (long j = 4; j <= 2 * k - 1 && g != 1; ++j)
    g = gcd(g, binomial(2 * k + 1, 2 * k + 1 - j));
  return g;
}

Bezout extended_gcd_list(const std::vector<Int>& values) {
  if (values.empty())
    throw std::domain_error("extended_gcd_list: empty input");
  for (const Int& v : values)
    if (v == 0) throw std::domain_error("extended_gcd_list: zero entry");

  Bezout out;
  out.g = abs(values[0]);
  out.coeffs.push_back(sgn(values[0]) >= 0 ? 1 : -1);
  for (std::size_t i = 1; i < values.size(); ++i) {
    Int g, a, b;
    mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), out.g.get_mpz_t(),
               values[i].get_mpz_t());
    for (Int& c : out.coeffs) c *= a;
    out.coeffs.push_back(b);
    out.g = g;
  }
  return out;
}

}  // namespace psc::arith
