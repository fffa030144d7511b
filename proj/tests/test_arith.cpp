#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "psc/arith.hpp"
#include "psc/sweeps.hpp"

using namespace psc::arith;

namespace {

Int factorial(long n) {
  Int f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

// Independent binomial oracle, deliberately different from the production
// algorithm.
Int binomial_oracle(long n, long j) {
  if (j < 0 || j > n) return 0;
  return factorial(n) / (factorial(j) * factorial(n - j));
}

}  // namespace

TEST_CASE("binomial matches the factorial formula") {
  for (long n = 0; n <= 40; ++n)
    for (long j = -1; j <= n + 1; ++j)
      CHECK(binomial(n, j) == binomial_oracle(n, j));
  CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
}

TEST_CASE("binomial satisfies the Pascal recurrence at size 200") {
  for (long n : {150L, 200L})
    for (long j = 1; j < n; j += 7)
      CHECK(binomial(n, j) == binomial(n - 1, j - 1) + binomial(n - 1, j));
}

TEST_CASE("make_rat canonicalizes and rejects zero denominators") {
  CHECK(make_rat(2, 4) == make_rat(1, 2));
  CHECK(make_rat(1, -2) == make_rat(-1, 2));
  CHECK(make_rat(-3, -6).get_str() == "1/2");
  CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
}

TEST_CASE("row gcd examples") {
  CHECK(gcd_row_binomials(2) == 2);
  CHECK(gcd_row_binomials(6) == 1);
  CHECK(gcd_row_binomials(7) == 7);
  CHECK(gcd_row_binomials(8) == 2);
  CHECK(gcd_row_binomials(9) == 3);
  CHECK_THROWS_AS(gcd_row_binomials(1), std::domain_error);
}

TEST_CASE("row gcd agrees with a whole-row oracle") {
  for (long n = 2; n <= 80; ++n) {
    Int g = 0;
    for (long j = 1; j < n; ++j) g = gcd(g, binomial_oracle(n, j));
    CHECK(gcd_row_binomials(n) == g);
  }
}

TEST_CASE("prime power classification") {
  auto p9 = prime_power_classify(9);
  REQUIRE(p9.has_value());
  CHECK(p9->p == 3);
  CHECK(p9->exponent == 2);
  auto p7 = prime_power_classify(7);
  REQUIRE(p7.has_value());
  CHECK(p7->p == 7);
  CHECK(p7->exponent == 1);
  CHECK(!prime_power_classify(6).has_value());
  auto p1024 = prime_power_classify(1024);
  REQUIRE(p1024.has_value());
  CHECK(p1024->p == 2);
  CHECK(p1024->exponent == 10);
  CHECK(!prime_power_classify(1000).has_value());
  CHECK_THROWS_AS(prime_power_classify(1), std::domain_error);
}

TEST_CASE("prime power classification against trial factorization") {
  for (long n = 2; n <= 2000; ++n) {
    // Oracle: smallest prime factor, then divide it out completely.
    long p = 0;
    for (long d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        p = d;
        break;
      }
    if (p == 0) p = n;
    long rest = n;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    auto got = prime_power_classify(n);
    if (rest == 1) {
      REQUIRE(got.has_value());
      CHECK(got->p == p);
      CHECK(got->exponent == e);
    } else {
      CHECK(!got.has_value());
    }
    CHECK(is_prime(n) == (rest == 1 && e == 1));
  }
}

TEST_CASE("restricted odd-row gcd examples") {
  CHECK(restricted_gcd_d(3) == 7);
  CHECK(restricted_gcd_d(4) == 3);
  CHECK_THROWS_AS(restricted_gcd_d(2), std::domain_error);
}

TEST_CASE("restricted odd-row gcd against its defining formula") {
  for (long k = 3; k <= 40; ++k) {
    Int g = 2 * k + 1;
    for (long j = 4; j <= 2 * k - 1; ++j)
      g = gcd(g, binomial_oracle(2 * k + 1, 2 * k + 1 - j));
    CHECK(restricted_gcd_d(k) == g);
  }
}

TEST_CASE("restricted gcd equals the full row gcd on odd rows") {
  for (long k = 3; k <= 60; ++k)
    CHECK(restricted_gcd_d(k) == gcd_row_binomials(2 * k + 1));
}

TEST_CASE("extended gcd produces valid certificates") {
  auto bez = extended_gcd_list({Int(6), Int(10), Int(15)});
  CHECK(bez.g == 1);
  CHECK(bez.coeffs.size() == 3);
  CHECK(bez.coeffs[0] * 6 + bez.coeffs[1] * 10 + bez.coeffs[2] * 15 == 1);

  auto single = extended_gcd_list({Int(-8)});
  CHECK(single.g == 8);
  CHECK(single.coeffs[0] * -8 == 8);

  CHECK_THROWS_AS(extended_gcd_list({}), std::domain_error);
  CHECK_THROWS_AS(extended_gcd_list({Int(3), Int(0)}), std::domain_error);
}

TEST_CASE("extended gcd on random lists") {
  psc::sweeps::SplitMix64 rng(20240817);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Int> values;
    const long size = rng.uniform(1, 6);
    for (long t = 0; t < size; ++t) {
      long v = rng.uniform(-50, 50);
      if (v == 0) v = 7;
      values.push_back(v);
    }
    auto bez = extended_gcd_list(values);
    Int g = 0;
    Int combo = 0;
    for (std::size_t t = 0; t < values.size(); ++t) {
      g = gcd(g, values[t]);
      combo += bez.coeffs[t] * values[t];
    }
    CHECK(bez.g > 0);
    CHECK(bez.g == g);
    CHECK(combo == bez.g);
  }
}
