#include <doctest.h>

#include "thetalift/arith.hpp"

using namespace thetalift;

TEST_CASE("integer division helpers round toward the right side") {
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, 2) == 3);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(mod_pos(-1, 5) == 4);
  CHECK(gcd64(-12, 18) == 6);
  CHECK(lcm64(4, 6) == 12);
  CHECK_THROWS_AS(checked_mul(std::int64_t(1) << 40, std::int64_t(1) << 40), Error);
}

TEST_CASE("divisor sums") {
  CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(sigma(0, 12) == 6);
  CHECK(sigma(1, 12) == 28);
  CHECK(sigma(3, 2) == 9);
  for (std::int64_t n = 1; n <= 60; ++n) {
    Integer s = 0;
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0) s += d * d;
    CHECK(sigma(2, n) == s);
  }
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == frac(-1, 2));
  CHECK(bernoulli(2) == frac(1, 6));
  CHECK(bernoulli(4) == frac(-1, 30));
  CHECK(bernoulli(12) == frac(-691, 2730));
  CHECK(bernoulli(7) == 0);
}

TEST_CASE("generalized binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(-1, 5) == -1);
  CHECK(binomial(-3, 2) == 6);
  CHECK(binomial(Integer(100), 50) == Integer("100891344545564193334812497256"));
  // Pascal's rule over negative tops.
  for (int n = -6; n <= 6; ++n)
    for (int k = 1; k <= 6; ++k) CHECK(binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1));
}

TEST_CASE("powers and conversions") {
  CHECK(power(2, 10) == 1024);
  CHECK(power(3, -2) == frac(1, 9));
  CHECK(to_int64(Rational(-17)) == -17);
  CHECK_THROWS_AS(to_int64(frac(1, 2)), Error);
  CHECK(is_integer(frac(4, 2)));
  CHECK(floor_q(frac(-7, 2)) == -4);
}
