#pragma once

#include <cstdint>
#include <vector>

#include "thetalift/series.hpp"

namespace thetalift {

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);
/// Representative of a mod m in [0, m).
std::int64_t mod_pos(std::int64_t a, std::int64_t m);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
/// a * b, throwing on int64 overflow.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Positive divisors in increasing order, n >= 1.
std::vector<std::int64_t> divisors(std::int64_t n);
/// sum of d^k over d | n.
Integer sigma(unsigned k, std::int64_t n);
/// Bernoulli number B_n with B_1 = -1/2.
Rational bernoulli(unsigned n);
/// Generalized binomial coefficient n(n-1)...(n-k+1)/k! for any integer n.
Integer binomial(const Integer& n, std::int64_t k);
/// d^e for d >= 1 and any integer e.
Rational power(std::int64_t d, std::int64_t e);

/// Exact rational -> int64, throws if not an integer in range.
std::int64_t to_int64(const Rational& x);
bool is_integer(const Rational& x);
Integer floor_q(const Rational& x);

}  // namespace thetalift
