#include "thetalift/arith.hpp"

#include <limits>
#include <numeric>

namespace thetalift {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd64(a, b), b);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error("int64 overflow");
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw Error("divisors: n must be positive");
  std::vector<std::int64_t> lo, hi;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      lo.push_back(d);
      if (d != n / d) hi.push_back(n / d);
    }
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

Integer sigma(unsigned k, std::int64_t n) {
  Integer s = 0, p;
  for (auto d : divisors(n)) {
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), k);
    s += p;
  }
  return s;
}

Rational bernoulli(unsigned n) {
  // Akiyama-Tanigawa.
  std::vector<Rational> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = frac(1, m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
  }
  Rational b = a[0];
  if (n == 1) b = -b;
  return b;
}

Integer binomial(const Integer& n, std::int64_t k) {
  if (k < 0) return 0;
  Integer c = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    c *= n - i;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i + 1));
  }
  return c;
}

Rational power(std::int64_t d, std::int64_t e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d),
                static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  Rational r(1, 1);
  r /= p;
  return r;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::int64_t to_int64(const Rational& x) {
  if (!is_integer(x)) throw Error("expected an integer");
  const Integer& n = x.get_num();
  if (!n.fits_slong_p()) throw Error("integer out of range");
  return n.get_si();
}

Integer floor_q(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

}  // namespace thetalift
