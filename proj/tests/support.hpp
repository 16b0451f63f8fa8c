#pragma once

#include <random>
#include <vector>

#include "oracles.hpp"
#include "thetalift/series.hpp"

namespace testsupport {

using thetalift::FJSeries;
using thetalift::Rational;
using thetalift::ZetaPoly;

inline oracle::Series to_oracle(const FJSeries& f) {
  oracle::Series s;
  for (const auto& [q, p] : f.rows())
    for (const auto& [z2, c] : p.terms()) s[{q, z2}] = c;
  return s;
}

/// Random series with integral or small rational coefficients; rows start at
/// qmin and the window is [qmin, trunc].
inline FJSeries random_series(std::mt19937& rng, std::int64_t qden, std::int64_t qmin, std::int64_t trunc,
                              int maxTerms = 8, bool rational = false, bool unitLead = false) {
  std::uniform_int_distribution<std::int64_t> qd(qmin, trunc), zd(-6, 6);
  std::uniform_int_distribution<int> cd(-5, 5), dd(1, 3), nd(0, maxTerms);
  FJSeries::Rows rows;
  auto coef = [&] {
    Rational c(cd(rng));
    if (rational) c = thetalift::frac(cd(rng), dd(rng));
    return c;
  };
  const int count = nd(rng);
  for (int i = 0; i < count; ++i) {
    const std::int64_t q = qd(rng);
    rows[q] = rows[q] + ZetaPoly::monomial(zd(rng), coef());
  }
  if (unitLead) rows[qmin] = ZetaPoly::monomial(zd(rng), Rational(1 + static_cast<int>(rng() % 3)));
  return FJSeries(qden, trunc, std::move(rows));
}

/// Random nonzero Laurent polynomial as a series with a generous window.
inline FJSeries random_laurent(std::mt19937& rng, int maxTerms = 6) {
  std::uniform_int_distribution<std::int64_t> qd(-3, 4), zd(-5, 5);
  std::uniform_int_distribution<int> cd(1, 4), sd(0, 1), nd(1, maxTerms);
  FJSeries::Rows rows;
  const int count = nd(rng);
  for (int i = 0; i < count; ++i) {
    const std::int64_t q = qd(rng);
    rows[q] = rows[q] + ZetaPoly::monomial(2 * zd(rng), Rational(sd(rng) ? cd(rng) : -cd(rng)));
  }
  FJSeries f(1, 40, std::move(rows));
  if (f.empty()) return random_laurent(rng, maxTerms);
  return f;
}

}  // namespace testsupport
