#include "thetalift/hecke.hpp"

#include <cstdlib>

#include "thetalift/arith.hpp"

namespace thetalift {

const FJEntry* FJExpansion::find(const Rational& index) const {
  for (const auto& e : entries)
    if (e.index == index) return &e;
  return nullptr;
}

namespace {

void require_integral_exponents(const FJSeries& phi) {
  if (phi.qden() != 1) throw Error("fractional exponents: V_m needs integral q exponents");
  for (const auto& [q, p] : phi.rows())
    for (const auto& [z2, c] : p.terms())
      if (z2 % 2 != 0) throw Error("fractional exponents: V_m needs integral zeta exponents");
}

}  // namespace

FJSeries apply_Vm(const FJSeries& phi, std::int64_t k, std::int64_t m) {
  if (m < 1) throw Error("V_m needs m >= 1");
  require_integral_exponents(phi);
  if (phi.trunc() < 0) throw Error("window too small");
  const std::int64_t trunc = floor_div(phi.trunc(), m);
  std::map<std::int64_t, std::vector<ZetaPoly::Term>> acc;
  for (std::int64_t d : divisors(m)) {
    const Rational w = power(d, k - 1);
    const std::int64_t d2 = d * d;
    for (const auto& [N, p] : phi.rows()) {
      const std::int64_t scaled = checked_mul(N, d2);
      if (scaled % m != 0) continue;
      const std::int64_t n = scaled / m;
      if (n % d != 0 || n > trunc) continue;
      auto& row = acc[n];
      for (const auto& [z2, c] : p.terms()) row.emplace_back(z2 * d, c * w);
    }
  }
  FJSeries::Rows rows;
  for (auto& [n, terms] : acc) rows.emplace(n, ZetaPoly(std::move(terms)));
  return FJSeries(1, trunc, std::move(rows));
}

Rational eisenstein_constant(std::int64_t k) {
  return -bernoulli(static_cast<unsigned>(k)) / (2 * k);
}

FJSeries eisenstein_series(std::int64_t k, std::int64_t trunc) {
  if (k < 4 || k % 2 != 0) throw Error("Eisenstein series needs even k >= 4");
  FJSeries::Rows rows;
  if (trunc >= 0) rows.emplace(0, ZetaPoly::constant(eisenstein_constant(k)));
  for (std::int64_t n = 1; n <= trunc; ++n)
    rows.emplace(n, ZetaPoly::constant(Rational(sigma(static_cast<unsigned>(k - 1), n))));
  return FJSeries(1, trunc, std::move(rows));
}

FJExpansion grit_fj_expansion(const FJSeries& phi, std::int64_t k, const Rational& t,
                              std::int64_t M, std::int64_t trunc) {
  if (M < 1) throw Error("need at least one Fourier-Jacobi coefficient");
  if (phi.trunc() < checked_mul(M, trunc)) throw Error("window too small");
  FJExpansion out{t, Rational(k), {}};
  const Rational c00 = phi.coeff_scaled(0, 0);
  if (c00 != 0) {
    if (k < 4 || k % 2 != 0)
      throw Error("Eisenstein term needs even weight >= 4 when c(0,0) is nonzero");
    out.entries.push_back({Rational(0), fj_scale(eisenstein_series(k, trunc), c00)});
  }
  for (std::int64_t m = 1; m <= M; ++m)
    out.entries.push_back({t * m, fj_truncate(apply_Vm(phi, k, m), trunc)});
  return out;
}

Rational grit_coefficient(const FJSeries& phi, std::int64_t k, std::int64_t n, std::int64_t r,
                          std::int64_t m) {
  if (m < 1) throw Error("grit_coefficient needs m >= 1");
  if (phi.qden() != 1) throw Error("fractional exponents");
  const std::int64_t g = gcd64(gcd64(std::llabs(n), std::llabs(r)), m);
  Rational s = 0;
  for (std::int64_t d : divisors(g)) {
    const Rational c = phi.coeff_scaled(checked_mul(n, m) / (d * d), 2 * (r / d));
    if (c != 0) s += power(d, k - 1) * c;
  }
  return s;
}

}  // namespace thetalift
