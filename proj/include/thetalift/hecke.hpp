#pragma once

#include <cstdint>
#include <vector>

#include "thetalift/series.hpp"

namespace thetalift {

/// Fourier-Jacobi expansion sum_m F_m(tau, z) xi^m where entry index m stands
/// for the Jacobi index m (not m * t). Borcherds expansions start at index
/// C, so index is stored verbatim.
struct FJEntry {
  Rational index;
  FJSeries series;
};

struct FJExpansion {
  Rational t;
  Rational weight;
  std::vector<FJEntry> entries;
  const FJEntry* find(const Rational& index) const;
};

/// phi | V_m. phi must have integral q and zeta exponents.
FJSeries apply_Vm(const FJSeries& phi, std::int64_t k, std::int64_t m);

/// Constant term -B_k/(2k) of the normalized Eisenstein series G_k.
Rational eisenstein_constant(std::int64_t k);
FJSeries eisenstein_series(std::int64_t k, std::int64_t trunc);

/// Entries m t for m = 1..M (and the Eisenstein entry m = 0 when present),
/// each through q^trunc. Needs phi through q^(M trunc).
FJExpansion grit_fj_expansion(const FJSeries& phi, std::int64_t k, const Rational& t,
                              std::int64_t M, std::int64_t trunc);

/// Coefficient of Grit(phi) at T = (n, r, m): sum over delta | (n, r, m) of
/// delta^(k-1) c(nm/delta^2, r/delta).
Rational grit_coefficient(const FJSeries& phi, std::int64_t k, std::int64_t n, std::int64_t r,
                          std::int64_t m);

}  // namespace thetalift
