#pragma once

// Independent reference implementations used only by the tests. They work on
// plain maps keyed by exponents and share no code with the library beyond
// the GMP types.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using Key = std::pair<std::int64_t, std::int64_t>;  // (scaled q, doubled zeta)
using Series = std::map<Key, mpq_class>;

inline void prune(Series& s) {
  for (auto it = s.begin(); it != s.end();) it = it->second == 0 ? s.erase(it) : std::next(it);
}

/// Schoolbook product keeping scaled q exponents <= qmax.
inline Series multiply(const Series& a, const Series& b, std::int64_t qmax) {
  Series out;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) {
      const std::int64_t q = ka.first + kb.first;
      if (q <= qmax) out[{q, ka.second + kb.second}] += va * vb;
    }
  prune(out);
  return out;
}

/// theta_d from its lacunary sum: sum over odd x of (-1)^((x-1)/2) q^(x^2/8)
/// zeta^(d x/2), both signs of x. q exponents over 8, zeta doubled.
inline Series theta_lacunary(int d, std::int64_t qmax8) {
  Series s;
  for (std::int64_t x = 1; x * x <= qmax8; x += 2) {
    const int sign = ((x - 1) / 2) % 2 == 0 ? 1 : -1;
    s[{x * x, d * x}] += sign;
    s[{x * x, -d * x}] -= sign;
  }
  prune(s);
  return s;
}

/// eta / q^(1/24) from Euler's pentagonal theorem, exponents in q (not scaled).
inline std::vector<mpz_class> eta_pentagonal(std::int64_t nmax) {
  std::vector<mpz_class> c(static_cast<std::size_t>(nmax + 1), 0);
  for (std::int64_t k = -nmax; k <= nmax; ++k) {
    const std::int64_t e = k * (3 * k - 1) / 2;
    if (e >= 0 && e <= nmax) c[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
  }
  return c;
}

/// Power series inverse of a series with constant term 1.
inline std::vector<mpz_class> inverse_unit(const std::vector<mpz_class>& a) {
  std::vector<mpz_class> b(a.size(), 0);
  b[0] = 1;
  for (std::size_t n = 1; n < a.size(); ++n) {
    mpz_class s = 0;
    for (std::size_t i = 1; i <= n; ++i) s += a[i] * b[n - i];
    b[n] = -s;
  }
  return b;
}

/// eta^u prod theta_{d_i} for integral order, in integral q exponents (qden 1)
/// through q^nmax, built from the lacunary theta sums and pentagonal eta.
inline Series theta_block(int u, const std::vector<int>& d, std::int64_t nmax) {
  // Work with q^(1/24): theta contributes q^(x^2/8) = q^(3 x^2 / 24).
  const std::int64_t qmax24 = 24 * nmax - u;  // bound for the theta part (eta part starts at u/24)
  Series th = {{{0, 0}, 1}};
  for (int x : d) {
    Series t8 = theta_lacunary(x, qmax24 / 3);
    Series t24;
    for (const auto& [k, c] : t8) t24[{3 * k.first, k.second}] = c;
    th = multiply(th, t24, qmax24);
  }
  auto eta = eta_pentagonal(nmax + 1);
  std::vector<mpz_class> etau(eta.size(), 0);
  etau[0] = 1;
  const auto base = u >= 0 ? eta : inverse_unit(eta);
  for (int i = 0; i < std::abs(u); ++i) {
    std::vector<mpz_class> next(eta.size(), 0);
    for (std::size_t a = 0; a < eta.size(); ++a)
      for (std::size_t b = 0; a + b < eta.size(); ++b) next[a + b] += etau[a] * base[b];
    etau = next;
  }
  Series out;
  for (const auto& [k, c] : th) {
    for (std::size_t j = 0; j < etau.size(); ++j) {
      const std::int64_t q24 = k.first + u + 24 * static_cast<std::int64_t>(j);
      if (q24 % 24 != 0) continue;
      const std::int64_t n = q24 / 24;
      if (n <= nmax) out[{n, k.second}] += c * etau[j];
    }
  }
  prune(out);
  return out;
}

inline mpq_class coeff(const Series& s, std::int64_t q, std::int64_t z2) {
  auto it = s.find({q, z2});
  return it == s.end() ? mpq_class(0) : it->second;
}

/// phi | V_m by the double sum, integral exponents with z2 = 2r.
inline Series hecke_Vm(const Series& phi, std::int64_t k, std::int64_t m, std::int64_t nmax,
                       std::int64_t rmax) {
  Series out;
  for (std::int64_t n = -nmax; n <= nmax; ++n)
    for (std::int64_t r = -rmax; r <= rmax; ++r) {
      mpq_class s = 0;
      for (std::int64_t d = 1; d <= m; ++d) {
        if (m % d || n % d || r % d) continue;
        mpq_class w = 1;
        if (k - 1 >= 0)
          for (std::int64_t i = 0; i < k - 1; ++i) w *= d;
        else
          for (std::int64_t i = 0; i < 1 - k; ++i) w /= d;
        s += w * coeff(phi, n * m / (d * d), 2 * (r / d));
      }
      if (s != 0) out[{n, 2 * r}] = s;
    }
  return out;
}

/// Three-variable truncated series: key (xi, q, zeta) with integral q and r.
using Tri = std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, mpq_class>;

/// prod over m >= 1 and (n, r) of (1 - q^n zeta^r xi^m)^c(nm, r), expanded
/// factor by factor in xi up to xi^M. c is read from psi (keys (n, 2r)).
/// Terms of xi-degree j are kept for q <= qmax + (M - j) * slack, where slack
/// bounds the drop in q per unit of xi-degree of any factor.
inline Tri borcherds_product_direct(const Series& psi, std::int64_t M, std::int64_t qmax, std::int64_t slack) {
  Tri acc = {{{0, 0, 0}, 1}};
  auto keep = [&](std::int64_t j, std::int64_t q) { return j <= M && q <= qmax + (M - j) * slack; };
  for (std::int64_t m = 1; m <= M; ++m) {
    for (const auto& [key, c] : psi) {
      const std::int64_t nm = key.first, r = key.second / 2;
      if (nm % m) continue;
      const std::int64_t n = nm / m;
      if (!keep(m, n)) continue;
      if (c.get_den() != 1) throw std::runtime_error("non-integral exponent");
      const mpz_class e = c.get_num();
      // (1 - X)^e as a polynomial in X up to X^(M/m).
      std::vector<mpq_class> binom;
      mpq_class b = 1;
      for (std::int64_t i = 0; i * m <= M; ++i) {
        binom.push_back(i % 2 == 0 ? b : mpq_class(-b));
        b = b * (mpq_class(e) - i) / (i + 1);
      }
      Tri next;
      for (const auto& [k, v] : acc) {
        const auto& [j, q, z] = k;
        for (std::size_t i = 0; i < binom.size(); ++i) {
          const std::int64_t J = j + static_cast<std::int64_t>(i) * m;
          const std::int64_t Q = q + static_cast<std::int64_t>(i) * n;
          if (!keep(J, Q) || binom[i] == 0) continue;
          next[{J, Q, z + static_cast<std::int64_t>(i) * r}] += v * binom[i];
        }
      }
      for (auto it = next.begin(); it != next.end();) it = it->second == 0 ? next.erase(it) : std::next(it);
      acc.swap(next);
    }
  }
  return acc;
}

/// Extreme points of conv(points) (plus the ray in +n when withRay) by testing
/// every point against every triangle and segment of the others.
struct Pt {
  mpq_class n, r;
  bool operator<(const Pt& o) const { return r != o.r ? r < o.r : n < o.n; }
  bool operator==(const Pt& o) const { return n == o.n && r == o.r; }
};

inline mpq_class cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.r - o.r) * (b.n - o.n) - (a.n - o.n) * (b.r - o.r);
}

inline bool on_segment(const Pt& p, const Pt& a, const Pt& b) {
  return cross(a, b, p) == 0 && std::min(a.n, b.n) <= p.n && p.n <= std::max(a.n, b.n) &&
         std::min(a.r, b.r) <= p.r && p.r <= std::max(a.r, b.r);
}

inline bool in_triangle(const Pt& p, const Pt& a, const Pt& b, const Pt& c) {
  if (cross(a, b, c) == 0) return on_segment(p, a, b) || on_segment(p, b, c) || on_segment(p, a, c);
  const mpq_class d1 = cross(a, b, p), d2 = cross(b, c, p), d3 = cross(c, a, p);
  const bool neg = d1 < 0 || d2 < 0 || d3 < 0, pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(neg && pos);
}

inline std::vector<Pt> brute_extreme_points(std::vector<Pt> pts, bool withRay) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Pt> cloud = pts;
  if (withRay)
    for (const auto& p : pts) cloud.push_back({p.n + 1000000, p.r});
  std::vector<Pt> out;
  for (const auto& p : pts) {
    bool inside = false;
    const std::size_t N = cloud.size();
    for (std::size_t i = 0; i < N && !inside; ++i) {
      if (cloud[i] == p) continue;
      for (std::size_t j = i; j < N && !inside; ++j) {
        if (cloud[j] == p) continue;
        for (std::size_t k = j; k < N && !inside; ++k) {
          if (cloud[k] == p) continue;
          inside = in_triangle(p, cloud[i], cloud[j], cloud[k]);
        }
      }
    }
    if (!inside) out.push_back(p);
  }
  return out;
}

}  // namespace oracle
