#include "thetalift/band.hpp"

#include <cmath>

#include "thetalift/arith.hpp"

namespace thetalift {

BandExpansion::BandExpansion(int u, const std::vector<int>& d, std::int64_t nmax, std::int64_t band)
    : nmax_(nmax), band_(band) {
  const std::int64_t ell = static_cast<std::int64_t>(d.size());
  if ((u + 3 * ell) % 24 != 0) throw Error("not integral order");
  std::int64_t sum_d = 0, two_t = 0;
  for (int x : d) {
    if (x <= 0) throw Error("theta arguments must be positive");
    sum_d += x;
    two_t += std::int64_t(x) * x;
  }
  if (sum_d % 2 != 0) throw Error("band expansion needs integral zeta exponents");
  if (nmax < 0 || band < 0) throw Error("window must be nonnegative");

  // Theta exponents are S/8 with S a sum of odd squares; n = (3S + u)/24 + j.
  const std::int64_t Smax = floor_div(24 * nmax - u, 3);
  const std::int64_t W =
      static_cast<std::int64_t>(std::ceil(std::sqrt(double(two_t) * double(std::max<std::int64_t>(Smax, 0))))) + 1;
  const std::int64_t width = 2 * W + 1;
  const std::size_t rows = static_cast<std::size_t>(std::max<std::int64_t>(Smax + 1, 0));
  std::vector<std::int64_t> cur(rows * static_cast<std::size_t>(width), 0), next;
  std::vector<char> live(rows, 0), nlive;
  if (rows > 0) {
    cur[static_cast<std::size_t>(W)] = 1;
    live[0] = 1;
  }
  for (int dv : d) {
    next.assign(cur.size(), 0);
    nlive.assign(rows, 0);
    for (std::int64_t S = 0; S <= Smax; ++S) {
      if (!live[static_cast<std::size_t>(S)]) continue;
      const std::int64_t* src = &cur[static_cast<std::size_t>(S * width)];
      for (std::int64_t x = 1; S + x * x <= Smax; x += 2) {
        const std::int64_t S2 = S + x * x;
        // x and -x: sign (-1)^((x-1)/2) and (-1)^((-x-1)/2) = -(that).
        const std::int64_t sgn = ((x - 1) / 2) % 2 == 0 ? 1 : -1;
        std::int64_t* dst = &next[static_cast<std::size_t>(S2 * width)];
        bool any = false;
        for (std::int64_t c = 0; c < width; ++c) {
          const std::int64_t val = src[c];
          if (val == 0) continue;
          const std::int64_t shift = dv * x;
          if (c + shift < width) {
            if (__builtin_add_overflow(dst[c + shift], sgn * val, &dst[c + shift]))
              throw Error("band expansion overflow");
            any = true;
          }
          if (c - shift >= 0) {
            if (__builtin_add_overflow(dst[c - shift], -sgn * val, &dst[c - shift]))
              throw Error("band expansion overflow");
            any = true;
          }
        }
        if (any) nlive[static_cast<std::size_t>(S2)] = 1;
      }
    }
    cur.swap(next);
    live.swap(nlive);
  }

  // prod (1 - q^j)^u through q^nmax.
  std::vector<Integer> eta(static_cast<std::size_t>(nmax + 1), 0);
  eta[0] = 1;
  for (std::int64_t j = 1; j <= nmax; ++j) {
    const std::int64_t reps = u < 0 ? -u : u;
    for (std::int64_t rep = 0; rep < reps; ++rep) {
      if (u > 0) {
        for (std::int64_t i = nmax; i >= j; --i) eta[i] -= eta[i - j];
      } else {
        for (std::int64_t i = j; i <= nmax; ++i) eta[i] += eta[i - j];
      }
    }
  }

  coeffs_.assign(static_cast<std::size_t>((nmax + 1) * (2 * band + 1)), 0);
  for (std::int64_t n = 0; n <= nmax; ++n) {
    for (std::int64_t j = 0; j <= n; ++j) {
      const std::int64_t num = 24 * (n - j) - u;
      if (num < 0 || num % 3 != 0) continue;
      const std::int64_t S = num / 3;
      if (S > Smax || !live[static_cast<std::size_t>(S)]) continue;
      const Integer& e = eta[static_cast<std::size_t>(j)];
      if (e == 0) continue;
      for (std::int64_t r = -band; r <= band; ++r) {
        const std::int64_t c = 2 * r + W;
        if (c < 0 || c >= width) continue;
        const std::int64_t a = cur[static_cast<std::size_t>(S * width + c)];
        if (a == 0) continue;
        Integer& dst = coeffs_[static_cast<std::size_t>(n * (2 * band + 1) + (r + band))];
        if (a > 0)
          mpz_addmul_ui(dst.get_mpz_t(), e.get_mpz_t(), static_cast<unsigned long>(a));
        else
          mpz_submul_ui(dst.get_mpz_t(), e.get_mpz_t(), static_cast<unsigned long>(-a));
      }
    }
  }
}

const Integer& BandExpansion::coeff(std::int64_t n, std::int64_t r) const {
  if (n > nmax_ || n < 0 || r < -band_ || r > band_) throw Error("beyond band window");
  return coeffs_[static_cast<std::size_t>(n * (2 * band_ + 1) + (r + band_))];
}

}  // namespace thetalift
