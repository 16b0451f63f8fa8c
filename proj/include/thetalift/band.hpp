#pragma once

#include <cstdint>
#include <vector>

#include "thetalift/series.hpp"

namespace thetalift {

/// Coefficients c(n, r) of eta^u prod theta_{d_i} for 0 <= n <= nmax and
/// |r| <= band. The theta product is formed from the lacunary series of each
/// theta in machine integers (overflow is detected); eta^u is applied with
/// big integers on the band only. Needs integral order and integral index.
class BandExpansion {
 public:
  BandExpansion(int u, const std::vector<int>& d, std::int64_t nmax, std::int64_t band);

  std::int64_t nmax() const { return nmax_; }
  std::int64_t band() const { return band_; }
  /// Throws outside the computed window.
  const Integer& coeff(std::int64_t n, std::int64_t r) const;

 private:
  std::int64_t nmax_, band_;
  std::vector<Integer> coeffs_;
};

}  // namespace thetalift
