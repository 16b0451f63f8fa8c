#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thetalift/series.hpp"

namespace thetalift {

/// eta^u * prod theta_{d_i}. Construction checks that l + u is even and every
/// d_i is positive.
class ThetaBlockSpec {
 public:
  ThetaBlockSpec(int u, std::vector<int> d);

  int u() const { return u_; }
  const std::vector<int>& d() const { return d_; }
  int ell() const { return static_cast<int>(d_.size()); }
  int weight() const { return (ell() + u_) / 2; }
  /// 2t = sum d_i^2.
  std::int64_t index2() const;
  Rational index() const { return frac(index2(), 2); }
  /// t as an integer; throws when sum d_i^2 is odd.
  std::int64_t index_int() const;
  /// v = (u + 3l)/24.
  Rational order() const { return frac(u_ + 3 * ell(), 24); }
  bool has_integral_order() const { return (u_ + 3 * ell()) % 24 == 0; }
  /// v as an integer; throws "not integral order" otherwise.
  std::int64_t order_int() const;
  std::int64_t sum_d() const;
  std::string to_string() const;

  friend bool operator==(const ThetaBlockSpec&, const ThetaBlockSpec&) = default;

 private:
  int u_;
  std::vector<int> d_;
};

enum class Classification { Cusp, Holomorphic, Weak, WeaklyHolomorphic };
std::string to_string(Classification c);

struct OrdProfile {
  Rational minimum;
  std::vector<Rational> argmin;
  std::vector<Rational> breakpoints;
};

/// B_2 of the fractional part of x.
Rational bar_B2(const Rational& x);
/// k/12 + 1/2 sum B2bar(d_i x).
Rational ord_value(const ThetaBlockSpec& spec, const Rational& x);
OrdProfile ord_profile(const ThetaBlockSpec& spec);
Classification classify_theta_block(const ThetaBlockSpec& spec);

/// eta^u prod theta_{d_i} for any u, with q exponents over qden. Requires
/// 24 | (u + 3l) * qden. trunc is scaled by qden.
FJSeries eta_theta_product(int u, const std::vector<int>& d, std::int64_t qden, std::int64_t trunc);
/// Integral-order theta block over qden 1, computed through q^trunc.
FJSeries build_theta_block(const ThetaBlockSpec& spec, std::int64_t trunc);
/// theta_a theta_b theta_{a+b} / eta over qden 24; trunc scaled by 24.
FJSeries build_theta_quark(int a, int b, std::int64_t trunc);
inline std::int64_t quark_index(int a, int b) { return std::int64_t(a) * a + std::int64_t(a) * b + std::int64_t(b) * b; }

/// Parses "1,1,2" or "1^4,2" into a list of positive integers.
std::vector<int> parse_d_list(const std::string& text);

}  // namespace thetalift
