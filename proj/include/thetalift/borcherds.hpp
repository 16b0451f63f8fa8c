#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thetalift/blocks.hpp"
#include "thetalift/hecke.hpp"
#include "thetalift/series.hpp"

namespace thetalift {

/// (-1)^v (phi|V_2)/phi through q^trunc, by exact series division.
FJSeries build_psi_division(const ThetaBlockSpec& spec, std::int64_t trunc);
/// The same function assembled from its closed product formula.
FJSeries build_psi_product(const ThetaBlockSpec& spec, std::int64_t trunc);

/// Coefficients c(n, r) of psi with 4tn - r^2 <= 0, keyed by (D, rbar) with
/// D = 4tn - r^2 and rbar the representative of r mod 2t in (-t, t].
struct SingularTable {
  std::int64_t t = 0;
  std::int64_t N0 = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, Integer> rows;

  /// Coefficient for discriminant D <= 0 and any r; 0 when absent.
  Integer at(std::int64_t D, std::int64_t r) const;
  /// Representative singular part as (n, r, c) with |r| <= t and both signs
  /// of r: the rows with D < 0 and the constant term. Rows with D = 0 and
  /// r not divisible by 2t give empty Humbert surfaces and are left out.
  std::vector<std::tuple<std::int64_t, std::int64_t, Integer>> display() const;
  /// Every stored coefficient, including D = 0, is nonnegative.
  bool all_nonnegative() const;
};

/// Representative of r mod 2t in (-t, t].
std::int64_t reduce_r(std::int64_t r, std::int64_t t);

SingularTable singular_table(const FJSeries& psi, std::int64_t t, std::int64_t N0);

struct BorcherdsData {
  Rational A, B, C;
  Integer D0, D1;
  Rational kprime;
  bool characterTrivial = false;
  bool symmetric = false;
  /// Every Humbert multiplicity is nonnegative.
  bool holomorphic = false;
  /// Exponents of eps^a x v_H^b chi_F^f with a mod 24, b mod 2, f mod 2.
  int charEps = 0, charVH = 0, charF = 0;
};

/// Needs psi through q^0 and all polar rows. Throws if tA - tD1 - C != 0.
BorcherdsData borcherds_data(const FJSeries& psi, std::int64_t t, const SingularTable& table);

struct HumbertClass {
  std::int64_t D = 0;
  std::int64_t r = 0;
  Integer multiplicity;
  std::int64_t n0 = 0, r0 = 0, m0 = 1;
};

/// Classes with nonzero multiplicity, ordered by decreasing D.
std::vector<HumbertClass> humbert_divisor(const SingularTable& table);

/// Theta block eta^c(0,0) prod (theta_l/eta)^c(0,l) read from the q^0 row.
ThetaBlockSpec leading_theta_block(const FJSeries& psi);

/// Entries at Jacobi indices C, C + t, ..., C + M t, each through q^trunc.
/// Weight above which borch_fj_expansion refuses to expand: the leading theta
/// block then has about twice this many theta factors.
inline constexpr std::int64_t kMaxExpandWeight = 100000;

FJExpansion borch_fj_expansion(const FJSeries& psi, std::int64_t t, std::int64_t M,
                               std::int64_t trunc);
/// psi truncation that suffices for borch_fj_expansion(psi, t, M, trunc).
std::int64_t borch_required_psi_trunc(const ThetaBlockSpec& spec, std::int64_t M,
                                      std::int64_t trunc);

struct FJMismatch {
  Rational index;
  Rational n, r;
  Rational left, right;
};

struct FJIndexVerdict {
  Rational index;
  bool equal = false;
  /// Compared through q^window.
  Rational window;
};

struct FJComparison {
  bool equal = true;
  std::vector<FJIndexVerdict> indices;
  std::optional<FJMismatch> first;
};

/// Compares the first upTo entries of a against the entry of b with the same
/// index, on the common window.
FJComparison compare_fj(const FJExpansion& a, const FJExpansion& b, std::int64_t upTo);

/// Checks c(n, r) = c(n, -r) = c(n + r + t, r + 2t) on every pair inside the
/// window. Returns an empty string or a description of the first failure.
std::string elliptic_invariance_failure(const FJSeries& psi, std::int64_t t);

struct ParityReduction {
  std::int64_t v = 0;
  std::int64_t beta = 0, w = 0;
  std::optional<std::int64_t> mu;
  int parity = 0;
  int closedForm = 0;
  int tSum = 0;
  int hRoute = 0;
};

/// Parity of D0 for order v three ways; throws if they disagree.
ParityReduction d0_parity_reduced(std::int64_t v);

/// sum over a-subsets of L of (sum e)^2 equals C(2l-2, a-1) sum e_i^2.
bool comb_identity_subset_sum(const std::vector<int>& d, int a);
/// sum over (S_1..S_beta), |S_i| = b_i, of (sum e_{S_i})^2 is a multiple of
/// sum e_i^2.
bool comb_identity_profile(const std::vector<int>& d, const std::vector<int>& b);

}  // namespace thetalift
