#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace thetalift {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical num/den; the two-argument mpq_class constructor does not reduce.
inline Rational frac(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Laurent polynomial in zeta^(1/2). Exponents are stored doubled, so the
/// key 3 stands for zeta^(3/2).
class ZetaPoly {
 public:
  using Term = std::pair<std::int64_t, Rational>;

  ZetaPoly() = default;
  /// Sorts, merges equal exponents and drops zeros.
  explicit ZetaPoly(std::vector<Term> terms);
  static ZetaPoly monomial(std::int64_t z2, const Rational& c);
  static ZetaPoly constant(const Rational& c) { return monomial(0, c); }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  Rational coeff(std::int64_t z2) const;
  std::int64_t min_z2() const;
  std::int64_t max_z2() const;
  bool is_integral() const;

  ZetaPoly scaled(const Rational& c) const;
  ZetaPoly shifted(std::int64_t dz2) const;
  ZetaPoly dilated(std::int64_t b) const;

  /// Exact quotient, or throws "inexact division".
  ZetaPoly divided_by(const ZetaPoly& den) const;

  ZetaPoly operator-() const;
  friend ZetaPoly operator+(const ZetaPoly& a, const ZetaPoly& b);
  friend ZetaPoly operator-(const ZetaPoly& a, const ZetaPoly& b);
  friend ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b);
  friend bool operator==(const ZetaPoly& a, const ZetaPoly& b);

 private:
  std::vector<Term> terms_;
};

/// Truncated series sum_q P_q(zeta) q^(q/qden). Coefficients are exact for
/// every scaled exponent <= trunc and only those rows are stored.
class FJSeries {
 public:
  using Rows = std::map<std::int64_t, ZetaPoly>;

  FJSeries(std::int64_t qden, std::int64_t trunc);
  /// Drops empty rows and rows beyond trunc.
  FJSeries(std::int64_t qden, std::int64_t trunc, Rows rows);
  static FJSeries one(std::int64_t qden, std::int64_t trunc);

  std::int64_t qden() const { return qden_; }
  std::int64_t trunc() const { return trunc_; }
  const Rows& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  std::size_t term_count() const;

  /// Lowest stored scaled exponent, or trunc + 1 for the zero series.
  std::int64_t min_q() const;
  /// Row at a scaled exponent; nullptr when zero. Throws beyond truncation.
  const ZetaPoly* row(std::int64_t q) const;
  Rational coeff_scaled(std::int64_t q, std::int64_t z2) const;
  /// Coefficient of q^n zeta^r for rational n and r.
  Rational coeff(const Rational& n, const Rational& r) const;
  bool is_integral() const;

  friend bool operator==(const FJSeries& a, const FJSeries& b);

 private:
  std::int64_t qden_;
  std::int64_t trunc_;
  Rows rows_;
};

/// (1 + sign q^(qexp/qden) zeta^(z2/2))^power.
struct AtomFactor {
  int sign = -1;
  std::int64_t qexp = 0;
  std::int64_t z2 = 0;
  std::int64_t power = 1;
};

FJSeries fj_add(const FJSeries& f, const FJSeries& g);
FJSeries fj_sub(const FJSeries& f, const FJSeries& g);
FJSeries fj_neg(const FJSeries& f);
FJSeries fj_scale(const FJSeries& f, const Rational& c);
FJSeries fj_mul(const FJSeries& f, const FJSeries& g);
FJSeries fj_exact_div(const FJSeries& num, const FJSeries& den);
/// q -> q^a, zeta -> zeta^b.
FJSeries fj_dilate(const FJSeries& f, std::int64_t a, std::int64_t b);
/// Multiplies by c q^(dq/qden) zeta^(dz2/2).
FJSeries fj_shift(const FJSeries& f, std::int64_t dq, std::int64_t dz2, const Rational& c = 1);
/// Lowers the truncation to trunc (no-op if already lower).
FJSeries fj_truncate(const FJSeries& f, std::int64_t trunc);
/// Re-expresses f with denominator new_qden. Throws if an exponent does not fit.
FJSeries fj_rescale(const FJSeries& f, std::int64_t new_qden);
/// Smallest denominator dividing qden that still holds every exponent.
FJSeries fj_normalize_qden(const FJSeries& f);
FJSeries expand_atom_product(std::span<const AtomFactor> factors, std::int64_t qden,
                             std::int64_t trunc);
Rational fj_coeff(const FJSeries& f, const Rational& n, const Rational& r);

/// True when f and g agree on every scaled exponent <= upto.
bool fj_equal_through(const FJSeries& f, const FJSeries& g, std::int64_t upto);

inline FJSeries operator+(const FJSeries& f, const FJSeries& g) { return fj_add(f, g); }
inline FJSeries operator-(const FJSeries& f, const FJSeries& g) { return fj_sub(f, g); }
inline FJSeries operator*(const FJSeries& f, const FJSeries& g) { return fj_mul(f, g); }

}  // namespace thetalift
