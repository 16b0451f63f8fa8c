#include "thetalift/series.hpp"

#include <algorithm>
#include <tuple>

#include "thetalift/arith.hpp"

namespace thetalift {

namespace {

bool integral(const Rational& c) { return c.get_den() == 1; }

// Dense coefficient buffer over a fixed doubled-exponent range. Integer
// products go through mpz_addmul; rationals only when needed.
class DenseAccumulator {
 public:
  DenseAccumulator(std::int64_t lo, std::int64_t hi)
      : lo_(lo), ints_(static_cast<std::size_t>(hi - lo + 1)) {}

  void add_product(const ZetaPoly& a, const ZetaPoly& b, std::int64_t shift = 0) {
    if (a.is_integral() && b.is_integral()) {
      for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
          mpz_addmul(ints_[idx(ea + eb + shift)].get_mpz_t(), mpq_numref(ca.get_mpq_t()),
                     mpq_numref(cb.get_mpq_t()));
      return;
    }
    ensure_rats();
    for (const auto& [ea, ca] : a.terms())
      for (const auto& [eb, cb] : b.terms()) rats_[idx(ea + eb + shift)] += ca * cb;
  }

  void add_scaled(const ZetaPoly& a, const Integer& c, std::int64_t shift) {
    if (a.is_integral()) {
      for (const auto& [e, v] : a.terms())
        mpz_addmul(ints_[idx(e + shift)].get_mpz_t(), mpq_numref(v.get_mpq_t()), c.get_mpz_t());
      return;
    }
    ensure_rats();
    for (const auto& [e, v] : a.terms()) rats_[idx(e + shift)] += v * c;
  }

  void add_scaled(const ZetaPoly& a, const Rational& c, std::int64_t shift) {
    if (integral(c)) {
      add_scaled(a, Integer(c.get_num()), shift);
      return;
    }
    ensure_rats();
    for (const auto& [e, v] : a.terms()) rats_[idx(e + shift)] += v * c;
  }

  ZetaPoly finish() {
    std::vector<ZetaPoly::Term> out;
    for (std::size_t i = 0; i < ints_.size(); ++i) {
      Rational v = rats_.empty() ? Rational(ints_[i]) : rats_[i] + ints_[i];
      if (v != 0) out.emplace_back(lo_ + static_cast<std::int64_t>(i), std::move(v));
    }
    return ZetaPoly(std::move(out));
  }

 private:
  std::size_t idx(std::int64_t e) const { return static_cast<std::size_t>(e - lo_); }
  void ensure_rats() {
    if (rats_.empty()) rats_.resize(ints_.size());
  }

  std::int64_t lo_;
  std::vector<Integer> ints_;
  std::vector<Rational> rats_;
};

void require_same_qden(const FJSeries& f, const FJSeries& g) {
  if (f.qden() != g.qden()) throw Error("denominator mismatch");
}

struct Range {
  std::int64_t lo, hi;
  void cover(std::int64_t a, std::int64_t b) {
    lo = std::min(lo, a);
    hi = std::max(hi, b);
  }
};

}  // namespace

// ---------------------------------------------------------------- ZetaPoly

ZetaPoly::ZetaPoly(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().first == t.first)
      terms_.back().second += t.second;
    else
      terms_.push_back(std::move(t));
  }
  std::erase_if(terms_, [](const Term& t) { return t.second == 0; });
}

ZetaPoly ZetaPoly::monomial(std::int64_t z2, const Rational& c) {
  ZetaPoly p;
  if (c != 0) p.terms_.emplace_back(z2, c);
  return p;
}

Rational ZetaPoly::coeff(std::int64_t z2) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), z2,
                             [](const Term& t, std::int64_t e) { return t.first < e; });
  if (it != terms_.end() && it->first == z2) return it->second;
  return 0;
}

std::int64_t ZetaPoly::min_z2() const {
  if (terms_.empty()) throw Error("min_z2 of zero polynomial");
  return terms_.front().first;
}

std::int64_t ZetaPoly::max_z2() const {
  if (terms_.empty()) throw Error("max_z2 of zero polynomial");
  return terms_.back().first;
}

bool ZetaPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return integral(t.second); });
}

ZetaPoly ZetaPoly::scaled(const Rational& c) const {
  ZetaPoly p;
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& [e, v] : terms_) p.terms_.emplace_back(e, v * c);
  return p;
}

ZetaPoly ZetaPoly::shifted(std::int64_t dz2) const {
  ZetaPoly p = *this;
  for (auto& t : p.terms_) t.first += dz2;
  return p;
}

ZetaPoly ZetaPoly::dilated(std::int64_t b) const {
  if (b <= 0) throw Error("dilation factor must be positive");
  ZetaPoly p = *this;
  for (auto& t : p.terms_) t.first = checked_mul(t.first, b);
  return p;
}

ZetaPoly ZetaPoly::divided_by(const ZetaPoly& den) const {
  if (den.empty()) throw Error("division by zero polynomial");
  if (empty()) return {};
  const std::int64_t lowest = min_z2() - den.min_z2();
  const std::int64_t dtop = den.max_z2();
  const Rational& lead = den.terms_.back().second;
  std::map<std::int64_t, Rational> rem;
  for (const auto& [e, v] : terms_) rem.emplace(e, v);
  std::vector<Term> quot;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const std::int64_t e = top->first - dtop;
    if (e < lowest) throw Error("inexact division");
    Rational c = top->second / lead;
    for (const auto& [de, dv] : den.terms_) {
      auto [it, fresh] = rem.try_emplace(e + de, 0);
      it->second -= c * dv;
      if (it->second == 0) rem.erase(it);
    }
    quot.emplace_back(e, std::move(c));
  }
  return ZetaPoly(std::move(quot));
}

ZetaPoly ZetaPoly::operator-() const { return scaled(-1); }

ZetaPoly operator+(const ZetaPoly& a, const ZetaPoly& b) {
  std::vector<ZetaPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      Rational s = i->second + j->second;
      if (s != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  ZetaPoly p;
  p.terms_ = std::move(out);
  return p;
}

ZetaPoly operator-(const ZetaPoly& a, const ZetaPoly& b) { return a + (-b); }

ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b) {
  if (a.empty() || b.empty()) return {};
  DenseAccumulator acc(a.min_z2() + b.min_z2(), a.max_z2() + b.max_z2());
  acc.add_product(a, b);
  return acc.finish();
}

bool operator==(const ZetaPoly& a, const ZetaPoly& b) { return a.terms_ == b.terms_; }

// ---------------------------------------------------------------- FJSeries

FJSeries::FJSeries(std::int64_t qden, std::int64_t trunc) : qden_(qden), trunc_(trunc) {
  if (qden <= 0) throw Error("qden must be positive");
}

FJSeries::FJSeries(std::int64_t qden, std::int64_t trunc, Rows rows)
    : FJSeries(qden, trunc) {
  rows_ = std::move(rows);
  std::erase_if(rows_, [trunc](const auto& kv) { return kv.first > trunc || kv.second.empty(); });
}

FJSeries FJSeries::one(std::int64_t qden, std::int64_t trunc) {
  return FJSeries(qden, trunc, {{0, ZetaPoly::constant(1)}});
}

std::size_t FJSeries::term_count() const {
  std::size_t n = 0;
  for (const auto& [q, p] : rows_) n += p.size();
  return n;
}

std::int64_t FJSeries::min_q() const { return rows_.empty() ? trunc_ + 1 : rows_.begin()->first; }

const ZetaPoly* FJSeries::row(std::int64_t q) const {
  if (q > trunc_) throw Error("beyond truncation");
  auto it = rows_.find(q);
  return it == rows_.end() ? nullptr : &it->second;
}

Rational FJSeries::coeff_scaled(std::int64_t q, std::int64_t z2) const {
  const ZetaPoly* p = row(q);
  return p ? p->coeff(z2) : Rational(0);
}

Rational FJSeries::coeff(const Rational& n, const Rational& r) const {
  Rational qs = n * qden_;
  if (qs > trunc_) throw Error("beyond truncation");
  Rational z2 = r * 2;
  if (!is_integer(qs) || !is_integer(z2)) return 0;
  return coeff_scaled(to_int64(qs), to_int64(z2));
}

bool FJSeries::is_integral() const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [](const auto& kv) { return kv.second.is_integral(); });
}

bool operator==(const FJSeries& a, const FJSeries& b) {
  return a.qden_ == b.qden_ && a.trunc_ == b.trunc_ && a.rows_ == b.rows_;
}

// ---------------------------------------------------------------- operations

FJSeries fj_add(const FJSeries& f, const FJSeries& g) {
  require_same_qden(f, g);
  const std::int64_t trunc = std::min(f.trunc(), g.trunc());
  FJSeries::Rows rows;
  for (const auto& [q, p] : f.rows())
    if (q <= trunc) rows.emplace(q, p);
  for (const auto& [q, p] : g.rows()) {
    if (q > trunc) continue;
    auto [it, fresh] = rows.try_emplace(q, p);
    if (!fresh) it->second = it->second + p;
  }
  return FJSeries(f.qden(), trunc, std::move(rows));
}

FJSeries fj_neg(const FJSeries& f) { return fj_scale(f, -1); }

FJSeries fj_sub(const FJSeries& f, const FJSeries& g) { return fj_add(f, fj_neg(g)); }

FJSeries fj_scale(const FJSeries& f, const Rational& c) {
  FJSeries::Rows rows;
  if (c != 0)
    for (const auto& [q, p] : f.rows()) rows.emplace(q, p.scaled(c));
  return FJSeries(f.qden(), f.trunc(), std::move(rows));
}

FJSeries fj_mul(const FJSeries& f, const FJSeries& g) {
  require_same_qden(f, g);
  const std::int64_t trunc = std::min(f.trunc() + g.min_q(), g.trunc() + f.min_q());
  std::map<std::int64_t, Range> ranges;
  for (const auto& [a, pa] : f.rows()) {
    for (const auto& [b, pb] : g.rows()) {
      if (a + b > trunc) break;
      const std::int64_t lo = pa.min_z2() + pb.min_z2(), hi = pa.max_z2() + pb.max_z2();
      auto [it, fresh] = ranges.try_emplace(a + b, Range{lo, hi});
      if (!fresh) it->second.cover(lo, hi);
    }
  }
  std::map<std::int64_t, DenseAccumulator> accs;
  for (const auto& [s, r] : ranges) accs.emplace(s, DenseAccumulator(r.lo, r.hi));
  for (const auto& [a, pa] : f.rows()) {
    for (const auto& [b, pb] : g.rows()) {
      if (a + b > trunc) break;
      accs.at(a + b).add_product(pa, pb);
    }
  }
  FJSeries::Rows rows;
  for (auto& [s, acc] : accs) rows.emplace(s, acc.finish());
  return FJSeries(f.qden(), trunc, std::move(rows));
}

FJSeries fj_exact_div(const FJSeries& num, const FJSeries& den) {
  require_same_qden(num, den);
  if (den.empty()) throw Error("division by zero series");
  const std::int64_t a = den.min_q();
  const ZetaPoly& lead = den.rows().begin()->second;
  const std::int64_t qmin = num.min_q() - a;
  const std::int64_t trunc = std::min(num.trunc() - a, den.trunc() - a + qmin);
  FJSeries::Rows quot;
  for (std::int64_t s = qmin; s <= trunc; ++s) {
    // residual = num_{s+a} - sum_{j<s} quot_j den_{s+a-j}
    ZetaPoly residual;
    if (const ZetaPoly* p = num.row(s + a)) residual = *p;
    bool any = false;
    Range range{0, 0};
    auto note = [&](std::int64_t lo, std::int64_t hi) {
      if (!any) range = {lo, hi};
      else range.cover(lo, hi);
      any = true;
    };
    for (const auto& [j, qj] : quot) {
      auto it = den.rows().find(s + a - j);
      if (it == den.rows().end()) continue;
      note(qj.min_z2() + it->second.min_z2(), qj.max_z2() + it->second.max_z2());
    }
    if (any) {
      if (!residual.empty()) note(residual.min_z2(), residual.max_z2());
      DenseAccumulator acc(range.lo, range.hi);
      acc.add_scaled(residual, Integer(1), 0);
      for (const auto& [j, qj] : quot) {
        auto it = den.rows().find(s + a - j);
        if (it == den.rows().end()) continue;
        acc.add_product(qj, -it->second);
      }
      residual = acc.finish();
    }
    if (residual.empty()) continue;
    quot.emplace(s, residual.divided_by(lead));
  }
  return FJSeries(num.qden(), trunc, std::move(quot));
}

FJSeries fj_dilate(const FJSeries& f, std::int64_t a, std::int64_t b) {
  if (a <= 0 || b <= 0) throw Error("dilation factors must be positive");
  FJSeries::Rows rows;
  for (const auto& [q, p] : f.rows()) rows.emplace(checked_mul(q, a), p.dilated(b));
  return FJSeries(f.qden(), checked_mul(f.trunc() + 1, a) - 1, std::move(rows));
}

FJSeries fj_shift(const FJSeries& f, std::int64_t dq, std::int64_t dz2, const Rational& c) {
  FJSeries::Rows rows;
  if (c != 0)
    for (const auto& [q, p] : f.rows()) rows.emplace(q + dq, p.shifted(dz2).scaled(c));
  return FJSeries(f.qden(), f.trunc() + dq, std::move(rows));
}

FJSeries fj_truncate(const FJSeries& f, std::int64_t trunc) {
  if (trunc >= f.trunc()) return f;
  return FJSeries(f.qden(), trunc, f.rows());
}

FJSeries fj_rescale(const FJSeries& f, std::int64_t new_qden) {
  if (new_qden <= 0) throw Error("qden must be positive");
  if (new_qden == f.qden()) return f;
  const std::int64_t l = lcm64(f.qden(), new_qden);
  const std::int64_t up = l / f.qden(), down = l / new_qden;
  FJSeries::Rows rows;
  for (const auto& [q, p] : f.rows()) {
    const std::int64_t ql = checked_mul(q, up);
    if (ql % down != 0) throw Error("exponent not representable with requested denominator");
    rows.emplace(ql / down, p);
  }
  const std::int64_t trunc = floor_div(checked_mul(f.trunc() + 1, up) - 1, down);
  return FJSeries(new_qden, trunc, std::move(rows));
}

FJSeries fj_normalize_qden(const FJSeries& f) {
  std::int64_t g = f.qden();
  for (const auto& [q, p] : f.rows()) g = gcd64(g, q);
  return fj_rescale(f, f.qden() / g);
}

FJSeries expand_atom_product(std::span<const AtomFactor> factors, std::int64_t qden,
                             std::int64_t trunc) {
  std::map<std::tuple<int, std::int64_t, std::int64_t>, std::int64_t> grouped;
  for (const auto& f : factors) {
    if (f.sign != 1 && f.sign != -1) throw Error("malformed factor: sign must be +1 or -1");
    if (f.qexp < 0) throw Error("malformed factor: negative q exponent");
    if (f.qexp == 0 && f.power < 0) throw Error("malformed factor: inverse of a zeta polynomial");
    if (f.qexp > trunc || f.power == 0) continue;
    grouped[{f.sign, f.qexp, f.z2}] += f.power;
  }

  FJSeries::Rows acc;
  if (trunc >= 0) acc.emplace(0, ZetaPoly::constant(1));

  for (const auto& [key, power] : grouped) {
    const auto& [sign, qexp, z2] = key;
    if (power == 0) continue;
    const std::int64_t imax = qexp == 0 ? power : (power > 0 ? std::min(power, trunc / qexp) : trunc / qexp);
    std::vector<Integer> coef(static_cast<std::size_t>(imax + 1));
    coef[0] = 1;
    for (std::int64_t i = 1; i <= imax; ++i) {
      coef[i] = coef[i - 1] * (power - (i - 1));
      mpz_divexact_ui(coef[i].get_mpz_t(), coef[i].get_mpz_t(), static_cast<unsigned long>(i));
    }
    if (sign < 0)
      for (std::int64_t i = 1; i <= imax; i += 2) coef[i] = -coef[i];

    if (qexp == 0) {
      std::vector<ZetaPoly::Term> terms;
      for (std::int64_t i = 0; i <= imax; ++i) terms.emplace_back(i * z2, Rational(coef[i]));
      const ZetaPoly factor(std::move(terms));
      for (auto& [q, p] : acc) p = p * factor;
      std::erase_if(acc, [](const auto& kv) { return kv.second.empty(); });
      continue;
    }

    std::map<std::int64_t, Range> ranges;
    for (const auto& [q, p] : acc) {
      for (std::int64_t i = 0; i <= imax && q + i * qexp <= trunc; ++i) {
        if (coef[i] == 0) continue;
        const std::int64_t s = q + i * qexp;
        const std::int64_t lo = p.min_z2() + i * z2, hi = p.max_z2() + i * z2;
        auto [it, fresh] = ranges.try_emplace(s, Range{std::min(lo, hi), std::max(lo, hi)});
        if (!fresh) it->second.cover(std::min(lo, hi), std::max(lo, hi));
      }
    }
    std::map<std::int64_t, DenseAccumulator> accs;
    for (const auto& [s, r] : ranges) accs.emplace(s, DenseAccumulator(r.lo, r.hi));
    for (const auto& [q, p] : acc) {
      for (std::int64_t i = 0; i <= imax && q + i * qexp <= trunc; ++i) {
        if (coef[i] == 0) continue;
        accs.at(q + i * qexp).add_scaled(p, coef[i], i * z2);
      }
    }
    FJSeries::Rows next;
    for (auto& [s, a] : accs) {
      ZetaPoly p = a.finish();
      if (!p.empty()) next.emplace(s, std::move(p));
    }
    acc = std::move(next);
  }
  return FJSeries(qden, trunc, std::move(acc));
}

Rational fj_coeff(const FJSeries& f, const Rational& n, const Rational& r) { return f.coeff(n, r); }

bool fj_equal_through(const FJSeries& f, const FJSeries& g, std::int64_t upto) {
  require_same_qden(f, g);
  if (upto > f.trunc() || upto > g.trunc()) throw Error("beyond truncation");
  auto fe = f.rows().upper_bound(upto), ge = g.rows().upper_bound(upto);
  return std::equal(f.rows().begin(), fe, g.rows().begin(), ge);
}

}  // namespace thetalift
