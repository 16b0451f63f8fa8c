#include "thetalift/blocks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "thetalift/arith.hpp"

namespace thetalift {

ThetaBlockSpec::ThetaBlockSpec(int u, std::vector<int> d) : u_(u), d_(std::move(d)) {
  for (int x : d_)
    if (x <= 0) throw Error("theta arguments must be positive (theta denominators are not supported)");
  if ((ell() + u_) % 2 != 0) throw Error("l + u must be even for integral weight");
  std::sort(d_.begin(), d_.end());
}

std::int64_t ThetaBlockSpec::index2() const {
  std::int64_t s = 0;
  for (int x : d_) s += std::int64_t(x) * x;
  return s;
}

std::int64_t ThetaBlockSpec::index_int() const {
  if (index2() % 2 != 0) throw Error("half-integral index");
  return index2() / 2;
}

std::int64_t ThetaBlockSpec::order_int() const {
  if (!has_integral_order()) throw Error("not integral order");
  return (u_ + 3 * ell()) / 24;
}

std::int64_t ThetaBlockSpec::sum_d() const {
  return std::accumulate(d_.begin(), d_.end(), std::int64_t{0});
}

std::string ThetaBlockSpec::to_string() const {
  std::ostringstream os;
  os << "(" << u_ << ";";
  for (std::size_t i = 0; i < d_.size(); ++i) os << (i ? "," : " ") << d_[i];
  os << ")";
  return os.str();
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Cusp: return "cusp";
    case Classification::Holomorphic: return "holomorphic";
    case Classification::Weak: return "weak";
    case Classification::WeaklyHolomorphic: return "weakly-holomorphic";
  }
  return "?";
}

Rational bar_B2(const Rational& x) {
  Rational f = x - Rational(floor_q(x));
  return f * f - f + frac(1, 6);
}

Rational ord_value(const ThetaBlockSpec& spec, const Rational& x) {
  Rational s = 0;
  for (int d : spec.d()) s += bar_B2(x * d);
  return frac(spec.weight(), 12) + s / 2;
}

OrdProfile ord_profile(const ThetaBlockSpec& spec) {
  OrdProfile out;
  std::int64_t L = 1;
  for (int d : spec.d()) L = lcm64(L, d);
  std::vector<Rational> candidates;
  for (std::int64_t j = 0; j <= L; ++j) {
    out.breakpoints.push_back(frac(j, L));
    candidates.push_back(frac(j, L));
  }
  const std::int64_t two_t = spec.index2();
  if (two_t > 0) {
    for (std::int64_t j = 0; j < L; ++j) {
      const Rational mid = frac(2 * j + 1, 2 * L);
      Rational num = 0;
      for (int d : spec.d()) num += Rational(floor_q(mid * d)) * d + frac(d, 2);
      Rational vertex = num / two_t;
      if (vertex > frac(j, L) && vertex < frac(j + 1, L)) candidates.push_back(vertex);
    }
  }
  bool first = true;
  for (const auto& x : candidates) {
    Rational val = ord_value(spec, x);
    if (first || val < out.minimum) {
      out.minimum = val;
      out.argmin.clear();
      first = false;
    }
    if (val == out.minimum) out.argmin.push_back(x);
  }
  std::sort(out.argmin.begin(), out.argmin.end());
  out.argmin.erase(std::unique(out.argmin.begin(), out.argmin.end()), out.argmin.end());
  return out;
}

Classification classify_theta_block(const ThetaBlockSpec& spec) {
  const std::int64_t v = spec.order_int();
  const Rational m = ord_profile(spec).minimum;
  if (m > 0) return Classification::Cusp;
  if (m >= 0) return Classification::Holomorphic;
  if (v >= 0) return Classification::Weak;
  return Classification::WeaklyHolomorphic;
}

FJSeries eta_theta_product(int u, const std::vector<int>& d, std::int64_t qden, std::int64_t trunc) {
  const std::int64_t ell = static_cast<std::int64_t>(d.size());
  const std::int64_t shift_num = checked_mul(u + 3 * ell, qden);
  if (shift_num % 24 != 0) throw Error("leading exponent not representable with this denominator");
  const std::int64_t shift = shift_num / 24;
  if (shift > trunc) return FJSeries(qden, trunc);

  std::map<int, std::int64_t> mult;
  for (int x : d) ++mult[x];

  // (zeta^x - zeta^-x)^m expanded binomially per distinct x.
  ZetaPoly prefactor = ZetaPoly::constant(1);
  for (const auto& [x, m] : mult) {
    std::vector<ZetaPoly::Term> terms;
    Integer c = 1;
    for (std::int64_t i = 0; i <= m; ++i) {
      terms.emplace_back(x * (m - 2 * i), Rational(i % 2 ? -c : c));
      c *= m - i;
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i + 1));
    }
    prefactor = prefactor * ZetaPoly(std::move(terms));
  }

  const std::int64_t inner = trunc - shift;
  std::vector<AtomFactor> atoms;
  for (std::int64_t j = 1; j * qden <= inner; ++j) {
    atoms.push_back({-1, j * qden, 0, u + ell});
    for (const auto& [x, m] : mult) {
      atoms.push_back({-1, j * qden, 2 * x, m});
      atoms.push_back({-1, j * qden, -2 * x, m});
    }
  }
  FJSeries body = expand_atom_product(atoms, qden, inner);
  FJSeries::Rows rows;
  for (const auto& [q, p] : body.rows()) rows.emplace(q + shift, p * prefactor);
  return FJSeries(qden, trunc, std::move(rows));
}

FJSeries build_theta_block(const ThetaBlockSpec& spec, std::int64_t trunc) {
  spec.order_int();
  return eta_theta_product(spec.u(), spec.d(), 1, trunc);
}

FJSeries build_theta_quark(int a, int b, std::int64_t trunc) {
  if (a <= 0 || b <= 0) throw Error("quark parameters must be positive");
  return eta_theta_product(-1, {a, b, a + b}, 24, trunc);
}

std::vector<int> parse_d_list(const std::string& text) {
  std::vector<int> out;
  if (std::all_of(text.begin(), text.end(), ::isspace)) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) throw Error("empty entry in theta argument list");
    int value = 0, count = 1;
    try {
      auto caret = item.find('^');
      std::size_t used = 0;
      if (caret == std::string::npos) {
        value = std::stoi(item, &used);
        if (used != item.size()) throw Error("");
      } else {
        value = std::stoi(item.substr(0, caret), &used);
        if (used != caret) throw Error("");
        std::string rest = item.substr(caret + 1);
        count = std::stoi(rest, &used);
        if (used != rest.size()) throw Error("");
      }
    } catch (const std::exception&) {
      throw Error("cannot parse theta argument list entry '" + item + "'");
    }
    if (value <= 0 || count < 1) throw Error("theta arguments must be positive");
    out.insert(out.end(), static_cast<std::size_t>(count), value);
  }
  return out;
}

}  // namespace thetalift
