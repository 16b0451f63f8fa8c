#include "thetalift/borcherds.hpp"

#include <algorithm>
#include <sstream>

#include "thetalift/arith.hpp"

namespace thetalift {

namespace {

void require_psi_input(const ThetaBlockSpec& spec) {
  const std::int64_t v = spec.order_int();
  if (v < 1) throw Error("psi needs a theta block of positive order");
  if (spec.sum_d() % 2 != 0) throw Error("sum of theta arguments must be even");
}

ZetaPoly theta_prefactor(const std::vector<int>& d, int sign) {
  ZetaPoly p = ZetaPoly::constant(1);
  for (int x : d) p = p * ZetaPoly({{x, Rational(1)}, {-x, Rational(sign)}});
  return p;
}

// prod_j (1 + s q^(j qstep / qden))^(2k) (1 + s q^(..) zeta^(+-d_i)) over the
// given exponent set.
FJSeries signed_atoms(const std::vector<int>& d, std::int64_t k2, int sign, std::int64_t qden,
                      bool odd_only, std::int64_t trunc) {
  std::vector<AtomFactor> atoms;
  for (std::int64_t j = 1; j <= trunc; ++j) {
    if (odd_only && j % 2 == 0) continue;
    atoms.push_back({sign, j, 0, k2});
    for (int x : d) {
      atoms.push_back({sign, j, 2 * x, 1});
      atoms.push_back({sign, j, -2 * x, 1});
    }
  }
  return expand_atom_product(atoms, qden, trunc);
}

}  // namespace

FJSeries build_psi_division(const ThetaBlockSpec& spec, std::int64_t trunc) {
  require_psi_input(spec);
  const std::int64_t v = spec.order_int();
  const std::int64_t P = 2 * (trunc + v);
  const FJSeries phi = build_theta_block(spec, P);
  const FJSeries num = apply_Vm(phi, spec.weight(), 2);
  FJSeries psi = fj_exact_div(num, phi);
  if (v % 2 != 0) psi = fj_neg(psi);
  if (psi.trunc() < trunc) throw Error("window too small");
  psi = fj_truncate(psi, trunc);
  if (psi.min_q() < -(v / 2)) throw Error("pole order exceeds floor(v/2)");
  return psi;
}

FJSeries build_psi_product(const ThetaBlockSpec& spec, std::int64_t trunc) {
  require_psi_input(spec);
  const std::int64_t v = spec.order_int();
  const std::int64_t k = spec.weight();
  const int vsign = v % 2 == 0 ? 1 : -1;

  // (-1)^v 2^(k-1) q^v prod(zeta^(d/2) + zeta^(-d/2)) prod(1+q^j)^(2k)(1+q^j zeta^(+-d))
  FJSeries::Rows first_rows;
  if (trunc - v >= 0) {
    const FJSeries body = signed_atoms(spec.d(), 2 * k, +1, 1, false, trunc - v);
    const ZetaPoly pre = theta_prefactor(spec.d(), +1).scaled(power(2, k - 1) * vsign);
    for (const auto& [q, p] : body.rows()) first_rows.emplace(q + v, p * pre);
  }
  const FJSeries first(1, trunc, std::move(first_rows));

  // 1/2 q^(-v/2) ((-1)^v P_- + P_+), P_pm over half-integral odd exponents.
  const std::int64_t S = 2 * trunc + v;
  const FJSeries pminus = signed_atoms(spec.d(), 2 * k, -1, 2, true, S);
  const FJSeries pplus = signed_atoms(spec.d(), 2 * k, +1, 2, true, S);
  const FJSeries half = fj_scale(fj_add(fj_scale(pminus, vsign), pplus), frac(1, 2));
  const FJSeries second = fj_shift(half, -v, 0);
  for (const auto& [q, p] : second.rows())
    if (q % 2 != 0) throw Error("half-integral q exponents did not cancel");
  return fj_add(first, fj_rescale(second, 1));
}

// ------------------------------------------------------------ singular data

std::int64_t reduce_r(std::int64_t r, std::int64_t t) {
  std::int64_t m = mod_pos(r, 2 * t);
  return m > t ? m - 2 * t : m;
}

Integer SingularTable::at(std::int64_t D, std::int64_t r) const {
  auto it = rows.find({D, reduce_r(r, t)});
  return it == rows.end() ? Integer(0) : it->second;
}

std::vector<std::tuple<std::int64_t, std::int64_t, Integer>> SingularTable::display() const {
  std::map<std::pair<std::int64_t, std::int64_t>, Integer> shown;
  for (const auto& [key, c] : rows) {
    const auto& [D, rbar] = key;
    if (D == 0 && rbar != 0) continue;
    const std::int64_t n = (D + rbar * rbar) / (4 * t);
    shown.emplace(std::make_pair(n, rbar), c);
    shown.emplace(std::make_pair(n, -rbar), c);
  }
  std::vector<std::tuple<std::int64_t, std::int64_t, Integer>> out;
  for (const auto& [key, c] : shown) out.emplace_back(key.first, key.second, c);
  return out;
}

bool SingularTable::all_nonnegative() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& kv) { return kv.second >= 0; });
}

SingularTable singular_table(const FJSeries& psi, std::int64_t t, std::int64_t N0) {
  if (psi.qden() != 1) throw Error("singular table needs integral q exponents");
  if (t < 1) throw Error("index must be positive");
  if (psi.trunc() < t / 4) throw Error("window too small");
  if (psi.min_q() < -N0) throw Error("pole order exceeds bound");
  SingularTable table;
  table.t = t;
  table.N0 = N0;
  std::vector<std::tuple<std::int64_t, std::int64_t, Rational>> others;
  for (const auto& [n, row] : psi.rows()) {
    for (const auto& [z2, c] : row.terms()) {
      if (z2 % 2 != 0) throw Error("singular table needs integral zeta exponents");
      const std::int64_t r = z2 / 2;
      const std::int64_t D = 4 * t * n - r * r;
      if (D > 0) continue;
      if (!is_integer(c)) throw Error("non-integral singular coefficient");
      if (r > -t && r <= t)
        table.rows.emplace(std::make_pair(D, r), c.get_num());
      else
        others.emplace_back(D, r, c);
    }
  }
  for (const auto& [D, r, c] : others) {
    if (Rational(table.at(D, r)) != c) {
      std::ostringstream os;
      os << "elliptic invariance violated at D=" << D << " r=" << r;
      throw Error(os.str());
    }
  }
  return table;
}

BorcherdsData borcherds_data(const FJSeries& psi, std::int64_t t, const SingularTable& table) {
  if (psi.trunc() < 0) throw Error("window too small");
  BorcherdsData out;
  Rational s0 = 0, s1 = 0, s2 = 0, c00 = 0;
  if (const ZetaPoly* row0 = psi.row(0)) {
    for (const auto& [z2, c] : row0->terms()) {
      if (z2 % 2 != 0) throw Error("half-integral zeta exponent in psi");
      const std::int64_t l = z2 / 2;
      s0 += c;
      if (l > 0) s1 += c * l;
      s2 += c * l * l;
      if (l == 0) c00 = c;
    }
  }
  out.A = s0 / 24;
  out.B = s1 / 2;
  out.C = s2 / 4;
  out.kprime = c00 / 2;
  Rational D0 = 0, D1 = 0;
  for (const auto& [n, row] : psi.rows()) {
    if (n >= 0) break;
    D0 += Rational(sigma(0, -n)) * row.coeff(0);
    Rational rowsum = 0;
    for (const auto& [z2, c] : row.terms()) rowsum += c;
    D1 += Rational(sigma(1, -n)) * rowsum;
  }
  if (!is_integer(D0) || !is_integer(D1)) throw Error("non-integral D0 or D1");
  out.D0 = D0.get_num();
  out.D1 = D1.get_num();
  if (out.A * t - Rational(out.D1) * t - out.C != 0)
    throw Error("identity tA - tD1 - C = 0 fails");
  out.characterTrivial = is_integer(out.A) && is_integer(out.C) && (out.C.get_num() % t == 0);
  out.symmetric = mpz_even_p(out.D0.get_mpz_t());
  const auto divisor = humbert_divisor(table);
  out.holomorphic =
      std::all_of(divisor.begin(), divisor.end(), [](const HumbertClass& h) { return h.multiplicity >= 0; });
  const Rational a24 = out.A * 24, b2 = out.B * 2;
  if (is_integer(a24)) out.charEps = static_cast<int>(mpz_fdiv_ui(a24.get_num_mpz_t(), 24));
  if (is_integer(b2)) out.charVH = static_cast<int>(mpz_fdiv_ui(b2.get_num_mpz_t(), 2));
  const Rational f = out.kprime + Rational(out.D0);
  if (is_integer(f)) out.charF = mpz_odd_p(f.get_num_mpz_t()) ? 1 : 0;
  return out;
}

std::vector<HumbertClass> humbert_divisor(const SingularTable& table) {
  const std::int64_t t = table.t;
  std::int64_t Dmax = 0;
  for (const auto& [key, c] : table.rows) Dmax = std::max(Dmax, -key.first);
  std::vector<HumbertClass> out;
  for (std::int64_t D = Dmax; D >= 1; --D) {
    for (std::int64_t r = 0; r <= t; ++r) {
      if (mod_pos(r * r - D, 4 * t) != 0) continue;
      Integer mult = 0;
      for (std::int64_t n = 1; n * n * D <= Dmax; ++n) mult += table.at(-n * n * D, n * r);
      if (mult == 0) continue;
      out.push_back({D, r, mult, (r * r - D) / (4 * t), r, 1});
    }
  }
  return out;
}

// ------------------------------------------------------------ FJ expansion

ThetaBlockSpec leading_theta_block(const FJSeries& psi) {
  if (psi.qden() != 1 || psi.trunc() < 0) throw Error("psi must be known through q^0");
  std::int64_t c00 = 0, rest = 0;
  std::vector<int> d;
  if (const ZetaPoly* row0 = psi.row(0)) {
    for (const auto& [z2, c] : row0->terms()) {
      if (z2 % 2 != 0 || !is_integer(c)) throw Error("q^0 row of psi must be integral");
      const std::int64_t l = z2 / 2, m = to_int64(c);
      if (l == 0) c00 = m;
      if (l <= 0) continue;
      if (m < 0) throw Error("leading block would need a theta denominator");
      d.insert(d.end(), static_cast<std::size_t>(m), static_cast<int>(l));
      rest += m;
    }
  }
  return ThetaBlockSpec(static_cast<int>(c00 - rest), d);
}

std::int64_t borch_required_psi_trunc(const ThetaBlockSpec& spec, std::int64_t M,
                                      std::int64_t trunc) {
  const std::int64_t N0 = spec.order_int() / 2;
  return M * (trunc + N0 * M + 1);
}

FJExpansion borch_fj_expansion(const FJSeries& psi, std::int64_t t, std::int64_t M,
                               std::int64_t trunc) {
  if (M < 0) throw Error("M must be nonnegative");
  const SingularTable table = singular_table(psi, t, std::max<std::int64_t>(0, -psi.min_q()));
  const BorcherdsData data = borcherds_data(psi, t, table);
  if (data.kprime > kMaxExpandWeight) throw Error("Borcherds product too large to expand");
  const ThetaBlockSpec lead = leading_theta_block(psi);
  const std::int64_t qden = is_integer(data.A) ? 1 : 24;

  std::vector<FJSeries> g;
  for (std::int64_t m = 1; m <= M; ++m) g.push_back(apply_Vm(psi, 0, m));
  std::vector<FJSeries> E{FJSeries::one(1, psi.trunc())};
  for (std::int64_t j = 1; j <= M; ++j) {
    FJSeries acc(1, psi.trunc());
    for (std::int64_t i = 1; i <= j; ++i)
      acc = fj_add(acc, fj_scale(fj_mul(g[i - 1], E[j - i]), Rational(-i)));
    E.push_back(fj_scale(acc, frac(1, j)));
  }
  std::int64_t minE = 0;
  for (const auto& e : E) minE = std::min(minE, e.min_q());

  const std::int64_t want = qden * trunc;
  const FJSeries theta = eta_theta_product(lead.u(), lead.d(), qden, want - qden * minE);
  FJExpansion out{Rational(t), data.kprime, {}};
  for (std::int64_t j = 0; j <= M; ++j) {
    FJSeries entry = fj_mul(theta, fj_rescale(E[j], qden));
    if (entry.trunc() < want) throw Error("window too small");
    entry = fj_truncate(entry, want);
    if (!entry.is_integral()) throw Error("non-integral Borcherds Fourier-Jacobi coefficient");
    out.entries.push_back({data.C + Rational(t * j), std::move(entry)});
  }
  return out;
}

FJComparison compare_fj(const FJExpansion& a, const FJExpansion& b, std::int64_t upTo) {
  FJComparison out;
  std::int64_t count = 0;
  for (const auto& ea : a.entries) {
    if (count++ >= upTo) break;
    FJIndexVerdict verdict{ea.index, false, Rational(-1)};
    const FJEntry* eb = b.find(ea.index);
    if (!eb) {
      out.equal = false;
      if (!out.first) out.first = FJMismatch{ea.index, 0, 0, 0, 0};
      out.indices.push_back(verdict);
      continue;
    }
    const std::int64_t qden = lcm64(ea.series.qden(), eb->series.qden());
    const FJSeries fa = fj_rescale(ea.series, qden), fb = fj_rescale(eb->series, qden);
    const std::int64_t window = std::min(fa.trunc(), fb.trunc());
    verdict.window = frac(window, qden);
    verdict.equal = true;
    for (std::int64_t q = std::min(fa.min_q(), fb.min_q()); q <= window && verdict.equal; ++q) {
      const ZetaPoly* pa = fa.row(q);
      const ZetaPoly* pb = fb.row(q);
      const ZetaPoly za = pa ? *pa : ZetaPoly(), zb = pb ? *pb : ZetaPoly();
      if (za == zb) continue;
      verdict.equal = false;
      const ZetaPoly diff = za - zb;
      const std::int64_t z2 = diff.min_z2();
      if (!out.first)
        out.first = FJMismatch{ea.index, frac(q, qden), frac(z2, 2), za.coeff(z2), zb.coeff(z2)};
    }
    out.equal = out.equal && verdict.equal;
    out.indices.push_back(verdict);
  }
  return out;
}

std::string elliptic_invariance_failure(const FJSeries& psi, std::int64_t t) {
  if (psi.qden() != 1) return "non-integral q exponents";
  auto fail = [](std::int64_t n, std::int64_t r, const char* what) {
    std::ostringstream os;
    os << what << " at (n, r) = (" << n << ", " << r << ")";
    return os.str();
  };
  for (const auto& [n, row] : psi.rows()) {
    for (const auto& [z2, c] : row.terms()) {
      if (z2 % 2 != 0) return fail(n, z2, "half-integral zeta exponent");
      const std::int64_t r = z2 / 2;
      if (row.coeff(-z2) != c) return fail(n, r, "c(n, r) != c(n, -r)");
      const std::int64_t n1 = n + r + t, n2 = n - r + t;
      if (n1 <= psi.trunc() && psi.coeff_scaled(n1, 2 * (r + 2 * t)) != c)
        return fail(n, r, "c(n, r) != c(n + r + t, r + 2t)");
      if (n2 <= psi.trunc() && psi.coeff_scaled(n2, 2 * (r - 2 * t)) != c)
        return fail(n, r, "c(n, r) != c(n - r + t, r - 2t)");
    }
  }
  return {};
}

}  // namespace thetalift
