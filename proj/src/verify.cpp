#include "thetalift/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <mutex>
#include <thread>

#include "thetalift/arith.hpp"
#include "thetalift/band.hpp"
#include "thetalift/hecke.hpp"

namespace thetalift {

namespace {

using Triple = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

std::vector<Triple> sym(std::int64_t n, std::int64_t r, std::int64_t c) {
  if (r == 0) return {{n, 0, c}};
  return {{n, r, c}, {n, -r, c}};
}

std::vector<Triple> join(std::initializer_list<std::vector<Triple>> parts) {
  std::vector<Triple> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_singular(const std::vector<Triple>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& [n, r, c] = rows[i];
    os << (i ? " + " : "") << c << "*q^" << n << "*z^" << r;
  }
  return rows.empty() ? "0" : os.str();
}

std::string format_divisor(const std::vector<Triple>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& [D, r, m] = rows[i];
    os << (i ? " + " : "") << m << "*H(" << D << "," << r << ")";
  }
  return rows.empty() ? "0" : os.str();
}

template <class F>
VerificationReport timed(const std::string& id, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.caseId = id;
  try {
    body(rep);
  } catch (const std::exception& e) {
    rep.computed = std::string("error: ") + e.what();
    rep.pass = false;
  }
  rep.runtimeMs =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

FJSeries psi_for(const ThetaBlockSpec& spec, std::int64_t trunc) {
  return build_psi_product(spec, trunc);
}

}  // namespace

// ------------------------------------------------------------ golden data

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"psi_10 (N=1)", 18, {1, 1}, join({sym(0, 0, 20), sym(0, 1, 2)}), {{1, 1, 2}}},
      {"psi_8,2", 12, {1, 1, 1, 1}, join({sym(0, 0, 16), sym(0, 1, 4)}), {{1, 1, 4}}},
      {"psi_11,2", 21, {2}, join({sym(0, 0, 22), sym(0, 2, 1)}), {{4, 2, 1}, {1, 1, 1}}},
      {"psi_6,3", 6, {1, 1, 1, 1, 1, 1}, join({sym(0, 0, 12), sym(0, 1, 6)}), {{1, 1, 6}}},
      {"psi_9,3", 15, {1, 1, 2}, join({sym(0, 0, 18), sym(0, 2, 1), sym(0, 1, 2)}),
       {{4, 2, 1}, {1, 1, 3}}},
      {"psi_4,4", 0, {1, 1, 1, 1, 1, 1, 1, 1}, join({sym(0, 0, 8), sym(0, 1, 8)}), {{1, 1, 8}}},
      {"psi_7,4", 9, {1, 1, 1, 1, 2}, join({sym(0, 0, 14), sym(0, 2, 1), sym(0, 1, 4)}),
       {{4, 2, 1}, {1, 1, 5}}},
      {"psi_10,4", 18, {2, 2}, join({sym(0, 0, 20), sym(0, 2, 2)}), {{4, 2, 2}, {1, 1, 2}}},
      {"psi_5,5", 3, {1, 1, 1, 1, 1, 1, 2}, join({sym(0, 0, 10), sym(0, 2, 1), sym(0, 1, 6)}),
       {{4, 2, 1}, {1, 1, 7}}},
      {"psi_8,5", 12, {1, 1, 2, 2},
       join({sym(0, 0, 16), sym(0, 2, 2), sym(0, 1, 2), sym(1, 5, 2)}),
       {{5, 5, 2}, {4, 2, 2}, {1, 1, 4}}},
      {"psi_2,37", -6, {1, 1, 1, 2, 2, 2, 3, 3, 4, 5},
       join({sym(6, 30, 1), sym(0, 0, 4), sym(0, 1, 3), sym(0, 2, 3), sym(0, 3, 2), sym(0, 4, 1),
             sym(0, 5, 1)}),
       {{25, 5, 1}, {16, 4, 1}, {12, 30, 1}, {9, 3, 2}, {4, 2, 4}, {1, 1, 10}}},
  };
  return cases;
}

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {1, "10", "2"},
      {2, "475", "89"},
      {3, "25228", "4628"},
      {4, "1409686", "255902"},
      {5, "81089336", "14628136"},
      {6, "4752949680", "853836720"},
      {7, "282277652800", "50558528960"},
      {8, "16928371578075", "3025267676505"},
      {9, "1022835157543260", "182473970938500"},
      {10, "62169320884762434", "11075646070708830"},
  };
  return rows;
}

std::vector<FamilyCase> family_cases() {
  return {
      {"eta^12 th1^4", ThetaBlockSpec(12, {1, 1, 1, 1}), {}},
      {"eta^12 th1^2 th2^2", ThetaBlockSpec(12, {1, 1, 2, 2}), {}},
      {"eta^12 th1^3 th3", ThetaBlockSpec(12, {1, 1, 1, 3}), {}},
      {"quark(1,1)^3", ThetaBlockSpec(-3, {1, 1, 1, 1, 1, 1, 2, 2, 2}), {{1, 1}, {1, 1}, {1, 1}}},
      {"weight 4", ThetaBlockSpec(0, {1, 1, 1, 1, 1, 1, 2, 2}), {}},
      {"weight 5", ThetaBlockSpec(3, {1, 1, 1, 1, 1, 2, 3}), {}},
      {"weight 6", ThetaBlockSpec(6, {1, 1, 1, 1, 1, 3}), {}},
      {"weight 7", ThetaBlockSpec(9, {1, 1, 1, 2, 3}), {}},
      {"weight 8", ThetaBlockSpec(12, {1, 2, 2, 3}), {}},
      {"weight 9", ThetaBlockSpec(15, {1, 2, 3}), {}},
      {"weight 10", ThetaBlockSpec(18, {1, 3}), {}},
      {"weight 11", ThetaBlockSpec(21, {4}), {}},
  };
}

ThetaBlockSpec random_valid_spec(std::mt19937& rng, int vmax, int maxEll, int maxD) {
  std::uniform_int_distribution<int> vdist(1, vmax), ldist(1, maxEll), ddist(1, maxD);
  for (;;) {
    const int v = vdist(rng), ell = ldist(rng);
    std::vector<int> d(static_cast<std::size_t>(ell));
    int sum = 0;
    for (auto& x : d) sum += (x = ddist(rng));
    if (sum % 2 != 0) continue;
    ThetaBlockSpec spec(24 * v - 3 * ell, d);
    if (v % 2 == 1) {
      const auto c = classify_theta_block(spec);
      if (c != Classification::Cusp && c != Classification::Holomorphic) continue;
    }
    return spec;
  }
}

std::vector<ThetaBlockSpec> test_corpus(unsigned randomCount, unsigned seed) {
  std::vector<ThetaBlockSpec> out;
  auto add = [&](const ThetaBlockSpec& s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  for (const auto& g : golden_cases()) add(ThetaBlockSpec(g.u, g.d));
  for (const auto& f : family_cases()) add(f.spec);
  for (int v = 2; v <= 4; ++v) add(ThetaBlockSpec(24 * v - 6, {1, 1}));
  std::mt19937 rng(seed);
  unsigned added = 0;
  while (added < randomCount) {
    const auto before = out.size();
    add(random_valid_spec(rng));
    if (out.size() > before) ++added;
  }
  return out;
}

// ------------------------------------------------------------ threading

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  const unsigned workers = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_lock;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> guard(failure_lock);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// ------------------------------------------------------------ lifts

FJExpansion grit_of_spec(const ThetaBlockSpec& spec, std::int64_t M, std::int64_t trunc) {
  const FJSeries phi = build_theta_block(spec, M * trunc);
  return grit_fj_expansion(phi, spec.weight(), Rational(spec.index_int()), M, trunc);
}

FJExpansion borch_of_spec(const ThetaBlockSpec& spec, std::int64_t M, std::int64_t trunc) {
  const std::int64_t t = spec.index_int();
  std::int64_t P = std::max(borch_required_psi_trunc(spec, M, trunc), t / 4);
  for (int attempt = 0;; ++attempt) {
    const FJSeries psi = psi_for(spec, P);
    try {
      return borch_fj_expansion(psi, t, M, trunc);
    } catch (const Error& e) {
      if (std::string(e.what()) != "window too small" || attempt >= 4) throw;
      P *= 2;
    }
  }
}

std::string describe(const FJComparison& cmp) {
  std::ostringstream os;
  if (cmp.equal) {
    os << "equal on indices";
    for (const auto& v : cmp.indices) os << " " << v.index << "(q<=" << v.window << ")";
    return os.str();
  }
  if (cmp.first) {
    const auto& m = *cmp.first;
    os << "mismatch at index " << m.index << " q^" << m.n << " z^" << m.r << ": " << m.left
       << " vs " << m.right;
  } else {
    os << "mismatch";
  }
  return os.str();
}

// ------------------------------------------------------------ suites

std::vector<VerificationReport> verify_table1(const VerifyOptions& opts) {
  const auto& rows = table1_rows();
  const std::int64_t vmax = std::clamp<std::int64_t>(opts.vmax, 1, static_cast<std::int64_t>(rows.size()));
  std::vector<VerificationReport> out(static_cast<std::size_t>(vmax));
  parallel_for(out.size(), opts.threads, [&](std::size_t i) {
    const auto& row = rows[i];
    out[i] = timed("table1/v=" + std::to_string(row.v), [&](VerificationReport& rep) {
      const ThetaBlockSpec spec(static_cast<int>(24 * row.v - 6), {1, 1});
      const FJSeries psi = psi_for(spec, 0);
      const SingularTable table = singular_table(psi, 1, row.v / 2);
      const BorcherdsData data = borcherds_data(psi, 1, table);
      Integer mult = 0;
      for (const auto& h : humbert_divisor(table))
        if (h.D == 1 && h.r == 1) mult = h.multiplicity;
      rep.expected = "weight " + row.weight + ", multiplicity " + row.multiplicity;
      rep.computed = "weight " + data.kprime.get_str() + ", multiplicity " + mult.get_str();
      rep.pass = rep.expected == rep.computed;
    });
  });
  return out;
}

std::vector<VerificationReport> verify_section2(const VerifyOptions& opts) {
  const auto& cases = golden_cases();
  std::vector<std::vector<VerificationReport>> per(cases.size());
  parallel_for(cases.size(), opts.threads, [&](std::size_t i) {
    const GoldenCase& g = cases[i];
    const ThetaBlockSpec spec(g.u, g.d);
    const std::int64_t t = spec.index_int();
    const std::int64_t N0 = spec.order_int() / 2;
    per[i].push_back(timed(g.id + "/singular", [&](VerificationReport& rep) {
      const SingularTable table = singular_table(build_psi_division(spec, t / 4), t, N0);
      std::vector<Triple> got;
      for (const auto& [n, r, c] : table.display()) got.emplace_back(n, r, c.get_si());
      rep.expected = format_singular(g.singular);
      rep.computed = format_singular(got);
      rep.pass = got == g.singular;
    }));
    per[i].push_back(timed(g.id + "/divisor", [&](VerificationReport& rep) {
      const SingularTable table = singular_table(build_psi_division(spec, t / 4), t, N0);
      std::vector<Triple> got;
      for (const auto& h : humbert_divisor(table)) got.emplace_back(h.D, h.r, h.multiplicity.get_si());
      auto want = g.divisor;
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      rep.expected = format_divisor(want);
      rep.computed = format_divisor(got);
      rep.pass = got == want;
    }));
    per[i].push_back(timed(g.id + "/fj", [&](VerificationReport& rep) {
      const FJComparison cmp =
          compare_fj(grit_of_spec(spec, opts.fjmax, opts.trunc), borch_of_spec(spec, opts.fjmax, opts.trunc),
                     opts.fjmax);
      rep.expected = "Grit = Borch through Fourier-Jacobi index " + std::to_string(opts.fjmax * t);
      rep.computed = describe(cmp);
      rep.pass = cmp.equal && static_cast<std::int64_t>(cmp.indices.size()) == opts.fjmax;
    }));
  });
  std::vector<VerificationReport> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  return out;
}

ZagierRun zagier37_sums(std::int64_t nmax, std::int64_t rmax, std::int64_t trunc) {
  constexpr std::int64_t t = 37;
  const ThetaBlockSpec spec(-6, {1, 1, 1, 2, 2, 2, 3, 3, 4, 5});
  struct Term {
    std::int64_t n, r;
    std::vector<std::pair<std::int64_t, std::int64_t>> reduced;
  };
  std::vector<Term> terms;
  std::int64_t window = std::max<std::int64_t>(trunc, 0);
  for (std::int64_t n = -nmax; n <= nmax; ++n) {
    for (std::int64_t r = -rmax; r <= rmax; ++r) {
      Term term{n, r, {}};
      const std::int64_t b = 4 * t * n - 60 * r;
      const double disc = double(b) * double(b) - 48.0 * double(r) * double(r);
      if (disc > 0) {
        const double s = std::sqrt(disc);
        const auto lo = static_cast<std::int64_t>(std::floor((double(b) - s) / 24.0)) - 1;
        const auto hi = static_cast<std::int64_t>(std::ceil((double(b) + s) / 24.0)) + 1;
        for (std::int64_t a = lo; a <= hi; ++a) {
          const std::int64_t N = 6 * a * a + n * a, R = 30 * a + r;
          const std::int64_t D = 4 * t * N - R * R;
          if (D <= 0) continue;
          const std::int64_t Rb = reduce_r(R, t);
          const std::int64_t num = D + Rb * Rb;
          if (num % (4 * t) != 0) throw Error("reduction produced a non-integral exponent");
          term.reduced.emplace_back(num / (4 * t), Rb);
          window = std::max(window, num / (4 * t));
        }
      }
      terms.push_back(std::move(term));
    }
  }

  ZagierRun run;
  run.windowUsed = window;
  const BandExpansion band(spec.u(), spec.d(), window, t);
  for (const auto& term : terms) {
    Integer s = 0;
    for (const auto& [N, R] : term.reduced) s += band.coeff(N, R);
    run.sums.push_back({term.n, term.r, s.get_str(), static_cast<std::int64_t>(term.reduced.size())});
  }

  run.nonpositiveVanish = true;
  for (std::int64_t N = 0; N <= window; ++N)
    for (std::int64_t R = -t; R <= t; ++R)
      if (4 * t * N - R * R <= 0 && band.coeff(N, R) != 0) run.nonpositiveVanish = false;

  const std::int64_t check = std::min<std::int64_t>(window, std::max<std::int64_t>(trunc, 1));
  const FJSeries generic = build_theta_block(spec, check);
  run.bandMatchesGeneric = elliptic_invariance_failure(generic, t).empty();
  for (std::int64_t N = 0; N <= check; ++N)
    for (std::int64_t R = -t; R <= t; ++R)
      if (generic.coeff_scaled(N, 2 * R) != Rational(band.coeff(N, R))) run.bandMatchesGeneric = false;
  return run;
}

std::vector<VerificationReport> verify_zagier37(std::int64_t nmax, std::int64_t rmax, std::int64_t trunc,
                                                const VerifyOptions&) {
  std::vector<VerificationReport> out;
  ZagierRun run;
  auto setup = timed("zagier/engine", [&](VerificationReport& rep) {
    run = zagier37_sums(nmax, rmax, trunc);
    rep.expected = "band engine agrees with the series engine; c(n,r) = 0 when 148n - r^2 <= 0";
    rep.computed = std::string(run.bandMatchesGeneric ? "agrees" : "disagrees") + "; " +
                   (run.nonpositiveVanish ? "vanishes" : "does not vanish") + " (window q^" +
                   std::to_string(run.windowUsed) + ")";
    rep.pass = run.bandMatchesGeneric && run.nonpositiveVanish;
  });
  out.push_back(setup);
  for (const auto& s : run.sums) {
    VerificationReport rep;
    rep.caseId = "zagier/n=" + std::to_string(s.n) + ",r=" + std::to_string(s.r);
    rep.expected = "0";
    rep.computed = s.sum;
    rep.pass = s.sum == "0";
    out.push_back(rep);
  }
  return out;
}

std::vector<VerificationReport> verify_families(const VerifyOptions& opts) {
  const auto cases = family_cases();
  std::vector<std::vector<VerificationReport>> per(cases.size());
  parallel_for(cases.size(), opts.threads, [&](std::size_t i) {
    const FamilyCase& fc = cases[i];
    if (!fc.quarks.empty()) {
      per[i].push_back(timed(fc.id + "/quark-product", [&](VerificationReport& rep) {
        const std::int64_t Q = 24 * opts.trunc;
        FJSeries prod = FJSeries::one(24, Q);
        std::int64_t index = 0;
        for (const auto& [a, b] : fc.quarks) {
          prod = fj_mul(prod, build_theta_quark(a, b, Q));
          index += quark_index(a, b);
        }
        const FJSeries lhs = fj_truncate(fj_normalize_qden(prod), opts.trunc);
        const FJSeries rhs = build_theta_block(fc.spec, opts.trunc);
        rep.expected = "product of quarks = theta block " + fc.spec.to_string() + ", index " +
                       std::to_string(fc.spec.index_int());
        rep.computed = std::string(lhs == rhs ? "equal" : "different") + ", index " + std::to_string(index);
        rep.pass = lhs == rhs && index == fc.spec.index_int();
      }));
    }
    per[i].push_back(timed(fc.id + "/fj", [&](VerificationReport& rep) {
      const FJComparison cmp = compare_fj(grit_of_spec(fc.spec, opts.fjmax, opts.trunc),
                                          borch_of_spec(fc.spec, opts.fjmax, opts.trunc), opts.fjmax);
      rep.expected = "Grit = Borch through Fourier-Jacobi index " +
                     std::to_string(opts.fjmax * fc.spec.index_int());
      rep.computed = describe(cmp);
      rep.pass = cmp.equal && static_cast<std::int64_t>(cmp.indices.size()) == opts.fjmax;
    }));
  });
  std::vector<VerificationReport> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace thetalift
