// thetalift: command-line front end for theta blocks, Gritsenko lifts and
// Borcherds products.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "thetalift/arith.hpp"
#include "thetalift/blocks.hpp"
#include "thetalift/borcherds.hpp"
#include "thetalift/hecke.hpp"
#include "thetalift/json_io.hpp"
#include "thetalift/valuation.hpp"
#include "thetalift/verify.hpp"

using namespace thetalift;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::int64_t trunc = 6;
  std::int64_t fjmax = 3;
  std::int64_t vmax = 10;
  std::string threads = "auto";
  bool json = false;
  bool refs = false;
  bool timings = false;
};

struct SpecArgs {
  int u = 0;
  std::string d;
};

ThetaBlockSpec make_spec(const SpecArgs& a) {
  try {
    return ThetaBlockSpec(a.u, parse_d_list(a.d));
  } catch (const Error& e) {
    throw UsageError(std::string("invalid theta block: ") + e.what());
  }
}

unsigned parse_threads(const std::string& s) {
  if (s == "auto") return 0;
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos == s.size() && v >= 1) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  throw UsageError("--threads expects a positive integer or auto");
}

void add_spec_options(CLI::App* cmd, SpecArgs& a) {
  cmd->add_option("--u", a.u, "eta exponent")->required();
  cmd->add_option("--d", a.d, "theta arguments, e.g. 1,1,2 or 1^4,2")->required();
}

std::string format_series(const FJSeries& f) {
  std::ostringstream os;
  os << "qden " << f.qden() << ", exact through q^" << frac(f.trunc(), f.qden()) << "\n";
  for (const auto& [q, p] : f.rows()) {
    os << "q^" << frac(q, f.qden()) << ":";
    for (const auto& [z2, c] : p.terms()) os << "  " << c << "*z^" << frac(z2, 2);
    os << "\n";
  }
  return os.str();
}

void print_refs(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& refs) {
  os << "definitions:\n";
  for (const auto& [name, text] : refs) os << "  " << name << ": " << text << "\n";
}

Json refs_json(const std::vector<std::pair<std::string, std::string>>& refs) {
  Json j = Json::object();
  for (const auto& [name, text] : refs) j[name] = text;
  return j;
}

const std::vector<std::pair<std::string, std::string>> kBlockRefs = {
    {"k", "(l + u)/2"},
    {"t", "(d_1^2 + ... + d_l^2)/2"},
    {"v", "(u + 3l)/24, the q-order of the block"},
    {"ord", "k/12 + 1/2 sum_i B2bar(d_i x) on [0, 1]"},
    {"classification", "cusp iff min ord > 0, holomorphic iff min ord >= 0, weak iff v >= 0"},
};

const std::vector<std::pair<std::string, std::string>> kBorchRefs = {
    {"psi", "(-1)^v (phi|V_2)/phi"},
    {"A", "1/24 sum_l c(0, l)"},
    {"B", "1/2 sum_{l > 0} l c(0, l)"},
    {"C", "1/4 sum_l l^2 c(0, l)"},
    {"D0", "sum_{n < 0} sigma_0(-n) c(n, 0)"},
    {"D1", "sum_{n < 0, r} sigma_1(-n) c(n, r)"},
    {"weight", "c(0, 0)/2"},
    {"multiplicity", "sum_{n >= 1} c(n^2 n0 m0, n r0) on the Humbert surface of discriminant D"},
};

const std::vector<std::pair<std::string, std::string>> kGritRefs = {
    {"entry m t", "phi|V_m, c(n, r) = sum_{d | (n, r, m)} d^(k-1) c(nm/d^2, r/d)"},
    {"entry 0", "c(0, 0) times the Eisenstein series G_k"},
};

int emit_reports(const std::vector<VerificationReport>& reports, const RunConfig& cfg) {
  bool all = true;
  for (const auto& r : reports) all = all && r.pass;
  if (cfg.json) {
    std::cout << to_json(reports, cfg.timings).dump(2) << "\n";
  } else {
    std::size_t passed = 0;
    for (const auto& r : reports) {
      passed += r.pass;
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.caseId << ": " << r.computed;
      if (!r.pass) std::cout << " (expected " << r.expected << ")";
      if (cfg.timings) std::cout << " [" << static_cast<std::int64_t>(r.runtimeMs) << " ms]";
      std::cout << "\n";
    }
    std::cout << passed << "/" << reports.size() << " passed\n";
  }
  return all ? kExitOk : kExitFail;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact theta blocks, Gritsenko lifts and paramodular Borcherds products"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.add_flag("--json", cfg.json, "machine-readable output");
  app.add_option("--trunc", cfg.trunc, "q-order window")->check(CLI::NonNegativeNumber);
  app.add_option("--fjmax", cfg.fjmax, "number of Fourier-Jacobi entries")->check(CLI::PositiveNumber);
  app.add_option("--vmax", cfg.vmax, "largest order for the level-one table")->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "worker threads or auto")->envname("THETALIFT_THREADS");
  app.add_flag("--refs", cfg.refs, "print the definition of each emitted quantity");
  app.add_flag("--timings", cfg.timings, "include runtimes in reports");

  std::function<int()> action;
  SpecArgs spec;

  // blocks
  auto* blocks = app.add_subcommand("blocks", "theta blocks and quarks");
  blocks->require_subcommand(1);
  auto* classify = blocks->add_subcommand("classify", "weight, index, order and classification");
  add_spec_options(classify, spec);
  classify->callback([&] {
    action = [&] {
      const ThetaBlockSpec s = make_spec(spec);
      const OrdProfile prof = ord_profile(s);
      const Classification c = classify_theta_block(s);
      if (cfg.json) {
        Json j = {{"spec", to_json(s)}, {"classification", to_string(c)}, {"ord", to_json(prof)}};
        if (cfg.refs) j["refs"] = refs_json(kBlockRefs);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "block " << s.to_string() << "\n"
                  << "k = " << s.weight() << ", t = " << s.index() << ", v = " << s.order() << "\n"
                  << "classification: " << to_string(c) << "\n"
                  << "ord minimum " << prof.minimum << " at x in {";
        for (std::size_t i = 0; i < prof.argmin.size(); ++i) std::cout << (i ? ", " : "") << prof.argmin[i];
        std::cout << "}\n";
        if (cfg.refs) print_refs(std::cout, kBlockRefs);
      }
      return kExitOk;
    };
  });
  auto* expand = blocks->add_subcommand("expand", "Fourier expansion through q^trunc");
  add_spec_options(expand, spec);
  expand->callback([&] {
    action = [&] {
      const ThetaBlockSpec s = make_spec(spec);
      const FJSeries f = s.has_integral_order() ? build_theta_block(s, cfg.trunc)
                                                : eta_theta_product(s.u(), s.d(), 24, cfg.trunc);
      if (cfg.json)
        std::cout << Json{{"spec", to_json(s)}, {"series", to_json(f)}}.dump(2) << "\n";
      else
        std::cout << "block " << s.to_string() << "\n" << format_series(f);
      return kExitOk;
    };
  });
  auto* quark = blocks->add_subcommand("quark", "theta_a theta_b theta_(a+b) / eta");
  int qa = 1, qb = 1;
  quark->add_option("--a", qa)->required()->check(CLI::PositiveNumber);
  quark->add_option("--b", qb)->required()->check(CLI::PositiveNumber);
  quark->callback([&] {
    action = [&] {
      const FJSeries f = build_theta_quark(qa, qb, 24 * cfg.trunc);
      if (cfg.json)
        std::cout << Json{{"a", qa}, {"b", qb}, {"index", quark_index(qa, qb)}, {"series", to_json(f)}}.dump(2)
                  << "\n";
      else
        std::cout << "quark (" << qa << "," << qb << "), index " << quark_index(qa, qb) << "\n"
                  << format_series(f);
      return kExitOk;
    };
  });

  // grit
  auto* grit = app.add_subcommand("grit", "Fourier-Jacobi expansion of the Gritsenko lift");
  add_spec_options(grit, spec);
  grit->callback([&] {
    action = [&] {
      const ThetaBlockSpec s = make_spec(spec);
      const FJExpansion e = grit_of_spec(s, cfg.fjmax, cfg.trunc);
      if (cfg.json) {
        Json j = {{"spec", to_json(s)}, {"expansion", to_json(e)}};
        if (cfg.refs) j["refs"] = refs_json(kGritRefs);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "Grit of " << s.to_string() << ", weight " << e.weight << "\n";
        for (const auto& entry : e.entries)
          std::cout << "-- index " << entry.index << "\n" << format_series(entry.series);
        if (cfg.refs) print_refs(std::cout, kGritRefs);
      }
      return kExitOk;
    };
  });

  // borch
  auto* borch = app.add_subcommand("borch", "Borcherds product of psi = (-1)^v (phi|V_2)/phi");
  borch->require_subcommand(1);
  auto singular_of = [](const ThetaBlockSpec& s) {
    if (!s.has_integral_order() || s.order_int() < 1) throw UsageError("psi needs an integral order v >= 1");
    const std::int64_t t = s.index_int();
    const FJSeries psi = build_psi_product(s, t / 4);
    return std::make_pair(psi, singular_table(psi, t, s.order_int() / 2));
  };
  auto* data = borch->add_subcommand("data", "singular part, weight and character data");
  add_spec_options(data, spec);
  data->callback([&] {
    action = [&] {
      const ThetaBlockSpec s = make_spec(spec);
      const auto [psi, table] = singular_of(s);
      const BorcherdsData bd = borcherds_data(psi, s.index_int(), table);
      if (cfg.json) {
        Json j = {{"spec", to_json(s)}, {"singular", to_json(table)}, {"data", to_json(bd)}};
        if (cfg.refs) j["refs"] = refs_json(kBorchRefs);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "psi for " << s.to_string() << ", index " << s.index_int() << "\nsingular part:";
        for (const auto& [n, r, c] : table.display()) std::cout << "  " << c << "*q^" << n << "*z^" << r;
        std::cout << "\nA = " << bd.A << ", B = " << bd.B << ", C = " << bd.C << ", D0 = " << bd.D0
                  << ", D1 = " << bd.D1 << "\nweight " << bd.kprime << ", character "
                  << (bd.characterTrivial ? "trivial" : "nontrivial") << " (eps^" << bd.charEps << " vH^"
                  << bd.charVH << " chiF^" << bd.charF << "), "
                  << (bd.symmetric ? "symmetric" : "antisymmetric") << ", "
                  << (bd.holomorphic ? "holomorphic" : "not holomorphic") << "\n";
        if (cfg.refs) print_refs(std::cout, kBorchRefs);
      }
      return kExitOk;
    };
  });
  auto* divisor = borch->add_subcommand("divisor", "Humbert surfaces with multiplicities");
  add_spec_options(divisor, spec);
  divisor->callback([&] {
    action = [&] {
      const ThetaBlockSpec s = make_spec(spec);
      const auto [psi, table] = singular_of(s);
      const auto div = humbert_divisor(table);
      if (cfg.json) {
        Json j = {{"spec", to_json(s)}, {"divisor", to_json(div)}};
        if (cfg.refs) j["refs"] = refs_json(kBorchRefs);
        std::cout << j.dump(2) << "\n";
      } else {
        const std::int64_t t = s.index_int();
        for (const auto& h : div)
          std::cout << h.multiplicity << " * H_" << t << "(" << h.D << "," << h.r << ")\n";
        if (cfg.refs) print_refs(std::cout, kBorchRefs);
      }
      return kExitOk;
    };
  });
  auto* bfj = borch->add_subcommand("fj", "Fourier-Jacobi expansion of the Borcherds product");
  add_spec_options(bfj, spec);
  bfj->callback([&] {
    action = [&] {
      const ThetaBlockSpec s = make_spec(spec);
      const FJExpansion e = borch_of_spec(s, cfg.fjmax, cfg.trunc);
      if (cfg.json) {
        std::cout << Json{{"spec", to_json(s)}, {"expansion", to_json(e)}}.dump(2) << "\n";
      } else {
        std::cout << "Borch of psi for " << s.to_string() << ", weight " << e.weight << "\n";
        for (const auto& entry : e.entries)
          std::cout << "-- index " << entry.index << "\n" << format_series(entry.series);
      }
      return kExitOk;
    };
  });
  auto* compare = borch->add_subcommand("compare", "compare Fourier-Jacobi entries with another lift");
  add_spec_options(compare, spec);
  std::string against = "grit";
  compare->add_option("--against", against)->check(CLI::IsMember({"grit"}));
  compare->callback([&] {
    action = [&] {
      const ThetaBlockSpec s = make_spec(spec);
      const FJComparison cmp =
          compare_fj(grit_of_spec(s, cfg.fjmax, cfg.trunc), borch_of_spec(s, cfg.fjmax, cfg.trunc), cfg.fjmax);
      const bool ok = cmp.equal && static_cast<std::int64_t>(cmp.indices.size()) == cfg.fjmax;
      if (cfg.json)
        std::cout << Json{{"spec", to_json(s)}, {"comparison", to_json(cmp)}}.dump(2) << "\n";
      else
        std::cout << (ok ? "EQUAL " : "DIFFERENT ") << describe(cmp) << "\n";
      return ok ? kExitOk : kExitFail;
    };
  });

  // hull
  auto* hull = app.add_subcommand("hull", "support hull of a theta block");
  add_spec_options(hull, spec);
  bool checkMul = false;
  int pairs = 200;
  unsigned seed = 1;
  hull->add_flag("--check-mul", checkMul, "check hull(fg) = hull(f) + hull(g) on random Laurent polynomials");
  hull->add_option("--pairs", pairs, "random pairs for --check-mul")->check(CLI::PositiveNumber);
  hull->add_option("--seed", seed, "seed for --check-mul");
  hull->callback([&] {
    action = [&] {
      const ThetaBlockSpec s = make_spec(spec);
      if (!s.has_integral_order()) throw UsageError("hull needs an integral order");
      const SupportHull h = hull_of_support(build_theta_block(s, cfg.trunc), true);
      int failures = 0;
      if (checkMul) {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> nterms(1, 6), qd(0, 5), zd(-6, 6), cd(-4, 4);
        auto random_poly = [&] {
          FJSeries::Rows rows;
          const int count = nterms(rng);
          for (int i = 0; i < count; ++i) {
            int c = cd(rng);
            if (c == 0) c = 1;
            const std::int64_t q = qd(rng);
            rows[q] = rows[q] + ZetaPoly::monomial(2 * zd(rng), c);
          }
          return FJSeries(1, 20, std::move(rows));
        };
        for (int i = 0; i < pairs; ++i) {
          const FJSeries f = random_poly(), g = random_poly();
          if (f.empty() || g.empty()) continue;
          const SupportHull lhs = hull_of_support(fj_mul(f, g), false);
          const SupportHull rhs = minkowski_sum(hull_of_support(f, false), hull_of_support(g, false));
          failures += !(lhs == rhs);
        }
      }
      if (cfg.json) {
        Json j = {{"spec", to_json(s)}, {"trunc", cfg.trunc}, {"hull", to_json(h)}};
        if (checkMul) j["checkMul"] = {{"pairs", pairs}, {"seed", seed}, {"failures", failures}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "extreme points of the support of " << s.to_string() << " through q^" << cfg.trunc
                  << " (with the ray in n):\n";
        for (const auto& p : h.extremePoints) std::cout << "  (n, r) = (" << p.n << ", " << p.r << ")\n";
        if (checkMul) std::cout << "hull(fg) = hull(f) + hull(g): " << failures << " failures in " << pairs << "\n";
      }
      return failures == 0 ? kExitOk : kExitFail;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->require_subcommand(1);
  std::int64_t nmax = 5, rmax = 20;
  auto opts_of = [&] {
    VerifyOptions o;
    o.trunc = cfg.trunc;
    o.fjmax = cfg.fjmax;
    o.vmax = cfg.vmax;
    o.threads = parse_threads(cfg.threads);
    return o;
  };
  auto zagier_trunc = [&] { return app.get_option("--trunc")->count() > 0 ? cfg.trunc : std::int64_t{12}; };
  auto add_verify = [&](const std::string& name, const std::string& help,
                        std::function<std::vector<VerificationReport>()> body) {
    auto* cmd = verify->add_subcommand(name, help);
    cmd->callback([&, body] { action = [&, body] { return emit_reports(body(), cfg); }; });
    return cmd;
  };
  add_verify("table1", "weights and multiplicities of the level-one family",
             [&] { return verify_table1(opts_of()); });
  add_verify("section2", "singular parts, divisors and lift identities of the worked examples",
             [&] { return verify_section2(opts_of()); });
  auto* zag = add_verify("zagier", "vanishing sums for the level-37 theta block",
                         [&] { return verify_zagier37(nmax, rmax, zagier_trunc(), opts_of()); });
  zag->add_option("--nmax", nmax)->check(CLI::NonNegativeNumber);
  zag->add_option("--rmax", rmax)->check(CLI::NonNegativeNumber);
  add_verify("families", "lift identities for the infinite families", [&] { return verify_families(opts_of()); });
  add_verify("all", "every suite", [&] {
    const VerifyOptions o = opts_of();
    auto out = verify_table1(o);
    for (auto part : {verify_section2(o), verify_zagier37(nmax, rmax, zagier_trunc(), o), verify_families(o)})
      out.insert(out.end(), part.begin(), part.end());
    return out;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (!action) {
    std::cerr << app.help();
    return kExitUsage;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
