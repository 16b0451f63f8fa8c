#include "thetalift/json_io.hpp"

namespace thetalift {

std::string rational_string(const Rational& x) { return x.get_str(); }

Json to_json(const FJSeries& f) {
  Json terms = Json::array();
  for (const auto& [q, p] : f.rows())
    for (const auto& [z2, c] : p.terms())
      terms.push_back({{"q", q}, {"z2", z2}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  return {{"qden", f.qden()}, {"trunc", f.trunc()}, {"terms", std::move(terms)}};
}

FJSeries fjseries_from_json(const Json& j) {
  try {
    const auto qden = j.at("qden").get<std::int64_t>();
    const auto trunc = j.at("trunc").get<std::int64_t>();
    if (qden < 1) throw Error("qden must be positive");
    std::map<std::int64_t, std::vector<ZetaPoly::Term>> raw;
    for (const auto& t : j.at("terms")) {
      const Integer num(t.at("num").get<std::string>()), den(t.at("den").get<std::string>());
      if (den == 0) throw Error("zero denominator");
      raw[t.at("q").get<std::int64_t>()].emplace_back(t.at("z2").get<std::int64_t>(), frac(num, den));
    }
    FJSeries::Rows rows;
    for (auto& [q, terms] : raw) rows.emplace(q, ZetaPoly(std::move(terms)));
    return FJSeries(qden, trunc, std::move(rows));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed series JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error("malformed series JSON: bad integer string");
  }
}

Json to_json(const FJExpansion& e) {
  Json entries = Json::array();
  for (const auto& entry : e.entries)
    entries.push_back({{"index", rational_string(entry.index)}, {"series", to_json(entry.series)}});
  return {{"t", rational_string(e.t)}, {"weight", rational_string(e.weight)}, {"entries", std::move(entries)}};
}

Json to_json(const ThetaBlockSpec& spec) {
  Json j = {{"u", spec.u()}, {"d", spec.d()}, {"weight", spec.weight()}, {"index", rational_string(spec.index())},
            {"order", rational_string(spec.order())}};
  return j;
}

Json to_json(const OrdProfile& p) {
  Json argmin = Json::array(), breaks = Json::array();
  for (const auto& x : p.argmin) argmin.push_back(rational_string(x));
  for (const auto& x : p.breakpoints) breaks.push_back(rational_string(x));
  return {{"minimum", rational_string(p.minimum)}, {"argmin", std::move(argmin)}, {"breakpoints", std::move(breaks)}};
}

Json to_json(const SingularTable& table) {
  Json rows = Json::array();
  for (const auto& [n, r, c] : table.display()) rows.push_back({{"n", n}, {"r", r}, {"c", c.get_str()}});
  return {{"t", table.t}, {"N0", table.N0}, {"rows", std::move(rows)}};
}

Json to_json(const BorcherdsData& d) {
  return {{"A", rational_string(d.A)},
          {"B", rational_string(d.B)},
          {"C", rational_string(d.C)},
          {"D0", d.D0.get_str()},
          {"D1", d.D1.get_str()},
          {"weight", rational_string(d.kprime)},
          {"characterTrivial", d.characterTrivial},
          {"symmetric", d.symmetric},
          {"holomorphic", d.holomorphic},
          {"character", {{"eps", d.charEps}, {"vH", d.charVH}, {"chiF", d.charF}}}};
}

Json to_json(const std::vector<HumbertClass>& divisor) {
  Json out = Json::array();
  for (const auto& h : divisor)
    out.push_back({{"D", h.D},
                   {"r", h.r},
                   {"multiplicity", h.multiplicity.get_str()},
                   {"primitive", {{"n", h.n0}, {"r", h.r0}, {"m", h.m0}}}});
  return out;
}

Json to_json(const FJComparison& cmp) {
  Json indices = Json::array();
  for (const auto& v : cmp.indices)
    indices.push_back(
        {{"index", rational_string(v.index)}, {"equal", v.equal}, {"window", rational_string(v.window)}});
  Json j = {{"equal", cmp.equal}, {"indices", std::move(indices)}};
  if (cmp.first) {
    const auto& m = *cmp.first;
    j["firstMismatch"] = {{"index", rational_string(m.index)}, {"n", rational_string(m.n)},
                          {"r", rational_string(m.r)},         {"left", rational_string(m.left)},
                          {"right", rational_string(m.right)}};
  }
  return j;
}

Json to_json(const SupportHull& h) {
  Json pts = Json::array();
  for (const auto& p : h.extremePoints) pts.push_back({{"n", rational_string(p.n)}, {"r", rational_string(p.r)}});
  return {{"recession", h.recession}, {"extremePoints", std::move(pts)}};
}

Json to_json(const std::vector<VerificationReport>& reports, bool withTiming) {
  Json out = Json::array();
  for (const auto& r : reports) {
    Json j = {{"caseId", r.caseId}, {"expected", r.expected}, {"computed", r.computed}, {"pass", r.pass}};
    if (withTiming) j["runtimeMs"] = static_cast<std::int64_t>(r.runtimeMs);
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace thetalift
