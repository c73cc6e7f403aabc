#include "coedge/report.hpp"

#include <cstdint>
#include <cstdio>

#include "coedge/canonical.hpp"
#include "coedge/io.hpp"

namespace coedge {

using nlohmann::json;

std::string rational_to_string(const Rational& r) { return r.str(); }

Rational rational_from_string(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw Error("not a rational: '" + s + "'");
  }
}

namespace {

json poly_to_json(const ExactPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  return coeffs;
}

ExactPolynomial poly_from_json(const json& j) {
  std::vector<BigInt> coeffs;
  for (const auto& c : j) coeffs.emplace_back(c.get<std::string>());
  return ExactPolynomial(std::move(coeffs));
}

template <class T>
json optional_int(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const Witness& w) {
  return {{"kind", w.kind}, {"vertices", w.vertices}, {"observed", w.observed}, {"expected", w.expected}};
}

json to_json(const RegularityReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
  return {{"n", r.n},
          {"k", optional_int(r.k)},
          {"c", optional_int(r.c)},
          {"ell", optional_int(r.ell)},
          {"a", optional_int(r.a)},
          {"regular", r.regular},
          {"co_edge_regular", r.co_edge_regular},
          {"strongly_co_edge_regular", r.strongly_co_edge_regular},
          {"walk_regular", r.walk_regular},
          {"strongly_regular", r.strongly_regular},
          {"terwilliger", r.terwilliger},
          {"complete", r.complete},
          {"empty", r.empty},
          {"connected", r.connected},
          {"witnesses", witnesses}};
}

json to_json(const MomentReport& m) {
  json j = {{"holds", m.holds},
            {"sum_a", m.sum_a},
            {"sum_a_squared", m.sum_a_squared},
            {"walk_regular", m.walk_regular},
            {"sums_constant", m.sums_constant}};
  j["failure"] = m.failure ? to_json(*m.failure) : json(nullptr);
  return j;
}

json to_json(const Spectrum& s) {
  json roots = json::array();
  for (const auto& e : s.roots)
    roots.push_back({{"poly", poly_to_json(e.value.poly)},
                     {"lo", rational_to_string(e.value.lo)},
                     {"hi", rational_to_string(e.value.hi)},
                     {"exact", e.value.exact},
                     {"multiplicity", e.multiplicity}});
  return {{"charpoly", poly_to_json(s.charpoly)}, {"distinct_count", s.distinct_count}, {"roots", roots}};
}

Spectrum spectrum_from_json(const json& j) {
  Spectrum s;
  s.charpoly = poly_from_json(j.at("charpoly"));
  s.distinct_count = j.at("distinct_count").get<int>();
  for (const auto& r : j.at("roots")) {
    SpectrumEntry e;
    e.value.poly = poly_from_json(r.at("poly"));
    e.value.lo = rational_from_string(r.at("lo").get<std::string>());
    e.value.hi = rational_from_string(r.at("hi").get<std::string>());
    e.value.exact = r.at("exact").get<bool>();
    e.multiplicity = r.at("multiplicity").get<int>();
    s.roots.push_back(std::move(e));
  }
  return s;
}

json to_json(const ClassificationVerdict& v) {
  json trail = json::array();
  for (const auto& t : v.trail)
    trail.push_back({{"check", t.check}, {"passed", t.passed}, {"result", t.result}, {"witness", t.witness}});
  json j = {{"theorem", v.theorem},
            {"outcome", to_string(v.outcome)},
            {"summary", v.summary()},
            {"p", v.p},
            {"q", v.q},
            {"reasons", v.reasons},
            {"evidence", v.evidence},
            {"trail", trail}};
  j["spectral_ell"] = v.spectral_ell ? json(rational_to_string(*v.spectral_ell)) : json(nullptr);
  j["combinatorial_ell"] = optional_int(v.combinatorial_ell);
  return j;
}

ClassificationVerdict verdict_from_json(const json& j) {
  ClassificationVerdict v;
  v.theorem = j.at("theorem").get<std::string>();
  const auto outcome = j.at("outcome").get<std::string>();
  bool known = false;
  for (Outcome o : {Outcome::Grid, Outcome::TwoCliqueExtC5, Outcome::Shrikhande, Outcome::HypothesesNotMet,
                    Outcome::ConclusionViolated})
    if (to_string(o) == outcome) {
      v.outcome = o;
      known = true;
    }
  if (!known) throw Error("unknown outcome '" + outcome + "'");
  v.p = j.at("p").get<int>();
  v.q = j.at("q").get<int>();
  v.reasons = j.at("reasons").get<std::vector<std::string>>();
  v.evidence = j.at("evidence").get<std::string>();
  for (const auto& t : j.at("trail"))
    v.trail.push_back({t.at("check").get<std::string>(), t.at("passed").get<bool>(), t.at("result").get<std::string>(),
                       t.at("witness").get<std::string>()});
  if (!j.at("spectral_ell").is_null()) v.spectral_ell = rational_from_string(j.at("spectral_ell").get<std::string>());
  if (!j.at("combinatorial_ell").is_null()) v.combinatorial_ell = j.at("combinatorial_ell").get<int>();
  return v;
}

json to_json(const ForbiddenHit& h) {
  return {{"type", h.type},
          {"s", h.s},
          {"t", h.t},
          {"name", h.name},
          {"pattern_graph6", encode_graph6(h.pattern)},
          {"embedding", h.embedding.map}};
}

std::string canonical_hash(const Graph& g) {
  const std::string g6 = encode_graph6(canonical_form(g).graph(g));
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : g6) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json ReportDocument::to_json() const {
  json j = {{"schema_version", schema_version},
            {"input", {{"source", source}, {"format", format}, {"canonical_hash", canonical_hash}}}};
  json sections = json::object();
  sections["regularity"] = regularity ? *regularity : json(nullptr);
  sections["spectrum"] = spectrum ? *spectrum : json(nullptr);
  sections["verdicts"] = verdicts;
  sections["witnesses"] = witnesses;
  j["sections"] = sections;
  return j;
}

ReportDocument ReportDocument::from_json(const json& j) {
  ReportDocument d;
  d.schema_version = j.at("schema_version").get<int>();
  if (d.schema_version != kReportSchemaVersion)
    throw Error("unsupported report schema version " + std::to_string(d.schema_version));
  const auto& in = j.at("input");
  d.source = in.at("source").get<std::string>();
  d.format = in.at("format").get<std::string>();
  d.canonical_hash = in.at("canonical_hash").get<std::string>();
  const auto& s = j.at("sections");
  if (!s.at("regularity").is_null()) d.regularity = s.at("regularity");
  if (!s.at("spectrum").is_null()) d.spectrum = s.at("spectrum");
  d.verdicts = s.at("verdicts").get<std::vector<json>>();
  d.witnesses = s.at("witnesses").get<std::vector<json>>();
  return d;
}

}  // namespace coedge
