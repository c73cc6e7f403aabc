#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "coedge/canonical.hpp"
#include "coedge/enumerate.hpp"
#include "coedge/io.hpp"
#include "coedge/pipeline.hpp"
#include "coedge/regularity.hpp"
#include "coedge/report.hpp"
#include "coedge/spectrum.hpp"

namespace {

using namespace coedge;
using nlohmann::json;

constexpr int kUsage = 64;
constexpr int kParse = 65;

struct Input {
  std::string path;
  std::string format = "graph6";
};

struct Loaded {
  std::string source;
  std::vector<Graph> graphs;
};

Loaded load(const Input& in) {
  std::string text;
  Loaded out;
  if (in.path.empty() || in.path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
    out.source = "stdin";
  } else {
    std::ifstream f(in.path, std::ios::binary);
    if (!f) throw Error("cannot open '" + in.path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
    out.source = in.path;
  }
  out.graphs = read_graphs(text, in.format);
  return out;
}

std::string source_name(const Loaded& l, std::size_t i) {
  return l.graphs.size() == 1 ? l.source : l.source + "#" + std::to_string(i);
}

ReportDocument document_for(const Graph& g, const std::string& source, const std::string& format) {
  ReportDocument d;
  d.source = source;
  d.format = format;
  d.canonical_hash = canonical_hash(g);
  return d;
}

void emit_documents(const std::vector<ReportDocument>& docs) {
  if (docs.size() == 1) {
    std::cout << docs[0].to_json().dump(2) << "\n";
  } else {
    json arr = json::array();
    for (const auto& d : docs) arr.push_back(d.to_json());
    std::cout << arr.dump(2) << "\n";
  }
}

std::string yes(bool b) { return b ? "yes" : "no"; }

int run_construct(const std::string& family, int p, int q, int s, bool as_json) {
  std::vector<int> params;
  if (p >= 0) params.push_back(p);
  if (q >= 0) params.push_back(q);
  Graph g = named_family(family, params);
  if (s > 1) g = s_clique_extension(g, s);
  if (as_json) {
    auto d = document_for(g, "construct:" + family, "graph6");
    d.witnesses.push_back({{"graph6", encode_graph6(g)}, {"n", g.order()}, {"edges", g.edge_count()}});
    emit_documents({d});
  } else {
    std::cout << encode_graph6(g) << "\n";
  }
  return 0;
}

int run_check(const Input& in, bool as_json) {
  const auto loaded = load(in);
  int code = 0;
  std::vector<ReportDocument> docs;
  for (std::size_t i = 0; i < loaded.graphs.size(); ++i) {
    const Graph& g = loaded.graphs[i];
    const auto r = regularity_report(g);
    std::optional<MomentReport> moments;
    if (r.co_edge_regular) moments = moment_identities(g);
    const bool holds = r.co_edge_regular && moments && moments->holds;
    if (!holds) code = std::max(code, 1);
    if (as_json) {
      auto d = document_for(g, source_name(loaded, i), in.format);
      d.regularity = to_json(r);
      if (moments) d.witnesses.push_back({{"moment_identities", to_json(*moments)}});
      for (const auto& w : r.witnesses) d.witnesses.push_back(to_json(w));
      docs.push_back(std::move(d));
      continue;
    }
    std::cout << "graph: " << source_name(loaded, i) << " n=" << r.n << "\n";
    std::cout << "connected: " << yes(r.connected) << "\n";
    std::cout << "regular: " << yes(r.regular) << (r.k ? " (k=" + std::to_string(*r.k) + ")" : "") << "\n";
    std::cout << "co-edge-regular: " << yes(r.co_edge_regular);
    if (r.co_edge_regular) std::cout << " (n,k,c)=(" << r.n << "," << *r.k << "," << *r.c << ")";
    std::cout << "\n";
    std::cout << "strongly co-edge-regular: " << yes(r.strongly_co_edge_regular);
    if (r.ell) std::cout << " ell=" << *r.ell;
    std::cout << "\n";
    std::cout << "walk-regular: " << yes(r.walk_regular) << "\n";
    std::cout << "strongly regular: " << yes(r.strongly_regular);
    if (r.a) std::cout << " (n,k,a,c)=(" << r.n << "," << *r.k << "," << *r.a << "," << *r.c << ")";
    std::cout << "\n";
    std::cout << "terwilliger: " << yes(r.terwilliger) << "\n";
    if (moments)
      std::cout << "moment identities: " << (moments->holds ? "hold" : "fail: " + moments->failure->to_string()) << "\n";
    for (const auto& w : r.witnesses) std::cout << "witness: " << w.to_string() << "\n";
  }
  if (as_json) emit_documents(docs);
  return code;
}

std::string relation(std::strong_ordering c) {
  if (c == std::strong_ordering::less) return "<";
  if (c == std::strong_ordering::greater) return ">";
  return "==";
}

int run_spectrum(const Input& in, const std::string& threshold, bool as_json) {
  const auto loaded = load(in);
  std::optional<Rational> t;
  if (!threshold.empty()) t = rational_from_string(threshold);
  std::vector<ReportDocument> docs;
  for (std::size_t i = 0; i < loaded.graphs.size(); ++i) {
    const Spectrum s = spectrum(loaded.graphs[i]);
    std::string cmp_line;
    if (t) cmp_line = "theta_min " + relation(cmp_min_eigenvalue(s, *t)) + " " + rational_to_string(*t);
    if (as_json) {
      auto d = document_for(loaded.graphs[i], source_name(loaded, i), in.format);
      d.spectrum = to_json(s);
      if (t) d.witnesses.push_back({{"threshold", rational_to_string(*t)},
                                    {"theta_min_relation", relation(cmp_min_eigenvalue(s, *t))}});
      docs.push_back(std::move(d));
      continue;
    }
    std::cout << "graph: " << source_name(loaded, i) << "\n";
    std::cout << "charpoly: " << s.charpoly.to_string() << "\n";
    std::cout << "eigenvalues: " << s.to_string() << "\n";
    std::cout << "distinct: " << s.distinct_count << "\n";
    if (t) std::cout << cmp_line << "\n";
  }
  if (as_json) emit_documents(docs);
  return 0;
}

int run_classify(const Input& in, const std::string& theorem, bool as_json) {
  const auto loaded = load(in);
  int code = 0;
  std::vector<ReportDocument> docs;
  for (std::size_t i = 0; i < loaded.graphs.size(); ++i) {
    const auto v = classify(loaded.graphs[i], theorem);
    code = std::max(code, v.exit_code());
    if (as_json) {
      auto d = document_for(loaded.graphs[i], source_name(loaded, i), in.format);
      d.verdicts.push_back(to_json(v));
      docs.push_back(std::move(d));
      continue;
    }
    std::cout << "graph: " << source_name(loaded, i) << "\n";
    std::cout << "theorem: " << v.theorem << "\n";
    for (const auto& e : v.trail)
      std::cout << "  " << (e.passed ? "[ok]   " : "[fail] ") << e.check << ": " << e.result
                << (e.witness.empty() ? "" : " (" + e.witness + ")") << "\n";
    std::cout << "verdict: " << v.summary() << "\n";
    for (const auto& r : v.reasons) std::cout << "reason: " << r << "\n";
    if (!v.evidence.empty()) std::cout << "evidence: " << v.evidence << "\n";
  }
  if (as_json) emit_documents(docs);
  return code;
}

int run_search(int n, int k, int c, bool windows, bool as_json) {
  const auto graphs = c >= 0 ? search_co_edge_regular(n, k, c) : enumerate_regular(n, k);
  int code = 0;
  json list = json::array();
  for (const auto& g : graphs) {
    json entry = {{"graph6", encode_graph6(g)}};
    if (windows) {
      const auto v = check_nonexistence_windows(g);
      if (v.outcome == Outcome::ConclusionViolated) code = 2;
      entry["windows"] = v.summary();
    }
    list.push_back(entry);
  }
  if (as_json) {
    ReportDocument d;
    d.source = "search:n=" + std::to_string(n) + ",k=" + std::to_string(k) + (c >= 0 ? ",c=" + std::to_string(c) : "");
    d.format = "graph6";
    d.witnesses.push_back({{"count", graphs.size()}, {"graphs", list}});
    emit_documents({d});
  } else {
    for (const auto& e : list)
      std::cout << e["graph6"].get<std::string>()
                << (e.contains("windows") ? " " + e["windows"].get<std::string>() : "") << "\n";
    std::cout << "count: " << graphs.size() << "\n";
  }
  return code;
}

int run_iso(const Input& in, const std::string& other, bool as_json) {
  auto a = load(in);
  std::vector<Graph> pair = a.graphs;
  if (!other.empty()) {
    const auto b = load({other, in.format});
    pair.insert(pair.end(), b.graphs.begin(), b.graphs.end());
  }
  if (pair.size() != 2) throw Error("iso needs exactly two graphs, got " + std::to_string(pair.size()));
  const auto iso = find_isomorphism(pair[0], pair[1]);
  if (as_json) {
    auto d = document_for(pair[0], a.source, in.format);
    json w = {{"isomorphic", iso.has_value()}};
    if (iso) w["map"] = *iso;
    d.witnesses.push_back(w);
    emit_documents({d});
  } else {
    std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
    if (iso) {
      std::cout << "map:";
      for (int v : *iso) std::cout << " " << v;
      std::cout << "\n";
    }
  }
  return iso ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of co-edge-regular graphs"};
  app.require_subcommand(1);

  Input in;
  bool as_json = false;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--in", in.path, "Input file (default: standard input)");
    sub->add_option("--format", in.format, "Input format")->check(CLI::IsMember({"graph6", "edgelist"}));
    sub->add_flag("--json", as_json, "Emit a JSON report");
  };

  std::string family;
  int p = -1, q = -1, s = 1;
  auto* construct = app.add_subcommand("construct", "Emit graph6 of a named family");
  construct->add_option("--family", family, "grid, petersen, shrikhande, cycle, complete, ...")->required();
  construct->add_option("--p", p, "First parameter");
  construct->add_option("--q", q, "Second parameter");
  construct->add_option("--s", s, "Clique-extension factor")->check(CLI::PositiveNumber);
  construct->add_flag("--json", as_json, "Emit a JSON report");

  auto* check = app.add_subcommand("check", "Regularity properties and moment identities");
  add_input(check);

  std::string threshold;
  auto* spec = app.add_subcommand("spectrum", "Characteristic polynomial and exact eigenvalues");
  add_input(spec);
  spec->add_option("--threshold", threshold, "Compare theta_min with this rational");

  std::string theorem;
  auto* cls = app.add_subcommand("classify", "Run a classification pipeline");
  add_input(cls);
  cls->add_option("--theorem", theorem, "Pipeline")
      ->required()
      ->check(CLI::IsMember({"1.2", "1.3", "1.4", "4.1", "windows"}));

  int n = 0, k = 0, c = -1;
  bool windows = false;
  auto* search = app.add_subcommand("search", "Enumerate regular graphs up to isomorphism");
  search->add_option("--n", n, "Order")->required();
  search->add_option("--k", k, "Degree")->required();
  search->add_option("--c", c, "Keep co-edge-regular graphs with this c");
  search->add_flag("--check-windows", windows, "Run the nonexistence-window check on every result");
  search->add_flag("--json", as_json, "Emit a JSON report");

  std::string other;
  auto* iso = app.add_subcommand("iso", "Test two graphs for isomorphism");
  add_input(iso);
  iso->add_option("--with", other, "Second input file (otherwise the input holds two graphs)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*construct) return run_construct(family, p, q, s, as_json);
    if (*check) return run_check(in, as_json);
    if (*spec) return run_spectrum(in, threshold, as_json);
    if (*cls) return run_classify(in, theorem, as_json);
    if (*search) return run_search(n, k, c, windows, as_json);
    if (*iso) return run_iso(in, other, as_json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
