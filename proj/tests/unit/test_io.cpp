#include <doctest.h>

#include <regex>

#include "../fixtures.hpp"
#include "coedge/io.hpp"
#include "coedge/report.hpp"

using namespace coedge;

namespace {

/// Reference graph6 encoder written directly from the format description.
std::string graph6_reference(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  std::vector<int> bits;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) bits.push_back(g.adjacent(u, v) ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int x = 0;
    for (int j = 0; j < 6; ++j) x = (x << 1) | bits[i + j];
    out.push_back(static_cast<char>(x + 63));
  }
  return out;
}

bool has_floats(const nlohmann::json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& item : j)
      if (has_floats(item)) return true;
  return false;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("graph6 examples") {
  CHECK(parse_graph6("Bw") == complete_graph(3));
  CHECK(encode_graph6(complete_graph(1)) == "@");
  CHECK(encode_graph6(Graph()) == "?");
  const Graph g = grid_graph(4, 3);
  CHECK(encode_graph6(parse_graph6(encode_graph6(g))) == encode_graph6(g));
  CHECK(parse_graph6(">>graph6<<Bw\n") == complete_graph(3));
  CHECK(parse_graph6("  Bw  ") == complete_graph(3));
}

TEST_CASE("graph6 matches the reference encoder") {
  std::mt19937_64 rng(79);
  std::vector<Graph> graphs = fixtures::named();
  for (int i = 0; i < 200; ++i) graphs.push_back(fixtures::random_graph(rng, i % 90, 0.3));
  for (const Graph& g : graphs) {
    const std::string s = encode_graph6(g);
    CHECK(s == graph6_reference(g));
    CHECK(parse_graph6(s) == g);
  }
}

TEST_CASE("graph6 errors") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);
  CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);
  CHECK_THROWS_AS(parse_graph6("Bx"), ParseError);
  CHECK_THROWS_AS(parse_graph6("B\x7f"), ParseError);
  CHECK_THROWS_AS(parse_graph6("~"), ParseError);
}

TEST_CASE("edge lists") {
  CHECK(parse_edge_list("2 1\n0 1\n") == complete_graph(2));
  CHECK(parse_edge_list("3 3\n0 1\n0 2\n1 2\n") == complete_graph(3));
  CHECK(parse_edge_list("# triangle\n3 3\n0 1 # first\n1 2\n0 2\n") == complete_graph(3));
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("x y"), ParseError);
  for (const Graph& g : fixtures::named()) CHECK(parse_edge_list(encode_edge_list(g)) == g);
}

TEST_CASE("multi-record input") {
  const auto gs = read_graphs("Bw\n\nC~\n", "graph6");
  REQUIRE(gs.size() == 2);
  CHECK(gs[1] == complete_graph(4));
  CHECK(read_graphs("2 1\n0 1\n", "edgelist").size() == 1);
  CHECK_THROWS_AS(read_graphs("Bw", "dot"), Error);
}

TEST_CASE("rationals") {
  CHECK(rational_to_string(Rational(-3)) == "-3");
  CHECK(rational_to_string(Rational(15, 4)) == "15/4");
  CHECK(rational_from_string("-7/2") == Rational(-7, 2));
  CHECK_THROWS_AS(rational_from_string("1.5"), Error);
}

TEST_CASE("reports carry no floating values") {
  const std::regex float_literal(R"((^|[^"\w/])-?\d+\.\d+)");
  for (const Graph& g : {grid_graph(4, 3), s_clique_extension(cycle_graph(5), 2), cycle_graph(5), petersen_graph()}) {
    ReportDocument doc;
    doc.source = "test";
    doc.format = "graph6";
    doc.canonical_hash = canonical_hash(g);
    doc.regularity = to_json(regularity_report(g));
    doc.spectrum = to_json(spectrum(g));
    for (const char* t : {"1.2", "1.3", "4.1"}) doc.verdicts.push_back(to_json(classify(g, t)));
    for (const auto& h : forbidden_minus3_scan(g)) doc.witnesses.push_back(to_json(h));
    const auto j = doc.to_json();
    CHECK_FALSE(has_floats(j));
    CHECK_FALSE(std::regex_search(j.dump(), float_literal));
    CHECK(ReportDocument::from_json(nlohmann::json::parse(j.dump())) == doc);
  }
}

TEST_CASE("spectrum and verdict round trips") {
  for (const Graph& g : fixtures::c2_fixtures()) {
    const Spectrum s = spectrum(g);
    const Spectrum back = spectrum_from_json(nlohmann::json::parse(to_json(s).dump()));
    CHECK(back.charpoly == s.charpoly);
    CHECK(same_spectrum(back, s));
    for (const char* t : {"1.2", "1.3", "1.4", "4.1", "windows"}) {
      const auto v = classify(g, t);
      CHECK(verdict_from_json(nlohmann::json::parse(to_json(v).dump())) == v);
    }
  }
}

TEST_CASE("canonical hash") {
  std::mt19937_64 rng(83);
  for (const Graph& g : fixtures::named()) CHECK(canonical_hash(g) == canonical_hash(fixtures::random_relabel(g, rng)));
  CHECK(canonical_hash(shrikhande_graph()) != canonical_hash(grid_graph(4, 4)));
  CHECK(canonical_hash(cycle_graph(5)).size() == 16);
}

TEST_CASE("schema version is checked") {
  ReportDocument doc;
  auto j = doc.to_json();
  j["schema_version"] = 2;
  CHECK_THROWS_AS(ReportDocument::from_json(j), Error);
}

}
