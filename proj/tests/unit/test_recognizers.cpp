#include <doctest.h>

#include <cstdlib>
#include <set>

#include "../fixtures.hpp"
#include "coedge/canonical.hpp"
#include "coedge/enumerate.hpp"
#include "coedge/recognizers.hpp"
#include "coedge/regularity.hpp"

using namespace coedge;

TEST_SUITE("recognizers") {

TEST_CASE("isomorphism examples") {
  CHECK(is_isomorphic(cycle_graph(5), complement(cycle_graph(5))));
  CHECK_FALSE(is_isomorphic(shrikhande_graph(), grid_graph(4, 4)));
  std::mt19937_64 rng(53);
  CHECK(is_isomorphic(grid_graph(4, 3), fixtures::random_relabel(grid_graph(4, 3), rng)));
  CHECK_FALSE(is_isomorphic(fixtures::clebsch(), complement(fixtures::clebsch())));
  CHECK_FALSE(is_isomorphic(fixtures::chang(), triangular_graph(8)));
}

TEST_CASE("canonical form is relabelling invariant") {
  std::mt19937_64 rng(59);
  for (const Graph& g : fixtures::named()) {
    CAPTURE(g.label());
    const CanonicalForm base = canonical_form(g);
    CHECK(canonical_form(base.graph(g)) == base);
    for (int i = 0; i < 3; ++i) {
      const Graph h = fixtures::random_relabel(g, rng);
      const CanonicalForm c = canonical_form(h);
      CHECK(c == base);
      CHECK(c.graph(h) == base.graph(g));
      const auto iso = find_isomorphism(g, h);
      REQUIRE(iso);
      for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v) CHECK(g.adjacent(u, v) == h.adjacent((*iso)[u], (*iso)[v]));
    }
  }
}

TEST_CASE("canonical form agrees with brute force on small graphs") {
  std::mt19937_64 rng(61);
  std::vector<Graph> graphs;
  for (int i = 0; i < 120; ++i) graphs.push_back(fixtures::random_graph(rng, 3 + i % 6, 0.5));
  for (int n = 4; n <= 8; ++n)
    for (int k = 2; k < n; ++k)
      if (n * k % 2 == 0)
        for (const Graph& g : enumerate_regular(n, k)) graphs.push_back(g);
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i; j < std::min(graphs.size(), i + 6); ++j) {
      const Graph& a = graphs[i];
      const Graph& b = graphs[j];
      if (a.order() != b.order()) continue;
      CHECK((canonical_form(a) == canonical_form(b)) == is_isomorphic_brute_force(a, b));
    }
}

TEST_CASE("initial partitions are respected") {
  const Graph p4 = path_graph(4);
  const CanonicalForm a = canonical_form(p4, {{0}, {1, 2, 3}});
  const CanonicalForm b = canonical_form(p4, {{3}, {0, 1, 2}});
  CHECK(a == b);
  CHECK(canonical_form(p4, {{1}, {0, 2, 3}}) != a);
  CHECK(a.relabelling[0] == 0);
  CHECK_THROWS_AS(canonical_form(p4, {{0, 1}, {1, 2, 3}}), Error);
  CHECK_THROWS_AS(canonical_form(p4, {{0, 1}}), Error);
}

TEST_CASE("grid recognition") {
  const auto r = recognize_grid(grid_graph(7, 4));
  REQUIRE(r);
  CHECK(r->p == 7);
  CHECK(r->q == 4);
  CHECK_FALSE(recognize_grid(shrikhande_graph()));
  const auto c4 = recognize_grid(cycle_graph(4));
  REQUIRE(c4);
  CHECK(c4->p == 2);
  CHECK(c4->q == 2);
  std::mt19937_64 rng(67);
  for (int p = 2; p <= 8; ++p)
    for (int q = 2; q <= p; ++q) {
      const Graph g = fixtures::random_relabel(grid_graph(p, q), rng);
      const auto rec = recognize_grid(g);
      REQUIRE(rec);
      CHECK(rec->p == p);
      CHECK(rec->q == q);
      const Graph target = grid_graph(p, q);
      for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
          CHECK(g.adjacent(u, v) == target.adjacent(rec->isomorphism[u], rec->isomorphism[v]));
    }
  for (const Graph& g : {petersen_graph(), triangular_graph(5), cycle_graph(6), s_clique_extension(cycle_graph(5), 2),
                         complete_graph(4), cocktail_party(3), fixtures::clebsch()})
    CHECK_FALSE(recognize_grid(g));
}

TEST_CASE("clique extension recognition") {
  const auto c5 = recognize_clique_extension(s_clique_extension(cycle_graph(5), 2));
  CHECK(c5.s == 2);
  CHECK(is_isomorphic(c5.quotient, cycle_graph(5)));
  CHECK(recognize_clique_extension(petersen_graph()).s == 1);
  const auto pet = recognize_clique_extension(s_clique_extension(petersen_graph(), 2));
  CHECK(pet.s == 2);
  CHECK(is_isomorphic(pet.quotient, petersen_graph()));
  std::mt19937_64 rng(71);
  const Graph shuffled = fixtures::random_relabel(s_clique_extension(petersen_graph(), 3), rng);
  const auto r3 = recognize_clique_extension(shuffled);
  CHECK(r3.s == 3);
  CHECK(is_isomorphic(r3.quotient, petersen_graph()));
  CHECK_THROWS_AS(recognize_clique_extension(complete_graph(5)), Error);
}

TEST_CASE("Terwilliger structure") {
  CHECK(terwilliger_structure(grid_graph(4, 3)).verdict == TerwilligerVerdict::HasQuadrangle);
  CHECK(terwilliger_structure(s_clique_extension(cycle_graph(5), 2)).verdict ==
        TerwilligerVerdict::TwoCliqueExtensionOfPentagon);
  CHECK(terwilliger_structure(s_clique_extension(petersen_graph(), 2)).verdict ==
        TerwilligerVerdict::TwoCliqueExtensionOfPetersen);
  CHECK_THROWS_AS(terwilliger_structure(petersen_graph()), Error);
  for (const Graph& g : fixtures::c2_fixtures()) {
    if (!strongly_co_edge_regular_ell(g)) continue;
    CHECK(terwilliger_structure(g).verdict != TerwilligerVerdict::Unclassified);
  }
}

TEST_CASE("regular graph enumeration") {
  const auto k4 = enumerate_regular(4, 3);
  REQUIRE(k4.size() == 1);
  CHECK(is_isomorphic(k4[0], complete_graph(4)));

  const auto cubic6 = enumerate_regular(6, 3);
  std::vector<Graph> connected;
  for (const Graph& g : cubic6)
    if (g.is_connected()) connected.push_back(g);
  REQUIRE(connected.size() == 2);
  const Graph prism = cartesian_product(complete_graph(3), complete_graph(2));
  const bool first_k33 = is_isomorphic(connected[0], complete_bipartite(3, 3));
  CHECK(is_isomorphic(connected[first_k33 ? 0 : 1], complete_bipartite(3, 3)));
  CHECK(is_isomorphic(connected[first_k33 ? 1 : 0], prism));

  CHECK_THROWS_AS(enumerate_regular(5, 3), Error);
  CHECK_THROWS_AS(enumerate_regular(5, 5), Error);
  CHECK_THROWS_AS(enumerate_regular(14, 3), Error);
}

TEST_CASE("enumeration against brute force") {
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k < n; ++k) {
      if (n * k % 2) continue;
      CAPTURE(n);
      CAPTURE(k);
      const auto fast = enumerate_regular(n, k);
      const auto slow = enumerate_regular_brute_force(n, k);
      REQUIRE(fast.size() == slow.size());
      std::set<CanonicalForm> a, b;
      for (const Graph& g : fast) a.insert(canonical_form(g));
      for (const Graph& g : slow) b.insert(canonical_form(g));
      CHECK(a.size() == fast.size());
      CHECK(a == b);
    }
}

TEST_CASE("known counts of regular graphs") {
  // Numbers of k-regular graphs, connected or not.
  CHECK(enumerate_regular(8, 3).size() == 6);
  CHECK(enumerate_regular(10, 3).size() == 21);
  CHECK(enumerate_regular(8, 4).size() == 6);
  CHECK(enumerate_regular(9, 4).size() == 16);
  CHECK(enumerate_regular(10, 2).size() == 5);
}

TEST_CASE("co-edge-regular search") {
  for (const Graph& g : search_co_edge_regular(8, 4, 2)) {
    const auto p = co_edge_regular_params(g);
    REQUIRE(p);
    CHECK(p->c == 2);
  }
  bool found = false;
  for (const Graph& g : search_co_edge_regular(9, 4, 2)) found = found || is_isomorphic(g, grid_graph(3, 3));
  CHECK(found);
}

}
