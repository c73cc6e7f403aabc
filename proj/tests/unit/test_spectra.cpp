#include <doctest.h>

#include <Eigen/Dense>

#include "../fixtures.hpp"
#include "coedge/spectrum.hpp"

using namespace coedge;

namespace {

ExactPolynomial poly(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return ExactPolynomial(std::move(v));
}

ExactPolynomial power(const ExactPolynomial& p, int e) {
  ExactPolynomial out = ExactPolynomial::constant(1);
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

/// Exact integer eigenvalues with multiplicities, descending.
std::vector<std::pair<long, int>> integral_spectrum(const Spectrum& s) {
  std::vector<std::pair<long, int>> out;
  for (const auto& e : s.roots) {
    REQUIRE(e.value.exact);
    REQUIRE(denominator(e.value.lo) == 1);
    out.emplace_back(static_cast<long>(numerator(e.value.lo)), e.multiplicity);
  }
  return out;
}

std::vector<double> numeric_eigenvalues(const Graph& g) {
  Eigen::MatrixXd a(g.order(), g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j) a(i, j) = g.adjacent(i, j) ? 1.0 : 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + g.order());
  std::sort(v.rbegin(), v.rend());
  return v;
}

Graph cone_2ks_tk1(int s, int t) {
  const Graph base =
      disjoint_union(disjoint_union(complete_graph(s), complete_graph(s)), empty_graph(t));
  return cone(base);
}

Partition cone_partition(int s, int t) {
  std::vector<int> cliques, rest;
  for (int i = 0; i < 2 * s; ++i) cliques.push_back(i);
  for (int i = 0; i < t; ++i) rest.push_back(2 * s + i);
  return {VertexSet{2 * s + t}, VertexSet(cliques), VertexSet(rest)};
}

}  // namespace

TEST_SUITE("spectra") {

TEST_CASE("characteristic polynomial examples") {
  CHECK(char_poly(complete_graph(3)) == poly({-2, -3, 0, 1}));
  CHECK(char_poly(complete_graph(3)).to_string() == "x^3 - 3*x - 2");
  CHECK(char_poly(cycle_graph(4)) == poly({0, 0, -4, 0, 1}));
  const ExactPolynomial pet = ExactPolynomial::linear_root(3) * power(ExactPolynomial::linear_root(1), 5) *
                              power(ExactPolynomial::linear_root(-2), 4);
  CHECK(char_poly(petersen_graph()) == pet);
  CHECK_THROWS_AS(char_poly(Graph()), Error);
}

TEST_CASE("characteristic polynomial against interpolated determinants") {
  std::mt19937_64 rng(17);
  std::vector<Graph> graphs = fixtures::named();
  for (int i = 0; i < 20; ++i) graphs.push_back(fixtures::random_graph(rng, 3 + i % 14, 0.4));
  for (const Graph& g : graphs) {
    if (g.order() > 30) continue;
    CAPTURE(g.label());
    const ExactPolynomial p = char_poly(g);
    CHECK(p.degree() == g.order());
    CHECK(p.is_monic());
    CHECK(p.coeff(g.order() - 1) == 0);
    CHECK(p.coeff(g.order() - 2) == -BigInt(g.edge_count()));
    if (g.order() <= 20) CHECK(p == fixtures::charpoly_by_interpolation(g));
    for (int t : {-3, -2, 0, 1}) {
      IntMatrix m(g.order(), std::vector<std::int64_t>(g.order(), 0));
      for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j) m[i][j] = (i == j ? t : 0) - (g.adjacent(i, j) ? 1 : 0);
      CHECK(p.eval(BigInt(t)) == determinant(m));
    }
  }
}

TEST_CASE("spectrum examples") {
  const Spectrum grid = spectrum(grid_graph(4, 3));
  CHECK(integral_spectrum(grid) == std::vector<std::pair<long, int>>{{5, 1}, {2, 2}, {1, 3}, {-2, 6}});

  const Spectrum ext = spectrum(s_clique_extension(cycle_graph(5), 2));
  REQUIRE(ext.roots.size() == 4);
  CHECK(ext.roots[0].multiplicity == 1);
  CHECK(compare(ext.roots[0].value, Rational(5)) == 0);
  CHECK(ext.roots[1].value.poly == poly({-5, 0, 1}));
  CHECK(ext.roots[1].multiplicity == 2);
  CHECK(compare(ext.roots[2].value, Rational(-1)) == 0);
  CHECK(ext.roots[2].multiplicity == 5);
  CHECK(ext.theta_min().poly == poly({-5, 0, 1}));
  CHECK(compare(ext.theta_min(), Rational(-2)) < 0);
  CHECK(compare(ext.theta_min(), Rational(-3)) > 0);

  const Spectrum k1 = spectrum(complete_graph(1));
  CHECK(integral_spectrum(k1) == std::vector<std::pair<long, int>>{{0, 1}});
}

TEST_CASE("spectrum against a floating oracle") {
  std::mt19937_64 rng(23);
  std::vector<Graph> graphs = fixtures::named();
  for (int i = 0; i < 25; ++i) graphs.push_back(fixtures::random_graph(rng, 2 + i % 18, 0.5));
  for (const Graph& g : graphs) {
    CAPTURE(g.label());
    const Spectrum s = spectrum(g);
    const auto expanded = s.expanded();
    const auto numeric = numeric_eigenvalues(g);
    REQUIRE(expanded.size() == numeric.size());
    int total = 0;
    for (const auto& e : s.roots) total += e.multiplicity;
    CHECK(total == g.order());
    CHECK(-s.charpoly.coeff(g.order() - 1) == 0);
    for (std::size_t i = 0; i < numeric.size(); ++i) CHECK(expanded[i].approx() == doctest::Approx(numeric[i]).epsilon(1e-6));
    for (std::size_t i = 1; i < s.roots.size(); ++i) CHECK(compare(s.roots[i - 1].value, s.roots[i].value) > 0);
    if (g.is_connected() && g.regular_degree())
      CHECK(compare(s.theta_max(), Rational(*g.regular_degree())) == 0);
  }
}

TEST_CASE("distinct eigenvalue counts") {
  for (int n = 2; n <= 7; ++n) CHECK(distinct_eigenvalue_count(complete_graph(n)) == 2);
  CHECK(distinct_eigenvalue_count(grid_graph(3, 3)) == 3);
  CHECK(distinct_eigenvalue_count(grid_graph(4, 3)) == 4);
}

TEST_CASE("minimum eigenvalue comparisons") {
  CHECK(cmp_min_eigenvalue(s_clique_extension(petersen_graph(), 2), Rational(-3)) == 0);
  CHECK(cmp_min_eigenvalue(cone_2ks_tk1(2, 7), Rational(-3)) < 0);
  CHECK(cmp_min_eigenvalue(grid_graph(5, 4), Rational(-2)) == 0);
  CHECK(cmp_min_eigenvalue(grid_graph(5, 4), Rational(-3)) > 0);
  CHECK(cmp_min_eigenvalue(cycle_graph(5), Rational(-2)) > 0);
  CHECK(cmp_min_eigenvalue(cycle_graph(5), Rational(-1618, 1000)) < 0);
  CHECK(cmp_min_eigenvalue(cycle_graph(5), Rational(-1617, 1000)) < 0);
  CHECK(cmp_min_eigenvalue(cycle_graph(5), Rational(-1619, 1000)) > 0);
}

TEST_CASE("interlacing examples") {
  const Spectrum c5 = spectrum(cycle_graph(5));
  CHECK(interlaces(c5, c5));
  CHECK(interlaces(c5, spectrum(path_graph(3))));
  CHECK_FALSE(interlaces(spectrum(complete_graph(4)), spectrum(empty_graph(3))));
  CHECK_THROWS_AS(interlaces(spectrum(path_graph(3)), c5), Error);
}

TEST_CASE("quotient matrices") {
  for (int s = 1; s <= 3; ++s)
    for (int t = 1; t <= 4; ++t) {
      const auto r = quotient_matrix(cone_2ks_tk1(s, t), cone_partition(s, t));
      REQUIRE(std::holds_alternative<QuotientMatrix>(r));
      const IntMatrix expected{{0, 2 * s, t}, {1, s - 1, 0}, {1, 0, 0}};
      CHECK(std::get<QuotientMatrix>(r).q == expected);
    }
  const Graph grid = grid_graph(4, 3);
  std::vector<int> all(12);
  std::iota(all.begin(), all.end(), 0);
  const auto single = quotient_matrix(grid, {VertexSet(all)});
  REQUIRE(std::holds_alternative<QuotientMatrix>(single));
  CHECK(std::get<QuotientMatrix>(single).q == IntMatrix{{5}});
  CHECK(quotient_spectrum_subset(std::get<QuotientMatrix>(single), grid));

  const Graph k23 = complete_bipartite(2, 3);
  const auto bip = quotient_matrix(k23, {VertexSet{0, 1}, VertexSet{2, 3, 4}});
  REQUIRE(std::holds_alternative<QuotientMatrix>(bip));
  CHECK(std::get<QuotientMatrix>(bip).q == IntMatrix{{0, 3}, {2, 0}});

  const Graph k33 = complete_bipartite(3, 3);
  const auto q33 = quotient_matrix(k33, {VertexSet{0, 1, 2}, VertexSet{3, 4, 5}});
  CHECK(quotient_spectrum_subset(std::get<QuotientMatrix>(q33), k33));
  const Graph c27 = cone_2ks_tk1(2, 7);
  CHECK(quotient_spectrum_subset(std::get<QuotientMatrix>(quotient_matrix(c27, cone_partition(2, 7))), c27));

  const auto bad = quotient_matrix(path_graph(4), {VertexSet{0, 1, 2, 3}});
  REQUIRE(std::holds_alternative<NotEquitable>(bad));
  CHECK(std::get<NotEquitable>(bad).observed != std::get<NotEquitable>(bad).expected);

  CHECK_THROWS_AS(quotient_matrix(k33, {VertexSet{0, 1, 2}, VertexSet{2, 3, 4, 5}}), Error);
  CHECK_THROWS_AS(quotient_matrix(k33, {VertexSet{0, 1, 2}, VertexSet{3, 4}}), Error);
  CHECK_THROWS_AS(quotient_matrix(k33, {VertexSet{0, 1, 2, 3, 4, 5}, VertexSet{}}), Error);
}

TEST_CASE("equitable refinement") {
  std::vector<int> nine(9);
  std::iota(nine.begin(), nine.end(), 0);
  CHECK(coarsest_equitable_refinement(grid_graph(3, 3), {VertexSet(nine)}).size() == 1);

  const Graph star = complete_bipartite(1, 9);
  std::vector<int> ten(10);
  std::iota(ten.begin(), ten.end(), 0);
  const Partition sp = coarsest_equitable_refinement(star, {VertexSet(ten)});
  REQUIRE(sp.size() == 2);
  CHECK(sp[0].size() + sp[1].size() == 10);
  CHECK(std::min(sp[0].size(), sp[1].size()) == 1);

  const Graph c = cone(disjoint_union(complete_graph(3), complete_graph(1)));
  std::vector<int> five(5);
  std::iota(five.begin(), five.end(), 0);
  const Partition cp = coarsest_equitable_refinement(c, {VertexSet(five)});
  REQUIRE(cp.size() == 3);
  std::vector<std::size_t> sizes;
  for (const auto& cell : cp) sizes.push_back(cell.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 3});
  CHECK(std::holds_alternative<QuotientMatrix>(quotient_matrix(c, cp)));
}

TEST_CASE("quotient eigenvalues lie in the spectrum") {
  std::mt19937_64 rng(31);
  std::vector<Graph> graphs = fixtures::named();
  for (int i = 0; i < 20; ++i) graphs.push_back(fixtures::random_graph(rng, 4 + i % 10, 0.3));
  for (const Graph& g : graphs) {
    CAPTURE(g.label());
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    std::vector<Partition> seeds{{VertexSet(all)}};
    std::vector<int> rest(all.begin() + 1, all.end());
    seeds.push_back({VertexSet{0}, VertexSet(rest)});
    for (const auto& seed : seeds) {
      const Partition p = coarsest_equitable_refinement(g, seed);
      const auto q = quotient_matrix(g, p);
      REQUIRE(std::holds_alternative<QuotientMatrix>(q));
      CHECK(quotient_spectrum_subset(std::get<QuotientMatrix>(q), g));
    }
  }
}

TEST_CASE("clique extension spectrum transfer") {
  const Spectrum c5 = clique_extension_spectrum(spectrum(cycle_graph(5)), 2);
  CHECK(same_spectrum(c5, spectrum(s_clique_extension(cycle_graph(5), 2))));
  CHECK(same_spectrum(clique_extension_spectrum(spectrum(complete_graph(1)), 3), spectrum(complete_graph(3))));
  const Spectrum pet = clique_extension_spectrum(spectrum(petersen_graph()), 2);
  CHECK(integral_spectrum(pet) == std::vector<std::pair<long, int>>{{7, 1}, {3, 5}, {-1, 10}, {-3, 4}});
  for (const Graph& g : fixtures::named()) {
    if (g.order() > 16) continue;
    CAPTURE(g.label());
    for (int s : {2, 3})
      CHECK(same_spectrum(clique_extension_spectrum(spectrum(g), s), spectrum(s_clique_extension(g, s))));
  }
}

TEST_CASE("Hoffman residual") {
  const auto grid = hoffman_residual(grid_graph(4, 3));
  CHECK(grid.zero);
  CHECK(grid.cubic.gv == poly({4, -4, -1, 1}));
  CHECK(grid.cubic.gv_at_k == 84);
  CHECK(grid.j_coefficient == Rational(7));
  CHECK(hoffman_residual(s_clique_extension(cycle_graph(5), 2)).zero);
  CHECK_THROWS_AS(hoffman_residual(grid_graph(3, 3)), Error);
  CHECK_THROWS_AS(hoffman_residual(disjoint_union(grid_graph(4, 3), grid_graph(4, 3))), Error);
  const auto c6 = hoffman_residual(cycle_graph(6));
  CHECK(c6.zero);
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix{{2, 1}, {1, 2}}) == 3);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
}

}
