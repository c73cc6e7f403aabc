#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "coedge/graph.hpp"
#include "coedge/polynomial.hpp"
#include "coedge/spectrum.hpp"

namespace fixtures {

using coedge::Graph;

/// Complement of the folded 5-cube: SRG(16,10,6,6).
inline Graph clebsch() {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 16; ++u)
    for (int v = u + 1; v < 16; ++v) {
      const int d = __builtin_popcount(static_cast<unsigned>(u ^ v));
      if (!(d == 1 || d == 4)) edges.emplace_back(u, v);
    }
  return Graph::from_edges(16, edges, "clebsch");
}

/// Skewness graph of the 27 lines on a cubic surface: SRG(27,16,10,8).
inline Graph schlafli() {
  // 0..5 a_i, 6..11 b_i, 12..26 c_ij (i<j lexicographic).
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) pairs.emplace_back(i, j);
  auto meets = [&](int u, int v) {
    auto kind = [](int x) { return x < 6 ? 0 : x < 12 ? 1 : 2; };
    if (kind(u) > kind(v)) std::swap(u, v);
    const int ku = kind(u), kv = kind(v);
    if (ku == 0 && kv == 0) return false;
    if (ku == 1 && kv == 1) return false;
    if (ku == 0 && kv == 1) return u != v - 6;
    if (kv == 2) {
      const auto [j, k] = pairs[v - 12];
      if (ku < 2) {
        const int i = ku == 0 ? u : u - 6;
        return i == j || i == k;
      }
      const auto [a, b] = pairs[u - 12];
      return a != j && a != k && b != j && b != k;
    }
    return false;
  };
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 27; ++u)
    for (int v = u + 1; v < 27; ++v)
      if (!meets(u, v)) edges.emplace_back(u, v);
  return Graph::from_edges(27, edges, "schlafli");
}

/// T(8) switched with respect to a perfect matching of K8: SRG(28,12,6,4).
inline Graph chang() {
  const Graph t8 = coedge::triangular_graph(8);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) pairs.emplace_back(i, j);
  std::vector<bool> in_x(28, false);
  for (int v = 0; v < 28; ++v) {
    const auto [i, j] = pairs[v];
    in_x[v] = (j == i + 1 && i % 2 == 0);
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 28; ++u)
    for (int v = u + 1; v < 28; ++v) {
      bool adj = t8.adjacent(u, v);
      if (in_x[u] != in_x[v]) adj = !adj;
      if (adj) edges.emplace_back(u, v);
    }
  return Graph::from_edges(28, edges, "chang");
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges, "random");
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline Graph random_relabel(const Graph& g, std::mt19937_64& rng) {
  return g.permuted(random_permutation(rng, g.order())).with_label(g.label());
}

/// Strongly co-edge-regular graphs with c = 2 available at desk scale.
inline std::vector<Graph> c2_fixtures() {
  std::vector<Graph> out;
  for (int p = 2; p <= 8; ++p)
    for (int q = 2; q <= p; ++q)
      if (p * q > 4) out.push_back(coedge::grid_graph(p, q).with_label("grid" + std::to_string(p) + "x" + std::to_string(q)));
  out.push_back(coedge::s_clique_extension(coedge::cycle_graph(5), 2).with_label("ext2-C5"));
  out.push_back(coedge::s_clique_extension(coedge::petersen_graph(), 2).with_label("ext2-petersen"));
  out.push_back(coedge::shrikhande_graph().with_label("shrikhande"));
  return out;
}

/// Named graphs used across suites; all connected.
inline std::vector<Graph> named() {
  using namespace coedge;
  std::vector<Graph> out = c2_fixtures();
  out.push_back(cycle_graph(5).with_label("C5"));
  out.push_back(cycle_graph(6).with_label("C6"));
  out.push_back(path_graph(5).with_label("P5"));
  out.push_back(complete_graph(5).with_label("K5"));
  out.push_back(complete_bipartite(3, 3).with_label("K33"));
  out.push_back(complete_bipartite(2, 5).with_label("K25"));
  out.push_back(petersen_graph().with_label("petersen"));
  out.push_back(cocktail_party(3).with_label("K3x2"));
  out.push_back(cocktail_party(4).with_label("K4x2"));
  out.push_back(triangular_graph(5).with_label("T5"));
  out.push_back(triangular_graph(6).with_label("T6"));
  out.push_back(clebsch());
  out.push_back(schlafli());
  out.push_back(chang());
  out.push_back(s_clique_extension(petersen_graph(), 3).with_label("ext3-petersen"));
  out.push_back(line_graph(petersen_graph()).with_label("L(petersen)"));
  out.push_back(cartesian_product(cycle_graph(5), complete_graph(3)).with_label("C5xK3"));
  return out;
}

/// det(xI - A) by exact determinants at n+1 integer points followed by
/// Lagrange interpolation; independent of the library's charpoly path.
inline coedge::ExactPolynomial charpoly_by_interpolation(const Graph& g) {
  using coedge::BigInt;
  using coedge::Rational;
  const int n = g.order();
  std::vector<Rational> xs, ys;
  for (int t = 0; t <= n; ++t) {
    coedge::IntMatrix m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = (i == j ? t : 0) - (g.adjacent(i, j) ? 1 : 0);
    xs.emplace_back(t);
    ys.emplace_back(coedge::determinant(m));
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(n + 1), Rational(0));
  for (int i = 0; i <= n; ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    for (std::size_t d = 0; d < basis.size(); ++d) coeffs[d] += ys[i] * basis[d] / denom;
  }
  std::vector<BigInt> ints;
  for (const auto& c : coeffs) {
    if (denominator(c) != 1) throw std::runtime_error("non-integral interpolated coefficient");
    ints.push_back(numerator(c));
  }
  return coedge::ExactPolynomial(std::move(ints));
}

/// Every induced embedding by exhaustive injective maps (small hosts).
inline bool brute_contains_induced(const Graph& host, const Graph& pattern) {
  const int n = host.order(), p = pattern.order();
  if (p > n) return false;
  std::vector<int> map(static_cast<std::size_t>(p), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<bool(int)> go = [&](int i) {
    if (i == p) return true;
    for (int h = 0; h < n; ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = pattern.adjacent(i, j) == host.adjacent(h, map[j]);
      if (!ok) continue;
      used[h] = true;
      map[i] = h;
      if (go(i + 1)) return true;
      used[h] = false;
    }
    return false;
  };
  return go(0);
}

/// Largest clique by subset enumeration (n <= 20).
inline int brute_clique_number(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool clique = true;
    for (int u = 0; u < n && clique; ++u)
      if ((mask >> u) & 1)
        for (int v = u + 1; v < n && clique; ++v)
          if ((mask >> v) & 1) clique = g.adjacent(u, v);
    if (clique) best = size;
  }
  return best;
}

}  // namespace fixtures
