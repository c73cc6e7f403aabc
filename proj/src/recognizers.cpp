#include "coedge/recognizers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "coedge/regularity.hpp"
#include "coedge/subgraph.hpp"

namespace coedge {

namespace {

/// Components of the subgraph induced on `within`, each sorted.
std::vector<std::vector<int>> components_within(const Graph& g, const Bitset& within) {
  std::vector<std::vector<int>> out;
  Bitset left = within;
  while (left.any()) {
    std::vector<int> comp;
    std::vector<int> stack{static_cast<int>(left.first())};
    left.reset(left.first());
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      Bitset next = g.row(v) & left;
      next.for_each([&](std::size_t u) {
        left.reset(u);
        stack.push_back(static_cast<int>(u));
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_clique(const Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

}  // namespace

std::optional<GridRecognition> recognize_grid(const Graph& g) {
  const int n = g.order();
  if (n < 4 || !g.regular_degree()) return std::nullopt;

  // Every local graph must be a disjoint union of exactly two cliques.
  std::set<std::vector<int>> cliques;
  for (int x = 0; x < n; ++x) {
    auto comps = components_within(g, g.row(x));
    if (comps.size() != 2) return std::nullopt;
    for (auto& c : comps) {
      if (!is_clique(g, c)) return std::nullopt;
      c.push_back(x);
      std::sort(c.begin(), c.end());
      cliques.insert(std::move(c));
    }
  }
  const std::vector<std::vector<int>> list(cliques.begin(), cliques.end());
  std::vector<std::vector<int>> containing(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < list.size(); ++c)
    for (int v : list[c]) containing[v].push_back(static_cast<int>(c));
  for (const auto& cs : containing)
    if (cs.size() != 2) return std::nullopt;

  // Two-colour the cliques: cliques through a common vertex differ.
  std::vector<int> colour(list.size(), -1);
  for (std::size_t start = 0; start < list.size(); ++start) {
    if (colour[start] >= 0) continue;
    colour[start] = 0;
    std::vector<int> stack{static_cast<int>(start)};
    while (!stack.empty()) {
      const int c = stack.back();
      stack.pop_back();
      for (int v : list[c])
        for (int d : containing[v]) {
          if (d == c) continue;
          if (colour[d] < 0) {
            colour[d] = 1 - colour[c];
            stack.push_back(d);
          } else if (colour[d] == colour[c]) {
            return std::nullopt;
          }
        }
    }
  }

  std::array<std::vector<int>, 2> byColour;
  for (std::size_t c = 0; c < list.size(); ++c) byColour[colour[c]].push_back(static_cast<int>(c));
  // The class with more cliques indexes the first coordinate.
  const int first = byColour[0].size() >= byColour[1].size() ? 0 : 1;
  const auto& rows = byColour[first];
  const auto& cols = byColour[1 - first];
  const int p = static_cast<int>(rows.size());
  const int q = static_cast<int>(cols.size());
  if (q < 2 || p * q != n) return std::nullopt;

  std::vector<int> index(list.size(), -1);
  for (int i = 0; i < p; ++i) index[rows[i]] = i;
  for (int j = 0; j < q; ++j) index[cols[j]] = j;

  GridRecognition r{p, q, std::vector<int>(static_cast<std::size_t>(n), -1)};
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    int i = -1, j = -1;
    for (int c : containing[v]) (colour[c] == first ? i : j) = index[c];
    if (i < 0 || j < 0) return std::nullopt;
    const int target = i * q + j;
    if (perm[target] >= 0) return std::nullopt;
    perm[target] = v;
    r.isomorphism[v] = target;
  }
  if (!(g.permuted(perm) == grid_graph(p, q))) return std::nullopt;
  return r;
}

CliqueExtensionRecognition recognize_clique_extension(const Graph& g) {
  const int n = g.order();
  if (n == 0 || g.is_complete()) throw Error("clique-extension recognition needs a non-complete graph");
  std::map<Bitset, std::vector<int>> groups;
  for (int v = 0; v < n; ++v) {
    Bitset closed = g.row(v);
    closed.set(static_cast<std::size_t>(v));
    groups[closed].push_back(v);
  }
  std::vector<std::vector<int>> classes;
  for (auto& [key, members] : groups) classes.push_back(std::move(members));
  std::sort(classes.begin(), classes.end());

  CliqueExtensionRecognition r;
  r.class_of.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int v : classes[c]) r.class_of[v] = static_cast<int>(c);

  const std::size_t s = classes[0].size();
  const bool uniform = std::all_of(classes.begin(), classes.end(), [&](const auto& c) { return c.size() == s; });
  if (!uniform || s < 2) {
    r.s = 1;
    r.quotient = g;
    std::iota(r.class_of.begin(), r.class_of.end(), 0);
    r.note = uniform ? "closed neighbourhoods are pairwise distinct" : "closed-neighbourhood classes have mixed sizes";
    return r;
  }

  const int m = static_cast<int>(classes.size());
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (g.adjacent(classes[a][0], classes[b][0])) edges.emplace_back(a, b);
  r.s = static_cast<int>(s);
  r.quotient = Graph::from_edges(m, edges);

  std::vector<int> perm;
  perm.reserve(static_cast<std::size_t>(n));
  for (const auto& c : classes) perm.insert(perm.end(), c.begin(), c.end());
  if (!(g.permuted(perm) == s_clique_extension(r.quotient, r.s)))
    throw Error("clique-extension quotient failed verification");
  return r;
}

std::string to_string(TerwilligerVerdict v) {
  switch (v) {
    case TerwilligerVerdict::HasQuadrangle: return "has quadrangle";
    case TerwilligerVerdict::TwoCliqueExtensionOfPentagon: return "2-clique extension of pentagon";
    case TerwilligerVerdict::TwoCliqueExtensionOfPetersen: return "2-clique extension of Petersen";
    case TerwilligerVerdict::OutsideScope: return "outside scope (ell < 2k/7)";
    case TerwilligerVerdict::Unclassified: return "unclassified";
  }
  return "unknown";
}

TerwilligerStructure terwilliger_structure(const Graph& g) {
  const auto params = co_edge_regular_params(g);
  if (!params) throw Error("not co-edge-regular: " + params.witness.to_string());
  if (params->c != 2) throw Error("terwilliger_structure needs c = 2, got c = " + std::to_string(params->c));
  const auto ell = strongly_co_edge_regular_ell(g);
  if (!ell) throw Error("not strongly co-edge-regular: " + ell.witness.to_string());

  TerwilligerStructure t;
  t.k = params->k;
  t.ell = *ell;
  t.quadrangle = has_induced_quadrangle(g);
  if (t.quadrangle) {
    t.verdict = TerwilligerVerdict::HasQuadrangle;
    return t;
  }
  const auto ext = recognize_clique_extension(g);
  if (ext.s == 2 && is_isomorphic(ext.quotient, cycle_graph(5))) {
    t.verdict = TerwilligerVerdict::TwoCliqueExtensionOfPentagon;
  } else if (ext.s == 2 && is_isomorphic(ext.quotient, petersen_graph())) {
    t.verdict = TerwilligerVerdict::TwoCliqueExtensionOfPetersen;
  } else if (7 * t.ell < 2 * t.k) {
    t.verdict = TerwilligerVerdict::OutsideScope;
  } else {
    t.verdict = TerwilligerVerdict::Unclassified;
  }
  return t;
}

}  // namespace coedge
