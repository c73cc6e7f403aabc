#include "coedge/graph.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>

namespace coedge {

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_bits(const Bitset& bits) {
  VertexSet s;
  s.members_ = bits.to_vector();
  return s;
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::check_within(int n) const {
  if (!members_.empty() && (members_.front() < 0 || members_.back() >= n))
    throw Error("vertex index out of range");
}

Bitset VertexSet::to_bits(int n) const {
  check_within(n);
  Bitset b(static_cast<std::size_t>(n));
  for (int v : members_) b.set(static_cast<std::size_t>(v));
  return b;
}

// Graph ----------------------------------------------------------------------

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges,
                        std::string label) {
  if (n < 0) throw Error("negative vertex count");
  std::vector<Bitset> rows(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error("edge endpoint out of range");
    if (u == v) throw Error("self-loop");
    rows[u].set(static_cast<std::size_t>(v));
    rows[v].set(static_cast<std::size_t>(u));
  }
  return from_rows(std::move(rows), std::move(label));
}

Graph Graph::from_rows(std::vector<Bitset> rows, std::string label) {
  Graph g;
  g.n_ = static_cast<int>(rows.size());
  std::size_t bits = 0;
  for (int i = 0; i < g.n_; ++i) {
    if (rows[i].size() != rows.size()) throw Error("adjacency rows must be n bits wide");
    if (rows[i].test(static_cast<std::size_t>(i))) throw Error("self-loop");
    bits += rows[i].count();
  }
  for (int i = 0; i < g.n_; ++i)
    rows[i].for_each([&](std::size_t j) {
      if (!rows[j].test(static_cast<std::size_t>(i))) throw Error("adjacency not symmetric");
    });
  g.m_ = bits / 2;
  g.rows_ = std::move(rows);
  g.label_ = std::move(label);
  return g;
}

Graph Graph::with_label(std::string label) const {
  Graph g = *this;
  g.label_ = std::move(label);
  return g;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) d[i] = degree(i);
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int i = 0; i < n_; ++i)
    for (std::size_t j = rows_[i].next(static_cast<std::size_t>(i) + 1); j < rows_[i].size();
         j = rows_[i].next(j + 1))
      out.emplace_back(i, static_cast<int>(j));
  return out;
}

std::optional<int> Graph::regular_degree() const {
  if (n_ == 0) return std::nullopt;
  int k = degree(0);
  for (int i = 1; i < n_; ++i)
    if (degree(i) != k) return std::nullopt;
  return k;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  Bitset seen(static_cast<std::size_t>(n_));
  std::vector<int> stack{0};
  seen.set(0);
  std::size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    rows_[v].for_each([&](std::size_t w) {
      if (!seen.test(w)) {
        seen.set(w);
        ++reached;
        stack.push_back(static_cast<int>(w));
      }
    });
  }
  return reached == static_cast<std::size_t>(n_);
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) throw Error("permutation size mismatch");
  std::vector<int> inv(perm.size(), -1);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    int p = perm[i];
    if (p < 0 || p >= n_ || inv[p] != -1) throw Error("not a permutation");
    inv[p] = static_cast<int>(i);
  }
  std::vector<Bitset> rows(perm.size(), Bitset(perm.size()));
  for (int i = 0; i < n_; ++i)
    rows_[perm[i]].for_each([&](std::size_t w) { rows[i].set(static_cast<std::size_t>(inv[w])); });
  Graph g;
  g.n_ = n_;
  g.m_ = m_;
  g.rows_ = std::move(rows);
  g.label_ = label_;
  return g;
}

// Constructors ---------------------------------------------------------------

namespace {

Graph from_predicate(int n, auto&& adjacent, std::string label) {
  std::vector<Bitset> rows(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (adjacent(i, j)) {
        rows[i].set(static_cast<std::size_t>(j));
        rows[j].set(static_cast<std::size_t>(i));
      }
  return Graph::from_rows(std::move(rows), std::move(label));
}

std::vector<std::pair<int, int>> two_subsets(int m) {
  std::vector<std::pair<int, int>> s;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) s.emplace_back(a, b);
  return s;
}

}  // namespace

Graph complete_graph(int m) {
  if (m < 1) throw Error("complete graph needs m >= 1");
  return from_predicate(m, [](int, int) { return true; }, "K" + std::to_string(m));
}

Graph empty_graph(int m) {
  if (m < 0) throw Error("negative vertex count");
  return from_predicate(m, [](int, int) { return false; }, std::to_string(m) + "K1");
}

Graph cycle_graph(int m) {
  if (m < 3) throw Error("cycle needs m >= 3");
  return from_predicate(
      m, [m](int i, int j) { return j - i == 1 || (i == 0 && j == m - 1); },
      "C" + std::to_string(m));
}

Graph path_graph(int m) {
  if (m < 1) throw Error("path needs m >= 1");
  return from_predicate(m, [](int i, int j) { return j - i == 1; }, "P" + std::to_string(m));
}

Graph complete_bipartite(int p, int q) {
  if (p < 1 || q < 1) throw Error("complete bipartite needs p, q >= 1");
  return from_predicate(
      p + q, [p](int i, int j) { return (i < p) != (j < p); },
      "K" + std::to_string(p) + "," + std::to_string(q));
}

Graph cocktail_party(int m) {
  if (m < 2) throw Error("cocktail party graph needs m >= 2");
  return from_predicate(
      2 * m, [](int i, int j) { return i / 2 != j / 2; }, "K" + std::to_string(m) + "x2");
}

Graph triangular_graph(int m) {
  if (m < 4) throw Error("triangular graph needs m >= 4");
  auto pairs = two_subsets(m);
  return from_predicate(
      static_cast<int>(pairs.size()),
      [&](int i, int j) {
        auto [a, b] = pairs[i];
        auto [c, d] = pairs[j];
        return a == c || a == d || b == c || b == d;
      },
      "T(" + std::to_string(m) + ")");
}

Graph petersen_graph() {
  auto pairs = two_subsets(5);
  return from_predicate(
      10,
      [&](int i, int j) {
        auto [a, b] = pairs[i];
        auto [c, d] = pairs[j];
        return a != c && a != d && b != c && b != d;
      },
      "Petersen");
}

Graph shrikhande_graph() {
  return from_predicate(
      16,
      [](int i, int j) {
        int da = ((j / 4 - i / 4) % 4 + 4) % 4;
        int db = ((j % 4 - i % 4) % 4 + 4) % 4;
        // ±(1,0), ±(0,1), ±(1,1)
        return (db == 0 && (da == 1 || da == 3)) || (da == 0 && (db == 1 || db == 3)) ||
               (da == 1 && db == 1) || (da == 3 && db == 3);
      },
      "Shrikhande");
}

Graph grid_graph(int p, int q) {
  if (p < 2 || q < 2) throw Error("grid needs p, q >= 2");
  return from_predicate(
      p * q,
      [q](int i, int j) { return (i / q == j / q) != (i % q == j % q); },
      std::to_string(p) + "x" + std::to_string(q) + "-grid");
}

Graph named_family(const std::string& name, std::span<const int> params) {
  auto need = [&](std::size_t k) {
    if (params.size() < k)
      throw Error("family '" + name + "' needs " + std::to_string(k) + " parameter(s)");
  };
  if (name == "complete") return need(1), complete_graph(params[0]);
  if (name == "empty") return need(1), empty_graph(params[0]);
  if (name == "cycle") return need(1), cycle_graph(params[0]);
  if (name == "path") return need(1), path_graph(params[0]);
  if (name == "complete_bipartite") return need(2), complete_bipartite(params[0], params[1]);
  if (name == "cocktail_party") return need(1), cocktail_party(params[0]);
  if (name == "triangular") return need(1), triangular_graph(params[0]);
  if (name == "petersen") return petersen_graph();
  if (name == "shrikhande") return shrikhande_graph();
  if (name == "grid") return need(2), grid_graph(params[0], params[1]);
  throw Error("unknown graph family '" + name + "'");
}

// Combinators ----------------------------------------------------------------

Graph s_clique_extension(const Graph& g, int s) {
  if (s < 1) throw Error("clique extension needs s >= 1");
  const int n = g.order();
  std::string label = g.label().empty() ? "" : std::to_string(s) + "-ext(" + g.label() + ")";
  return from_predicate(
      n * s,
      [&](int i, int j) {
        int a = i / s, b = j / s;
        return a == b || g.adjacent(a, b);
      },
      std::move(label));
}

Graph cone(const Graph& g) {
  const int n = g.order();
  std::string label = g.label().empty() ? "" : "C(" + g.label() + ")";
  return from_predicate(
      n + 1, [&](int i, int j) { return j == n || g.adjacent(i, j); }, std::move(label));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order();
  std::string label;
  if (!g.label().empty() && !h.label().empty()) label = g.label() + "+" + h.label();
  return from_predicate(
      n + h.order(),
      [&](int i, int j) {
        if (j < n) return g.adjacent(i, j);
        if (i >= n) return h.adjacent(i - n, j - n);
        return false;
      },
      std::move(label));
}

Graph complement(const Graph& g) {
  std::string label = g.label().empty() ? "" : "co-" + g.label();
  return from_predicate(
      g.order(), [&](int i, int j) { return !g.adjacent(i, j); }, std::move(label));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int m = h.order();
  std::string label;
  if (!g.label().empty() && !h.label().empty()) label = g.label() + "[]" + h.label();
  return from_predicate(
      g.order() * m,
      [&](int i, int j) {
        int a = i / m, b = i % m, c = j / m, d = j % m;
        return (a == c && h.adjacent(b, d)) || (b == d && g.adjacent(a, c));
      },
      std::move(label));
}

Graph line_graph(const Graph& g) {
  auto e = g.edges();
  std::string label = g.label().empty() ? "" : "L(" + g.label() + ")";
  return from_predicate(
      static_cast<int>(e.size()),
      [&](int i, int j) {
        auto [a, b] = e[i];
        auto [c, d] = e[j];
        return a == c || a == d || b == c || b == d;
      },
      std::move(label));
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  s.check_within(g.order());
  const auto& v = s.members();
  return from_predicate(
      static_cast<int>(v.size()), [&](int i, int j) { return g.adjacent(v[i], v[j]); }, "");
}

Graph local_graph(const Graph& g, int x) {
  if (x < 0 || x >= g.order()) throw Error("vertex out of range");
  return induced_subgraph(g, g.neighbors(x));
}

VertexSet common_neighbors(const Graph& g, int x, int y) {
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order()) throw Error("vertex out of range");
  if (x == y) throw Error("common neighbours need distinct vertices");
  return VertexSet::from_bits(g.row(x) & g.row(y));
}

int a_xy(const Graph& g, int x, int y) {
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order()) throw Error("vertex out of range");
  if (x == y) throw Error("common neighbours need distinct vertices");
  return static_cast<int>(g.row(x).count_and(g.row(y)));
}

}  // namespace coedge
