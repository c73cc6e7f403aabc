#include "coedge/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>
#include <string>

#include "coedge/canonical.hpp"
#include "coedge/regularity.hpp"

namespace coedge {

namespace {

/// Vertex-by-vertex canonical augmentation. A graph on m vertices stays in
/// the class max degree <= k, min degree >= k - (n - m); a child is kept
/// when its new vertex lies in the orbit of the canonical deletion vertex.
class Augmenter {
public:
  Augmenter(int n, int k) : n_(n), k_(k) {}

  std::vector<Graph> run() {
    std::vector<Bitset> rows(static_cast<std::size_t>(n_), Bitset(static_cast<std::size_t>(n_)));
    extend(rows, 1);
    std::sort(found_.begin(), found_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    for (auto& [cf, g] : found_) out.push_back(std::move(g));
    return out;
  }

private:
  /// rows hold a graph on vertices 0..m-1 (padded to n bits).
  void extend(const std::vector<Bitset>& rows, int m) {
    if (m == n_) {
      const Graph g = to_graph(rows, m);
      auto cf = canonical_form(g);
      found_.emplace_back(cf, cf.graph(g));
      return;
    }
    std::vector<int> degree(static_cast<std::size_t>(m));
    for (int u = 0; u < m; ++u) degree[u] = static_cast<int>(rows[u].count());
    const int floor_next = k_ - (n_ - m - 1);  // min degree required at m+1 vertices
    std::vector<int> forced, optional;
    for (int u = 0; u < m; ++u) {
      if (degree[u] + 1 < floor_next) return;  // cannot be repaired by one vertex
      if (degree[u] < floor_next) forced.push_back(u);
      else if (degree[u] < k_) optional.push_back(u);
    }
    const int lo = std::max({floor_next, 0, static_cast<int>(forced.size())});
    const int hi = std::min(k_, static_cast<int>(forced.size() + optional.size()));
    if (lo > hi) return;

    std::set<CanonicalForm> seen;
    const std::size_t opt = optional.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << opt); ++mask) {
      const int d = static_cast<int>(forced.size()) + std::popcount(mask);
      if (d < lo || d > hi) continue;
      // The new vertex must have minimum degree in the child.
      bool min_ok = true;
      for (int u = 0; u < m && min_ok; ++u) {
        const bool in_s = std::find(forced.begin(), forced.end(), u) != forced.end() ||
                          [&] {
                            for (std::size_t i = 0; i < opt; ++i)
                              if (optional[i] == u) return ((mask >> i) & 1) != 0;
                            return false;
                          }();
        if (degree[u] + (in_s ? 1 : 0) < d) min_ok = false;
      }
      if (!min_ok) continue;

      std::vector<Bitset> child = rows;
      auto link = [&](int u) {
        child[u].set(static_cast<std::size_t>(m));
        child[m].set(static_cast<std::size_t>(u));
      };
      for (int u : forced) link(u);
      for (std::size_t i = 0; i < opt; ++i)
        if ((mask >> i) & 1) link(optional[i]);

      const Graph g = to_graph(child, m + 1);
      const CanonicalForm cf = canonical_form(g);
      if (!seen.insert(cf).second) continue;
      if (!accepted(g, cf, m)) continue;
      extend(child, m + 1);
    }
  }

  static bool accepted(const Graph& g, const CanonicalForm& cf, int v) {
    const int size = g.order();
    int min_deg = size;
    for (int u = 0; u < size; ++u) min_deg = std::min(min_deg, g.degree(u));
    int w = -1;
    for (int i = size - 1; i >= 0; --i)
      if (g.degree(cf.relabelling[i]) == min_deg) {
        w = cf.relabelling[i];
        break;
      }
    if (w == v) return true;
    if (g.degree(w) != g.degree(v)) return false;
    return canonical_form(g, rooted(size, v)) == canonical_form(g, rooted(size, w));
  }

  static std::vector<std::vector<int>> rooted(int size, int v) {
    std::vector<std::vector<int>> cells{{v}, {}};
    for (int u = 0; u < size; ++u)
      if (u != v) cells[1].push_back(u);
    if (cells[1].empty()) cells.pop_back();
    return cells;
  }

  static Graph to_graph(const std::vector<Bitset>& rows, int m) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < m; ++u)
      for (std::size_t v = rows[u].next(static_cast<std::size_t>(u) + 1); v < rows[u].size();
           v = rows[u].next(v + 1))
        edges.emplace_back(u, static_cast<int>(v));
    return Graph::from_edges(m, edges);
  }

  int n_, k_;
  std::vector<std::pair<CanonicalForm, Graph>> found_;
};

void check_arguments(int n, int k) {
  if (n < 1) throw Error("enumeration needs n >= 1");
  if (k < 0 || k >= n) throw Error("enumeration needs 0 <= k < n");
  if ((n * k) % 2 != 0) throw Error("no k-regular graph exists when n*k is odd");
  if (n > search_size_cap())
    throw Error("n = " + std::to_string(n) + " exceeds the search cap " + std::to_string(search_size_cap()) +
                " (set COEDGE_MAX_SEARCH_N to raise it)");
}

}  // namespace

int search_size_cap() {
  if (const char* env = std::getenv("COEDGE_MAX_SEARCH_N")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 12;
}

std::vector<Graph> enumerate_regular(int n, int k) {
  check_arguments(n, k);
  auto out = Augmenter(n, k).run();
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = out[i].with_label("regular(" + std::to_string(n) + "," + std::to_string(k) + ")#" + std::to_string(i));
  return out;
}

std::vector<Graph> search_co_edge_regular(int n, int k, int c) {
  std::vector<Graph> out;
  for (auto& g : enumerate_regular(n, k)) {
    const auto params = co_edge_regular_params(g);
    if (params && params->c == c) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> enumerate_regular_brute_force(int n, int k) {
  check_arguments(n, k);
  if (n > 7) throw Error("brute-force enumeration is limited to 7 vertices");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::set<CanonicalForm> seen;
  std::vector<std::pair<CanonicalForm, Graph>> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    if (std::popcount(mask) * 2 != n * k) continue;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) {
        ++deg[pairs[i].first];
        ++deg[pairs[i].second];
        edges.push_back(pairs[i]);
      }
    if (std::any_of(deg.begin(), deg.end(), [&](int d) { return d != k; })) continue;
    const Graph g = Graph::from_edges(n, edges);
    auto cf = canonical_form(g);
    if (seen.insert(cf).second) found.emplace_back(cf, cf.graph(g));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (auto& [cf, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace coedge
