#include "coedge/subgraph.hpp"

#include <algorithm>
#include <functional>

namespace coedge {

namespace {

Graph induced_in_order(const Graph& g, const std::vector<int>& order) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (g.adjacent(order[i], order[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Graph::from_edges(static_cast<int>(order.size()), edges);
}

Bitset all_bits(int n) {
  Bitset b(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) b.set(static_cast<std::size_t>(i));
  return b;
}

std::vector<Bitset> complement_rows(const Graph& g) {
  const int n = g.order();
  const Bitset all = all_bits(n);
  std::vector<Bitset> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    Bitset r = all;
    r.subtract(g.row(v));
    r.reset(static_cast<std::size_t>(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<Bitset> rows_of(const Graph& g) {
  std::vector<Bitset> rows;
  for (int v = 0; v < g.order(); ++v) rows.push_back(g.row(v));
  return rows;
}

class CliqueSearch {
public:
  explicit CliqueSearch(std::vector<Bitset> rows) : rows_(std::move(rows)) {}

  CliqueResult run(const Bitset& within) {
    best_.clear();
    current_.clear();
    if (within.any()) expand(within);
    return {static_cast<int>(best_.size()), VertexSet(best_)};
  }

private:
  void expand(Bitset candidates) {
    std::vector<int> order;
    std::vector<int> colour;
    Bitset uncoloured = candidates;
    int c = 0;
    while (uncoloured.any()) {
      ++c;
      Bitset q = uncoloured;
      while (q.any()) {
        const std::size_t v = q.first();
        q.reset(v);
        q.subtract(rows_[v]);
        uncoloured.reset(v);
        order.push_back(static_cast<int>(v));
        colour.push_back(c);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + static_cast<std::size_t>(colour[i]) <= best_.size()) return;
      const int v = order[i];
      current_.push_back(v);
      const Bitset next = candidates & rows_[static_cast<std::size_t>(v)];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
      candidates.reset(static_cast<std::size_t>(v));
    }
  }

  std::vector<Bitset> rows_;
  std::vector<int> best_;
  std::vector<int> current_;
};

class InducedSearch {
public:
  InducedSearch(const Graph& host, const Graph& pattern) : host_(host), pat_(pattern) {
    const int p = pat_.order();
    twin_prev_.assign(static_cast<std::size_t>(p), -1);
    twin_rest_.assign(static_cast<std::size_t>(p), 1);
    for (int w = 0; w < p; ++w)
      for (int u = w - 1; u >= 0; --u)
        if (twins(u, w)) {
          twin_prev_[w] = u;
          break;
        }
    for (int w = p - 1; w >= 0; --w)
      for (int x = w + 1; x < p; ++x)
        if (twin_prev_[x] == w) {
          twin_rest_[w] = twin_rest_[x] + 1;
          break;
        }
  }

  std::optional<Embedding> run() {
    const int p = pat_.order(), n = host_.order();
    if (p > n) return std::nullopt;
    if (p == 0) return Embedding{};
    std::vector<Bitset> dom(static_cast<std::size_t>(p), Bitset(static_cast<std::size_t>(n)));
    for (int w = 0; w < p; ++w) {
      for (int h = 0; h < n; ++h)
        if (host_.degree(h) >= pat_.degree(w)) dom[w].set(static_cast<std::size_t>(h));
      if (dom[w].none()) return std::nullopt;
    }
    map_.assign(static_cast<std::size_t>(p), -1);
    if (search(0, dom)) return Embedding{map_};
    return std::nullopt;
  }

private:
  bool twins(int u, int w) const {
    Bitset ru = pat_.row(u), rw = pat_.row(w);
    ru.reset(static_cast<std::size_t>(w));
    rw.reset(static_cast<std::size_t>(u));
    return ru == rw;
  }

  bool search(int i, const std::vector<Bitset>& dom) {
    const int p = pat_.order();
    if (i == p) return true;
    const std::size_t lower = twin_prev_[i] >= 0 ? static_cast<std::size_t>(map_[twin_prev_[i]] + 1) : 0;
    int available = 0;
    for (std::size_t h = dom[i].next(lower); h < dom[i].size(); h = dom[i].next(h + 1)) ++available;
    if (available < twin_rest_[i]) return false;

    std::vector<Bitset> next(dom.size());
    for (std::size_t h = dom[i].next(lower); h < dom[i].size(); h = dom[i].next(h + 1)) {
      bool viable = true;
      for (int j = i + 1; j < p && viable; ++j) {
        next[j] = dom[j];
        if (pat_.adjacent(i, j)) next[j] &= host_.row(static_cast<int>(h));
        else next[j].subtract(host_.row(static_cast<int>(h)));
        next[j].reset(h);
        viable = next[j].any();
      }
      if (!viable) continue;
      map_[i] = static_cast<int>(h);
      if (search(i + 1, next)) return true;
    }
    map_[i] = -1;
    return false;
  }

  const Graph& host_;
  const Graph& pat_;
  std::vector<int> twin_prev_;
  std::vector<int> twin_rest_;
  std::vector<int> map_;
};

using CliqueVisitor = std::function<bool(const std::vector<int>&)>;

/// Calls `f` on every s-clique inside `within`, ascending lexicographic
/// order; stops when `f` returns true. Partial cliques for which `prune`
/// returns true are not extended.
bool for_each_clique(const Graph& g, const Bitset& within, int s, std::vector<int>& current,
                     const CliqueVisitor& f, const CliqueVisitor& prune = nullptr) {
  if (static_cast<int>(current.size()) == s) return f(current);
  if (static_cast<int>(within.count()) + static_cast<int>(current.size()) < s) return false;
  for (std::size_t v = within.first(); v < within.size(); v = within.next(v + 1)) {
    Bitset rest = within & g.row(static_cast<int>(v));
    for (std::size_t u = rest.first(); u < rest.size() && u <= v; u = rest.next(u + 1)) rest.reset(u);
    current.push_back(static_cast<int>(v));
    if (prune && prune(current)) {
      current.pop_back();
      continue;
    }
    const bool stop = for_each_clique(g, rest, s, current, f, prune);
    current.pop_back();
    if (stop) return true;
  }
  return false;
}

Graph apex_first(const Graph& coned) {
  const int n = coned.order();
  std::vector<int> perm{n - 1};
  for (int i = 0; i + 1 < n; ++i) perm.push_back(i);
  return coned.permuted(perm);
}

Graph cliques_union(std::initializer_list<int> sizes, int isolated) {
  Graph g = empty_graph(0);
  for (int s : sizes) g = disjoint_union(g, complete_graph(s));
  if (isolated > 0) g = disjoint_union(g, empty_graph(isolated));
  return g;
}

std::optional<ForbiddenHit> bipartite_star_hit(const Graph& g, int v, const std::vector<Bitset>& comp) {
  CliqueSearch indep(comp);
  const Bitset nv = g.row(v);
  const CliqueResult alpha = indep.run(nv);
  if (alpha.size < 9) return std::nullopt;
  std::vector<int> order{v};
  if (alpha.size >= 10) {
    for (int i = 0; i < 10; ++i) order.push_back(alpha.witness[static_cast<std::size_t>(i)]);
  } else {
    for (std::size_t u = nv.first(); u < nv.size(); u = nv.next(u + 1)) {
      Bitset outside = g.row(static_cast<int>(u));
      outside.subtract(nv);
      outside.reset(static_cast<std::size_t>(v));
      if (outside.none()) continue;
      Bitset rest = nv;
      rest.subtract(g.row(static_cast<int>(u)));
      rest.reset(u);
      const CliqueResult others = indep.run(rest);
      if (others.size < 8) continue;
      std::vector<int> s{static_cast<int>(u)};
      for (int i = 0; i < 8; ++i) s.push_back(others.witness[static_cast<std::size_t>(i)]);
      std::sort(s.begin(), s.end());
      order.insert(order.end(), s.begin(), s.end());
      order.push_back(static_cast<int>(outside.first()));
      break;
    }
    if (order.size() == 1) return std::nullopt;
  }
  ForbiddenHit hit;
  hit.type = 1;
  hit.name = order.size() == 11 && g.adjacent(v, order.back()) ? "K_{1,10}" : "star K_{1,9} plus one vertex";
  hit.pattern = induced_in_order(g, order);
  hit.embedding.map = order;
  return hit;
}

std::optional<ForbiddenHit> two_clique_cone_hit(const Graph& g, int apex, const std::vector<Bitset>& comp) {
  CliqueSearch indep(comp);
  CliqueSearch clique(rows_of(g));
  const Bitset local = g.row(apex);
  const int alpha = indep.run(local).size;
  const int omega = clique.run(local).size;
  const int size = static_cast<int>(local.count());
  for (int s = 1; s <= omega; ++s) {
    const int t_min = forbidden_cone_min_t(s);
    if (2 * s + t_min > size) break;
    if (alpha < t_min + 2) continue;
    std::optional<ForbiddenHit> found;
    auto outside = [&](Bitset base, const std::vector<int>& clique) {
      for (int v : clique) {
        base.subtract(g.row(v));
        base.reset(static_cast<std::size_t>(v));
      }
      return base;
    };
    std::vector<int> a_current;
    auto prune_a = [&](const std::vector<int>& a) { return indep.run(outside(local, a)).size < t_min + 1; };
    for_each_clique(g, local, s, a_current, [&](const std::vector<int>& a) {
      const Bitset p = outside(local, a);
      Bitset later = p;
      for (std::size_t u = p.first(); u < p.size() && u < static_cast<std::size_t>(a[0]); u = p.next(u + 1)) later.reset(u);
      std::vector<int> b_current;
      auto prune_b = [&](const std::vector<int>& b) { return indep.run(outside(p, b)).size < t_min; };
      return for_each_clique(g, later, s, b_current, [&](const std::vector<int>& b) {
        const CliqueResult iso = indep.run(outside(p, b));
        if (iso.size < t_min) return false;
        ForbiddenHit hit;
        hit.type = 2;
        hit.s = s;
        hit.t = iso.size;
        hit.name = "C(2K_" + std::to_string(s) + " + " + std::to_string(iso.size) + "K_1)";
        std::vector<int> order{apex};
        order.insert(order.end(), a.begin(), a.end());
        order.insert(order.end(), b.begin(), b.end());
        order.insert(order.end(), iso.witness.begin(), iso.witness.end());
        hit.pattern = induced_in_order(g, order);
        hit.embedding.map = std::move(order);
        found = std::move(hit);
        return true;
      }, prune_b);
    }, prune_a);
    if (found) return found;
  }
  return std::nullopt;
}


/// A cone over a disjoint union of parts, or a clique when `clique` > 0.
struct ConeShape {
  int clique = 0;
  std::vector<ConeShape> parts;

  int order() const {
    if (clique > 0) return clique;
    int n = 1;
    for (const auto& p : parts) n += p.order();
    return n;
  }
};

ConeShape clique_shape(int s) { return ConeShape{s, {}}; }

ConeShape cone_shape(std::vector<ConeShape> parts) { return ConeShape{0, std::move(parts)}; }

/// Same order as forbidden_named_cones().
const std::vector<ConeShape>& named_cone_shapes() {
  static const std::vector<ConeShape> shapes = [] {
    std::vector<ConeShape> out;
    out.push_back(cone_shape({clique_shape(15), clique_shape(15), clique_shape(3), clique_shape(1), clique_shape(1)}));
    out.push_back(cone_shape({clique_shape(21), clique_shape(21), clique_shape(11), clique_shape(1)}));
    out.push_back(cone_shape({cone_shape({clique_shape(13), clique_shape(13)}), clique_shape(13)}));
    out.push_back(cone_shape({cone_shape({clique_shape(5), clique_shape(5), clique_shape(5)})}));
    return out;
  }();
  return shapes;
}

/// Finds the vertex set of an induced copy of a cone shape. Parts of a union
/// are placed one at a time inside the vertices outside the closed
/// neighbourhood of earlier parts; the independence number of what remains
/// bounds the number of parts still to place.
class ConeShapeMatch {
public:
  explicit ConeShapeMatch(const Graph& g) : g_(g), indep_(complement_rows(g)) {}

  std::optional<std::vector<int>> run(const ConeShape& shape) {
    used_.clear();
    if (shape.order() > g_.order()) return std::nullopt;
    if (place_union({&shape}, 0, all_bits(g_.order()), [] { return true; })) return used_;
    return std::nullopt;
  }

private:
  using Next = std::function<bool(const Bitset&)>;

  Bitset outside_of(Bitset cand, std::size_t from) const {
    for (std::size_t i = from; i < used_.size(); ++i) {
      cand.subtract(g_.row(used_[i]));
      cand.reset(static_cast<std::size_t>(used_[i]));
    }
    return cand;
  }

  bool place_union(const std::vector<const ConeShape*>& parts, std::size_t idx, const Bitset& cand,
                   const std::function<bool()>& done) {
    if (idx == parts.size()) return done();
    const int need = static_cast<int>(parts.size() - idx);
    if (indep_.run(cand).size < need) return false;
    return place_one(*parts[idx], need - 1, cand,
                     [&](const Bitset& rest) { return place_union(parts, idx + 1, rest, done); });
  }

  bool place_one(const ConeShape& shape, int later, const Bitset& cand, const Next& next) {
    if (shape.clique > 0) return grow_clique(shape.clique, later, cand, cand, next);
    std::vector<const ConeShape*> children;
    for (const auto& p : shape.parts) children.push_back(&p);
    const std::size_t start = used_.size();
    const auto inner = static_cast<std::size_t>(shape.order() - 1);
    for (std::size_t w = cand.first(); w < cand.size(); w = cand.next(w + 1)) {
      const Bitset inside = cand & g_.row(static_cast<int>(w));
      if (inside.count() < inner) continue;
      used_.push_back(static_cast<int>(w));
      if (place_union(children, 0, inside, [&] { return next(outside_of(cand, start)); })) return true;
      used_.resize(start);
    }
    return false;
  }

  bool grow_clique(int k, int later, const Bitset& ext, const Bitset& rest, const Next& next) {
    if (k == 0) return next(rest);
    if (static_cast<int>(ext.count()) < k) return false;
    for (std::size_t v = ext.first(); v < ext.size(); v = ext.next(v + 1)) {
      Bitset ext2 = ext & g_.row(static_cast<int>(v));
      for (std::size_t u = ext2.first(); u < ext2.size() && u <= v; u = ext2.next(u + 1)) ext2.reset(u);
      Bitset rest2 = rest;
      rest2.subtract(g_.row(static_cast<int>(v)));
      rest2.reset(v);
      if (later > 0 && indep_.run(rest2).size < later) continue;
      used_.push_back(static_cast<int>(v));
      if (grow_clique(k - 1, later, ext2, rest2, next)) return true;
      used_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  CliqueSearch indep_;
  std::vector<int> used_;
};

/// Induced embedding of the i-th named cone, if any.
std::optional<Embedding> named_cone_embedding(const Graph& g, std::size_t i) {
  const auto found = ConeShapeMatch(g).run(named_cone_shapes()[i]);
  if (!found) return std::nullopt;
  std::vector<int> verts = *found;
  std::sort(verts.begin(), verts.end());
  const auto local = contains_induced(induced_in_order(g, verts), forbidden_named_cones()[i].graph);
  if (!local) return std::nullopt;
  std::vector<int> map;
  for (int x : local->map) map.push_back(verts[static_cast<std::size_t>(x)]);
  return Embedding{map};
}

}  // namespace

bool is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
  const int p = pattern.order();
  if (static_cast<int>(e.map.size()) != p) return false;
  std::vector<int> sorted = e.map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int h : e.map)
    if (h < 0 || h >= host.order()) return false;
  for (int u = 0; u < p; ++u)
    for (int w = u + 1; w < p; ++w)
      if (pattern.adjacent(u, w) != host.adjacent(e.map[u], e.map[w])) return false;
  return true;
}

std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern) {
  return InducedSearch(host, pattern).run();
}

std::optional<std::array<int, 4>> has_induced_quadrangle(const Graph& g) {
  const int n = g.order();
  for (int x = 0; x < n; ++x)
    for (int z = x + 1; z < n; ++z) {
      if (g.adjacent(x, z)) continue;
      const Bitset common = g.row(x) & g.row(z);
      if (common.count() < 2) continue;
      for (std::size_t y = common.first(); y < common.size(); y = common.next(y + 1)) {
        Bitset others = common;
        others.subtract(g.row(static_cast<int>(y)));
        others.reset(y);
        if (others.any()) return std::array<int, 4>{x, static_cast<int>(y), z, static_cast<int>(others.first())};
      }
    }
  return std::nullopt;
}

CliqueResult max_clique(const Graph& g, const Bitset& within) {
  const auto rows = rows_of(g);
  return CliqueSearch(rows).run(within);
}

CliqueResult max_clique(const Graph& g) { return max_clique(g, all_bits(g.order())); }

CliqueResult max_independent_set(const Graph& g, const Bitset& within) {
  const auto rows = complement_rows(g);
  return CliqueSearch(rows).run(within);
}

CliqueResult max_independent_set(const Graph& g) { return max_independent_set(g, all_bits(g.order())); }

int forbidden_cone_min_t(int s) {
  if (s < 1) throw Error("cone clique size must be positive");
  return 3 + 12 / (s + 2) + 1;
}

const std::vector<NamedCone>& forbidden_named_cones() {
  static const std::vector<NamedCone> cones = [] {
    std::vector<NamedCone> out;
    out.push_back({"C(2K15 + K3 + 2K1)", apex_first(cone(cliques_union({15, 15, 3}, 2)))});
    out.push_back({"C(2K21 + K11 + K1)", apex_first(cone(cliques_union({21, 21, 11}, 1)))});
    const Graph inner = apex_first(cone(cliques_union({13, 13}, 0)));
    out.push_back({"C(C(2K13) + K13)", apex_first(cone(disjoint_union(inner, complete_graph(13))))});
    out.push_back({"C(C(3K5))", apex_first(cone(apex_first(cone(cliques_union({5, 5, 5}, 0)))))});
    return out;
  }();
  return cones;
}

std::vector<ForbiddenHit> forbidden_minus3_scan(const Graph& g) {
  std::vector<ForbiddenHit> hits;
  const int n = g.order();
  const auto comp = complement_rows(g);
  for (int v = 0; v < n; ++v)
    if (auto hit = bipartite_star_hit(g, v, comp)) hits.push_back(std::move(*hit));
  for (int v = 0; v < n; ++v)
    if (auto hit = two_clique_cone_hit(g, v, comp)) hits.push_back(std::move(*hit));
  const auto& cones = forbidden_named_cones();
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const auto& named = cones[i];
    if (named.graph.order() > n) continue;
    if (auto e = named_cone_embedding(g, i)) {
      ForbiddenHit hit;
      hit.type = 3;
      hit.name = named.name;
      hit.pattern = named.graph;
      hit.embedding = std::move(*e);
      hits.push_back(std::move(hit));
    }
  }
  return hits;
}

}  // namespace coedge
