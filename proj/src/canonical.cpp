#include "coedge/canonical.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "refine.hpp"

namespace coedge {

namespace {

using Cells = std::vector<std::vector<int>>;

std::vector<std::uint64_t> serialize(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n) * words, 0);
  for (int i = 0; i < n; ++i) {
    const Bitset& row = g.row(perm[i]);
    for (int j = 0; j < n; ++j)
      if (row.test(static_cast<std::size_t>(perm[j])))
        out[static_cast<std::size_t>(i) * words + (static_cast<std::size_t>(j) >> 6)] |=
            std::uint64_t{1} << (63 - (j & 63));
  }
  return out;
}

class CanonSearch {
public:
  explicit CanonSearch(const Graph& g) : g_(g) {}

  CanonicalForm run(Cells cells) {
    search(std::move(cells), 0);
    return {g_.order(), best_words_, best_perm_};
  }

private:
  static constexpr int kNoJump = std::numeric_limits<int>::max();

  int search(Cells cells, int depth) {
    detail::refine_equitable(g_, cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size())) target = c;
    if (target == cells.size()) return leaf(cells);

    std::vector<int> members = cells[target];
    std::sort(members.begin(), members.end());
    std::vector<int> explored;
    for (int v : members) {
      if (equivalent_to_explored(v, explored)) continue;
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int u : cells[c])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      }
      sequence_.push_back(v);
      const int jump = search(std::move(child), depth + 1);
      sequence_.pop_back();
      explored.push_back(v);
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  /// Orbits of the generators fixing the current individualized sequence.
  bool equivalent_to_explored(int v, const std::vector<int>& explored) {
    if (explored.empty() || generators_.empty()) return false;
    std::vector<int> parent(static_cast<std::size_t>(g_.order()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : generators_) {
      bool fixes = true;
      for (int s : sequence_)
        if (gamma[s] != s) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int x = 0; x < g_.order(); ++x) parent[find(x)] = find(gamma[x]);
    }
    const int root = find(v);
    for (int u : explored)
      if (find(u) == root) return true;
    return false;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gamma(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) gamma[from[i]] = to[i];
    bool identity = true;
    for (std::size_t i = 0; i < gamma.size(); ++i) identity = identity && gamma[i] == static_cast<int>(i);
    if (!identity) generators_.push_back(std::move(gamma));
  }

  int leaf(const Cells& cells) {
    std::vector<int> perm;
    perm.reserve(cells.size());
    for (const auto& c : cells) perm.push_back(c[0]);
    auto words = serialize(g_, perm);
    if (first_perm_.empty()) {
      first_perm_ = best_perm_ = perm;
      first_words_ = best_words_ = std::move(words);
      first_sequence_ = best_sequence_ = sequence_;
      return kNoJump;
    }
    if (words == first_words_) {
      record_automorphism(first_perm_, perm);
      return common_prefix(sequence_, first_sequence_);
    }
    if (words == best_words_) {
      record_automorphism(best_perm_, perm);
      return common_prefix(sequence_, best_sequence_);
    }
    if (words < best_words_) {
      best_perm_ = std::move(perm);
      best_words_ = std::move(words);
      best_sequence_ = sequence_;
    }
    return kNoJump;
  }

  const Graph& g_;
  std::vector<int> sequence_;
  std::vector<int> first_perm_, best_perm_;
  std::vector<std::uint64_t> first_words_, best_words_;
  std::vector<int> first_sequence_, best_sequence_;
  std::vector<std::vector<int>> generators_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, const std::vector<std::vector<int>>& initial) {
  const int n = g.order();
  if (n == 0) return {};
  Cells cells;
  if (initial.empty()) {
    cells.emplace_back(static_cast<std::size_t>(n));
    std::iota(cells[0].begin(), cells[0].end(), 0);
  } else {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (const auto& c : initial) {
      if (c.empty()) throw Error("initial partition has an empty cell");
      for (int v : c) {
        if (v < 0 || v >= n || seen[v]) throw Error("initial partition is not a partition of the vertices");
        seen[v] = 1;
      }
      cells.push_back(c);
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw Error("initial partition misses a vertex");
  }
  return CanonSearch(g).run(std::move(cells));
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  auto dg = g.degrees(), dh = h.degrees();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_form(g) == canonical_form(h);
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  const auto cg = canonical_form(g), ch = canonical_form(h);
  if (cg != ch) return std::nullopt;
  std::vector<int> iso(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) iso[cg.relabelling[i]] = ch.relabelling[i];
  return iso;
}

bool is_isomorphic_brute_force(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (g.order() > 9) throw Error("brute-force isomorphism is limited to 9 vertices");
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (g.permuted(perm) == h) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace coedge
