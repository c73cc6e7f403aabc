#pragma once

#include <algorithm>
#include <vector>

#include "coedge/graph.hpp"

namespace coedge::detail {

/// Splits ordered cells until every vertex of a cell has the same number of
/// neighbours in every cell. Pieces of a split cell take its place, ordered
/// by ascending neighbour-count signature, so the result depends only on the
/// graph structure and the input cell order. Returns true if anything split.
inline bool refine_equitable(const Graph& g, std::vector<std::vector<int>>& cells) {
  const int n = g.order();
  bool changed_any = false;
  std::vector<Bitset> masks;
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  while (true) {
    masks.assign(cells.size(), Bitset(static_cast<std::size_t>(n)));
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) masks[c].set(static_cast<std::size_t>(v));

    bool changed = false;
    std::vector<std::vector<int>> next;
    next.reserve(cells.size());
    for (auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      for (int v : cell) {
        auto& s = sig[static_cast<std::size_t>(v)];
        s.resize(masks.size());
        for (std::size_t c = 0; c < masks.size(); ++c)
          s[c] = static_cast<int>(g.row(v).count_and(masks[c]));
      }
      std::vector<int> sorted = cell;
      std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
        const auto& sa = sig[static_cast<std::size_t>(a)];
        const auto& sb = sig[static_cast<std::size_t>(b)];
        return sa != sb ? sa < sb : a < b;
      });
      std::size_t start = 0;
      for (std::size_t i = 1; i <= sorted.size(); ++i) {
        if (i == sorted.size() ||
            sig[static_cast<std::size_t>(sorted[i])] != sig[static_cast<std::size_t>(sorted[start])]) {
          next.emplace_back(sorted.begin() + static_cast<long>(start), sorted.begin() + static_cast<long>(i));
          start = i;
        }
      }
      if (next.back().size() != cell.size()) changed = true;
    }
    cells = std::move(next);
    if (!changed) return changed_any;
    changed_any = true;
  }
}

}  // namespace coedge::detail
