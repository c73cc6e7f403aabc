#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "coedge/graph.hpp"

namespace coedge {

/// Canonical labelling. `canon` packs the rows of the relabelled adjacency
/// matrix; vertex i of the canonical graph is `relabelling[i]` of the input.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> canon;
  std::vector<int> relabelling;

  Graph graph(const Graph& original) const { return original.permuted(relabelling); }

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.n == b.n && a.canon == b.canon;
  }
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.canon <=> b.canon;
  }
};

/// Individualization-refinement search for the least adjacency
/// serialization. An ordered initial partition, when given, is respected:
/// vertices only map to vertices of the same cell.
CanonicalForm canonical_form(const Graph& g, const std::vector<std::vector<int>>& initial = {});

bool is_isomorphic(const Graph& g, const Graph& h);

/// iso[v] is the image in h of vertex v of g.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

/// Brute force over all n! permutations; small graphs only (n <= 9).
bool is_isomorphic_brute_force(const Graph& g, const Graph& h);

}  // namespace coedge
