#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "coedge/graph.hpp"

namespace coedge {

/// Injective map pattern vertex -> host vertex.
struct Embedding {
  std::vector<int> map;
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Pattern adjacency agrees with host adjacency on every image pair.
bool is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& e);

/// First induced embedding in lexicographic order of the image list, or none.
std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern);

/// An induced C4 as a cycle (x, y, z, w), or none.
std::optional<std::array<int, 4>> has_induced_quadrangle(const Graph& g);

struct CliqueResult {
  int size = 0;
  VertexSet witness;
};

/// Exact clique number by branch and bound with a greedy colouring bound.
CliqueResult max_clique(const Graph& g);
/// Largest clique inside `within`.
CliqueResult max_clique(const Graph& g, const Bitset& within);
CliqueResult max_independent_set(const Graph& g);
CliqueResult max_independent_set(const Graph& g, const Bitset& within);

/// Least t with (s+2)(t-3) > 12.
int forbidden_cone_min_t(int s);

/// C(C(2K13) ∪ K13) and friends, apex first.
struct NamedCone {
  std::string name;
  Graph graph;
};
const std::vector<NamedCone>& forbidden_named_cones();

struct ForbiddenHit {
  /// 1: connected induced bipartite graph of order 11 holding an induced
  /// K_{1,9}; 2: C(2K_s ∪ tK_1) with (s+2)(t-3) > 12; 3: a named cone.
  int type = 0;
  int s = 0;
  int t = 0;
  std::string name;
  Graph pattern;
  Embedding embedding;
};

/// Induced subgraphs whose presence forces θ_min(g) < -3. At most one hit
/// per (apex, type); hits are ordered by type, then apex.
std::vector<ForbiddenHit> forbidden_minus3_scan(const Graph& g);

}  // namespace coedge
