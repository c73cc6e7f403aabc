#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coedge/bitset.hpp"

namespace coedge {

/// Thrown for invalid arguments: bad parameters, malformed partitions,
/// violated preconditions of an analysis routine.
class Error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Sorted, duplicate-free list of vertex indices.
class VertexSet {
public:
  VertexSet() = default;
  /// Sorts and removes duplicates.
  explicit VertexSet(std::vector<int> members);
  VertexSet(std::initializer_list<int> members)
      : VertexSet(std::vector<int>(members)) {}

  static VertexSet from_bits(const Bitset& bits);

  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const;
  int operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Throws Error unless every member lies in [0, n).
  void check_within(int n) const;
  Bitset to_bits(int n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
  std::vector<int> members_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is a symmetric bit matrix with zero diagonal. Every
/// constructor and combinator returns a fresh value; nothing mutates a
/// graph after construction.
class Graph {
public:
  Graph() = default;

  /// Builds from an explicit edge list. Throws on self-loops or out-of-range
  /// endpoints; repeated edges are merged.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges,
                          std::string label = {});
  /// Builds from row bitsets; the caller guarantees symmetry (checked).
  static Graph from_rows(std::vector<Bitset> rows, std::string label = {});

  int order() const { return n_; }
  std::size_t edge_count() const { return m_; }
  const std::string& label() const { return label_; }
  Graph with_label(std::string label) const;

  bool adjacent(int x, int y) const { return rows_[x].test(static_cast<std::size_t>(y)); }
  const Bitset& row(int x) const { return rows_[x]; }
  int degree(int x) const { return static_cast<int>(rows_[x].count()); }
  std::vector<int> degrees() const;
  VertexSet neighbors(int x) const { return VertexSet::from_bits(rows_[x]); }
  std::vector<std::pair<int, int>> edges() const;

  /// Common degree when every vertex has the same degree.
  std::optional<int> regular_degree() const;
  bool is_connected() const;
  bool is_complete() const { return m_ == static_cast<std::size_t>(n_) * (n_ - 1) / 2; }
  bool is_empty() const { return m_ == 0; }

  /// Relabels so that new vertex i is old vertex perm[i].
  Graph permuted(std::span<const int> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<Bitset> rows_;
  std::string label_;
};

// Constructors ---------------------------------------------------------------

Graph complete_graph(int m);
Graph empty_graph(int m);
Graph cycle_graph(int m);
Graph path_graph(int m);
Graph complete_bipartite(int p, int q);
/// K_{m x 2}: complement of a perfect matching on 2m vertices.
Graph cocktail_party(int m);
/// T(m): line graph of K_m, vertices are the 2-subsets in lexicographic order.
Graph triangular_graph(int m);
/// Kneser(5,2); vertices are the 2-subsets of {0..4} in lexicographic order.
Graph petersen_graph();
/// Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)};
/// vertex (a,b) has index 4a+b.
Graph shrikhande_graph();

/// K_p □ K_q, vertex (a,b) at index a*q+b; adjacent iff exactly one
/// coordinate agrees.
Graph grid_graph(int p, int q);

/// Dispatches on a family name: "complete", "empty", "cycle", "path",
/// "complete_bipartite", "cocktail_party", "triangular", "petersen",
/// "shrikhande", "grid". Unused parameters are ignored.
Graph named_family(const std::string& name, std::span<const int> params);

// Combinators ----------------------------------------------------------------

/// Each vertex i becomes the block i*s .. i*s+s-1; adjacency matrix is
/// J_s ⊗ (A + I) - I in block order.
Graph s_clique_extension(const Graph& g, int s);
/// Adds vertex n adjacent to every existing vertex.
Graph cone(const Graph& g);
/// Vertices of h are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);
/// Vertex (u,v) at index u*h.order()+v.
Graph cartesian_product(const Graph& g, const Graph& h);
/// Vertices are the edges of g in lexicographic order.
Graph line_graph(const Graph& g);
/// Vertex i of the result is s[i].
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph local_graph(const Graph& g, int x);

VertexSet common_neighbors(const Graph& g, int x, int y);
/// |N(x) ∩ N(y)|; meaningful as a_xy for adjacent pairs.
int a_xy(const Graph& g, int x, int y);

}  // namespace coedge
