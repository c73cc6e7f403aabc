#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coedge/graph.hpp"
#include "coedge/spectrum.hpp"

namespace coedge {

/// Evidence that a property fails: the offending vertices together with
/// the observed and expected counts.
struct Witness {
  std::string kind;
  std::vector<int> vertices;
  long long observed = 0;
  long long expected = 0;

  std::string to_string() const;
};

/// A decided value, or the witness explaining why it does not exist.
template <class T>
struct Checked {
  std::optional<T> value;
  Witness witness;

  static Checked ok(T v) { return Checked{std::move(v), {}}; }
  static Checked fail(Witness w) { return Checked{std::nullopt, std::move(w)}; }

  explicit operator bool() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

struct CoEdgeParams {
  int n = 0, k = 0, c = 0;
  friend bool operator==(const CoEdgeParams&, const CoEdgeParams&) = default;
};

struct SrgParams {
  int n = 0, k = 0, a = 0, c = 0;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// k-regular, neither complete nor empty, constant c over nonadjacent pairs.
/// Witness kinds: "empty_input", "not_regular", "complete", "empty",
/// "c_not_constant".
Checked<CoEdgeParams> co_edge_regular_params(const Graph& g);

/// ℓ = Σ_{y ∈ N(x,z)} a_xy, constant over ordered nonadjacent pairs (x, z).
Checked<int> strongly_co_edge_regular_ell(const Graph& g);

struct WalkRegularity {
  bool walk_regular = false;
  /// Powers 0..power_bound-1 were checked; the bound is the degree of the
  /// minimal polynomial.
  int power_bound = 0;
  /// First failure (r, x, y): (A^r)_xx != (A^r)_yy.
  std::optional<std::array<int, 3>> failure;
};
WalkRegularity is_walk_regular(const Graph& g);

/// Witness kinds as for co_edge_regular_params plus "a_not_constant".
Checked<SrgParams> strongly_regular_params(const Graph& g);

struct SrgEigenData {
  RootInterval theta;  // larger restricted eigenvalue
  RootInterval tau;    // smaller restricted eigenvalue
  int m_theta = 0;
  int m_tau = 0;
  bool conference = false;
  /// k + m_theta*theta + m_tau*tau == 0, decided exactly.
  bool trace_ok = false;
};

/// Closed forms for the restricted eigenvalues of an SRG(n,k,a,c). Throws
/// Error when k <= c, c < 0, the counting identity k(k-a-1) = (n-k-1)c
/// fails, or the multiplicities are not nonnegative integers.
SrgEigenData srg_eigen_data(int n, int k, int a, int c);

/// ℓ from the spectrum: (Σθ_i)c + Π(k-θ_i)/n - (k-c)c. Requires a
/// connected regular graph with four distinct eigenvalues.
Rational ell_from_spectrum(const Graph& g, int c);
/// 2(Σθ_i) + Π(k-θ_i)/n - 2(k-2).
Rational theorem12_ell(const Graph& g);

/// Every pair at distance 2 has a common neighbourhood inducing a clique
/// of one fixed size; returns that size. Throws on complete input.
/// Witness kinds: "not_clique", "size_varies".
Checked<int> is_terwilliger(const Graph& g);

struct MomentReport {
  bool holds = false;
  /// Σ_{y~x} a_xy and Σ_{y~x} a_xy^2 per vertex.
  std::vector<long long> sum_a;
  std::vector<long long> sum_a_squared;
  bool walk_regular = false;
  /// Vertex independence of both sums (checked when walk-regular).
  bool sums_constant = false;
  std::optional<Witness> failure;
};

/// Checks (A^3)_xx = Σ a_xy and (A^4)_xx = k^2 + Σ a_xy^2 + (n-k-1)c^2 at
/// every vertex. Throws unless g is co-edge-regular.
MomentReport moment_identities(const Graph& g);

/// {w ~ x : a_xw >= k/2}.
VertexSet heavy_neighbors(const Graph& g, int x);

/// Square matrix power (A^r) over exact integers.
std::vector<std::vector<BigInt>> adjacency_power(const Graph& g, int r);

struct RegularityReport {
  int n = 0;
  std::optional<int> k;
  std::optional<int> c;
  std::optional<int> ell;
  std::optional<int> a;
  bool regular = false;
  bool co_edge_regular = false;
  bool strongly_co_edge_regular = false;
  bool walk_regular = false;
  bool strongly_regular = false;
  bool terwilliger = false;
  bool complete = false;
  bool empty = false;
  bool connected = false;
  std::vector<Witness> witnesses;
};

RegularityReport regularity_report(const Graph& g);

}  // namespace coedge
