#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coedge/graph.hpp"
#include "coedge/polynomial.hpp"

namespace coedge {

/// A real algebraic number: the unique root of `poly` in the interval.
///
/// When `exact` is set the root is the rational lo == hi. Otherwise the
/// root lies strictly inside (lo, hi) and poly has no other root in [lo, hi].
struct RootInterval {
  ExactPolynomial poly;  // squarefree, primitive
  Rational lo;
  Rational hi;
  bool exact = false;

  static RootInterval rational(const Rational& v);

  /// Halves the interval (no-op when exact).
  void bisect();
  /// Refines until hi - lo <= width.
  void refine_to(const Rational& width);
  /// Midpoint approximation, for display only.
  double approx() const;
  std::string to_string() const;
};

/// Exact trichotomy between two real algebraic numbers. Equality is
/// decided by a common factor of the defining polynomials with a root in
/// the overlap of the intervals.
std::strong_ordering compare(RootInterval a, RootInterval b);
std::strong_ordering compare(RootInterval a, const Rational& r);

/// Isolates the real roots of a squarefree polynomial, ascending.
std::vector<RootInterval> isolate_real_roots(const ExactPolynomial& squarefree);

struct SpectrumEntry {
  RootInterval value;
  int multiplicity = 0;
};

/// Eigenvalues with multiplicities, sorted descending. Multiplicities come
/// from the squarefree decomposition of the characteristic polynomial.
struct Spectrum {
  ExactPolynomial charpoly;
  std::vector<SpectrumEntry> roots;
  int distinct_count = 0;

  int order() const { return charpoly.degree(); }
  const RootInterval& theta_min() const { return roots.back().value; }
  const RootInterval& theta_max() const { return roots.front().value; }
  /// All eigenvalues repeated by multiplicity, descending (eta_1 >= eta_2 ...).
  std::vector<RootInterval> expanded() const;
  std::string to_string() const;
};

IntMatrix adjacency_matrix(const Graph& g);

/// det(xI - A). Throws for the empty graph.
ExactPolynomial char_poly(const Graph& g);

Spectrum spectrum_of_polynomial(const ExactPolynomial& charpoly);
Spectrum spectrum(const Graph& g);
int distinct_eigenvalue_count(const Graph& g);

/// Sign of theta_min(g) - r.
std::strong_ordering cmp_min_eigenvalue(const Graph& g, const Rational& r);
std::strong_ordering cmp_min_eigenvalue(const Spectrum& s, const Rational& r);

/// Cauchy interlacing of child eigenvalues inside parent eigenvalues.
/// Throws when the child is larger than the parent.
bool interlaces(const Spectrum& parent, const Spectrum& child);

/// Maps theta -> s(theta+1)-1 and appends (-1)^((s-1)n).
Spectrum clique_extension_spectrum(const Spectrum& spec, int s);

bool same_spectrum(const Spectrum& a, const Spectrum& b);

// Equitable partitions -----------------------------------------------------------

using Partition = std::vector<VertexSet>;

struct QuotientMatrix {
  Partition partition;
  /// q[i][j] = neighbours in cell j of any vertex in cell i.
  IntMatrix q;
};

/// A vertex whose neighbour count into `cell` differs from the first
/// vertex of its own cell.
struct NotEquitable {
  int vertex = -1;
  int vertex_cell = -1;
  int cell = -1;
  int observed = 0;
  int expected = 0;
};

/// Throws Error on a malformed partition (overlap, gap, empty cell).
std::variant<QuotientMatrix, NotEquitable> quotient_matrix(const Graph& g, const Partition& partition);

/// Coarsest equitable partition refining `partition`. Cells are split by
/// neighbour-count signatures, new pieces ordered by ascending signature in
/// place of the parent cell.
Partition coarsest_equitable_refinement(const Graph& g, const Partition& partition);

/// Every eigenvalue of Q is an eigenvalue of g: each irreducible factor of
/// char(Q) divides char(g), tested via gcd of squarefree parts.
bool quotient_spectrum_subset(const QuotientMatrix& q, const Graph& g);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

// Hoffman-type identity ------------------------------------------------------------

/// Elementary symmetric data of the three non-principal eigenvalues.
struct CubicFactor {
  ExactPolynomial gv;   // squarefree(charpoly) / (x - k), monic cubic
  BigInt sum;           // theta_1 + theta_2 + theta_3
  BigInt pair_sum;      // sum of theta_i theta_j over i < j
  BigInt product;       // theta_1 theta_2 theta_3
  BigInt gv_at_k;       // prod (k - theta_i)
};

/// Requires a connected k-regular graph with exactly four distinct
/// eigenvalues; throws Error otherwise.
CubicFactor cubic_factor(const Graph& g);

struct HoffmanResidual {
  bool zero = false;
  CubicFactor cubic;
  /// Rational scalar prod(k - theta_i)/n multiplying J.
  Rational j_coefficient;
  /// First nonzero entry of n*(A^3 - e1 A^2 + e2 A - e3 I) - gv(k) J.
  std::optional<std::pair<int, int>> witness;
  BigInt witness_value = 0;
};

HoffmanResidual hoffman_residual(const Graph& g);

}  // namespace coedge
