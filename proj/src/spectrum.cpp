#include "coedge/spectrum.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "refine.hpp"

namespace coedge {

namespace mp = boost::multiprecision;

// RootInterval -------------------------------------------------------------------

RootInterval RootInterval::rational(const Rational& v) {
  RootInterval r;
  r.poly = ExactPolynomial(std::vector<BigInt>{-mp::numerator(v), mp::denominator(v)});
  r.lo = r.hi = v;
  r.exact = true;
  return r;
}

void RootInterval::bisect() {
  if (exact) return;
  Rational mid = (lo + hi) / 2;
  int s = poly.sign_at(mid);
  if (s == 0) {
    lo = hi = mid;
    exact = true;
  } else if (s != poly.sign_at(lo)) {
    hi = mid;
  } else {
    lo = mid;
  }
}

void RootInterval::refine_to(const Rational& width) {
  while (!exact && hi - lo > width) bisect();
}

double RootInterval::approx() const {
  RootInterval r = *this;
  r.refine_to(Rational(1, BigInt(1) << 60));
  return static_cast<double>((r.lo + r.hi) / 2);
}

std::string RootInterval::to_string() const {
  std::ostringstream os;
  if (exact) {
    os << lo;
  } else {
    os << "root of " << poly.to_string() << " in (" << lo << ", " << hi << ")";
  }
  return os.str();
}

namespace {

/// a < b is certain from the intervals alone.
bool certainly_below(const RootInterval& a, const RootInterval& b) {
  if (a.hi < b.lo) return true;
  return a.hi == b.lo && !(a.exact && b.exact);
}

std::strong_ordering three_way(const Rational& a, const Rational& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational floor_rational(const Rational& x) {
  BigInt q = mp::numerator(x) / mp::denominator(x);
  if (Rational(q) > x) q -= 1;
  return Rational(q);
}

}  // namespace

std::strong_ordering compare(RootInterval a, const Rational& r) {
  while (true) {
    if (a.exact) return three_way(a.lo, r);
    if (r <= a.lo) return std::strong_ordering::greater;
    if (r >= a.hi) return std::strong_ordering::less;
    if (a.poly.sign_at(r) == 0) return std::strong_ordering::equal;
    a.bisect();
  }
}

std::strong_ordering compare(RootInterval a, RootInterval b) {
  std::optional<ExactPolynomial> common;
  while (true) {
    if (a.exact && b.exact) return three_way(a.lo, b.lo);
    if (certainly_below(a, b)) return std::strong_ordering::less;
    if (certainly_below(b, a)) return std::strong_ordering::greater;
    if (a.exact) return 0 <=> compare(b, a.lo);
    if (b.exact) return compare(a, b.lo);
    if (!common) common = gcd(a.poly, b.poly);
    if (common->degree() >= 1) {
      // Any root of the common factor inside both intervals is the unique
      // root of each defining polynomial there.
      Rational lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
      if (lo < hi && SturmSequence(*common).count_in(lo, hi) > 0) return std::strong_ordering::equal;
    }
    a.bisect();
    b.bisect();
  }
}

std::vector<RootInterval> isolate_real_roots(const ExactPolynomial& squarefree) {
  std::vector<RootInterval> out;
  if (squarefree.degree() < 1) return out;
  const ExactPolynomial p = squarefree.primitive_part();
  const SturmSequence sturm(p);
  const Rational bound(root_bound(p));

  struct Pending {
    Rational lo, hi;
    int count;
  };
  std::vector<Pending> stack{{-bound, bound, sturm.count_in(-bound, bound)}};
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count > 1) {
      Rational mid = (cur.lo + cur.hi) / 2;
      int left = sturm.count_in(cur.lo, mid);
      // Push right first so the left half is processed first.
      stack.push_back({mid, cur.hi, cur.count - left});
      stack.push_back({cur.lo, mid, left});
      continue;
    }
    // Exactly one root in (lo, hi].
    RootInterval r;
    r.poly = p;
    r.lo = cur.lo;
    r.hi = cur.hi;
    if (p.sign_at(r.hi) == 0) {
      r.lo = r.hi;
      r.exact = true;
      out.push_back(std::move(r));
      continue;
    }
    // Rational roots of monic integer polynomials are integers; split at
    // interior integers until none remains inside.
    while (!r.exact) {
      Rational m = floor_rational(r.hi);
      if (m == r.hi) m -= 1;
      if (m <= r.lo) break;
      if (p.sign_at(m) == 0) {
        r.lo = r.hi = m;
        r.exact = true;
      } else if (sturm.count_in(r.lo, m) == 1) {
        r.hi = m;
      } else {
        r.lo = m;
      }
    }
    while (!r.exact && p.sign_at(r.lo) == 0) {
      Rational mid = (r.lo + r.hi) / 2;
      if (p.sign_at(mid) == 0) {
        r.lo = r.hi = mid;
        r.exact = true;
      } else if (sturm.count_in(r.lo, mid) == 1) {
        r.hi = mid;
      } else {
        r.lo = mid;
      }
    }
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  return out;
}

// Spectrum ---------------------------------------------------------------------------

std::vector<RootInterval> Spectrum::expanded() const {
  std::vector<RootInterval> out;
  for (const auto& e : roots)
    for (int i = 0; i < e.multiplicity; ++i) out.push_back(e.value);
  return out;
}

std::string Spectrum::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i) os << ", ";
    os << roots[i].value.to_string() << "^" << roots[i].multiplicity;
  }
  os << "}";
  return os.str();
}

IntMatrix adjacency_matrix(const Graph& g) {
  const int n = g.order();
  IntMatrix a(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) g.row(i).for_each([&](std::size_t j) { a[i][j] = 1; });
  return a;
}

ExactPolynomial char_poly(const Graph& g) {
  if (g.order() == 0) throw Error("characteristic polynomial of the empty graph");
  return characteristic_polynomial(adjacency_matrix(g));
}

Spectrum spectrum_of_polynomial(const ExactPolynomial& charpoly) {
  Spectrum s;
  s.charpoly = charpoly;
  for (auto& [factor, mult] : squarefree_decomposition(charpoly)) {
    for (auto& r : isolate_real_roots(factor)) s.roots.push_back({std::move(r), mult});
  }
  // Roots of distinct squarefree factors are distinct; refine until the
  // intervals separate, then order by position.
  while (true) {
    std::sort(s.roots.begin(), s.roots.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
      return a.value.lo < b.value.lo || (a.value.lo == b.value.lo && a.value.hi < b.value.hi);
    });
    bool separated = true;
    for (std::size_t i = 0; i + 1 < s.roots.size(); ++i) {
      auto& a = s.roots[i].value;
      auto& b = s.roots[i + 1].value;
      if (!certainly_below(a, b)) {
        separated = false;
        a.bisect();
        b.bisect();
      }
    }
    if (separated) break;
  }
  std::reverse(s.roots.begin(), s.roots.end());
  s.distinct_count = static_cast<int>(s.roots.size());
  int total = 0;
  for (const auto& e : s.roots) total += e.multiplicity;
  if (total != charpoly.degree()) throw Error("characteristic polynomial has non-real roots");
  return s;
}

Spectrum spectrum(const Graph& g) { return spectrum_of_polynomial(char_poly(g)); }

int distinct_eigenvalue_count(const Graph& g) {
  return squarefree_part(char_poly(g)).degree();
}

std::strong_ordering cmp_min_eigenvalue(const Spectrum& s, const Rational& r) {
  return compare(s.theta_min(), r);
}

std::strong_ordering cmp_min_eigenvalue(const Graph& g, const Rational& r) {
  const ExactPolynomial sq = squarefree_part(char_poly(g));
  if (SturmSequence(sq).count_below(r) > 0) return std::strong_ordering::less;
  if (sq.sign_at(r) == 0) return std::strong_ordering::equal;
  return std::strong_ordering::greater;
}

bool interlaces(const Spectrum& parent, const Spectrum& child) {
  const int n = parent.order(), m = child.order();
  if (m > n) throw Error("interlacing needs the child no larger than the parent");
  const auto p = parent.expanded();
  const auto c = child.expanded();
  for (int i = 0; i < m; ++i) {
    if (compare(p[static_cast<std::size_t>(n - m + i)], c[static_cast<std::size_t>(i)]) > 0) return false;
    if (compare(c[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i)]) > 0) return false;
  }
  return true;
}

namespace {

/// s^d q((y - c)/s) for the substitution x = (y - c)/s, i.e. roots map as
/// theta -> s*theta + c.
ExactPolynomial affine_image(const ExactPolynomial& q, const BigInt& s, const BigInt& c) {
  const int d = q.degree();
  ExactPolynomial result;
  const ExactPolynomial shifted = ExactPolynomial(std::vector<BigInt>{-c, 1});  // y - c
  ExactPolynomial power = ExactPolynomial::constant(1);
  for (int i = 0; i <= d; ++i) {
    BigInt scale = q.coeff(i) * mp::pow(s, static_cast<unsigned>(d - i));
    result = result + scale * power;
    power = power * shifted;
  }
  return result;
}

}  // namespace

Spectrum clique_extension_spectrum(const Spectrum& spec, int s) {
  if (s < 1) throw Error("clique extension needs s >= 1");
  const BigInt sb = s, shift = s - 1;
  const int n = spec.order();
  Spectrum out;
  ExactPolynomial extra = ExactPolynomial::constant(1);
  for (int i = 0; i < (s - 1) * n; ++i) extra = extra * ExactPolynomial::linear_root(-1);
  out.charpoly = affine_image(spec.charpoly, sb, shift) * extra;

  for (const auto& e : spec.roots) {
    RootInterval v;
    if (e.value.exact) {
      v = RootInterval::rational(e.value.lo * s + (s - 1));
    } else {
      v.poly = affine_image(e.value.poly, sb, shift).primitive_part();
      v.lo = e.value.lo * s + (s - 1);
      v.hi = e.value.hi * s + (s - 1);
    }
    out.roots.push_back({std::move(v), e.multiplicity});
  }
  const int extra_mult = (s - 1) * n;
  if (extra_mult > 0) {
    const Rational minus_one(-1);
    auto it = std::find_if(out.roots.begin(), out.roots.end(),
                           [&](const SpectrumEntry& e) { return compare(e.value, minus_one) <= 0; });
    if (it != out.roots.end() && compare(it->value, minus_one) == 0) {
      it->multiplicity += extra_mult;
    } else {
      out.roots.insert(it, {RootInterval::rational(minus_one), extra_mult});
    }
  }
  out.distinct_count = static_cast<int>(out.roots.size());
  return out;
}

bool same_spectrum(const Spectrum& a, const Spectrum& b) {
  if (a.charpoly != b.charpoly || a.roots.size() != b.roots.size()) return false;
  for (std::size_t i = 0; i < a.roots.size(); ++i) {
    if (a.roots[i].multiplicity != b.roots[i].multiplicity) return false;
    if (compare(a.roots[i].value, b.roots[i].value) != 0) return false;
  }
  return true;
}

// Equitable partitions -----------------------------------------------------------------

namespace {

std::vector<Bitset> validated_cells(const Graph& g, const Partition& partition) {
  const int n = g.order();
  Bitset seen(static_cast<std::size_t>(n));
  std::vector<Bitset> cells;
  for (const auto& cell : partition) {
    if (cell.empty()) throw Error("partition has an empty cell");
    Bitset b = cell.to_bits(n);
    if (b.intersects(seen)) throw Error("partition cells overlap");
    seen |= b;
    cells.push_back(std::move(b));
  }
  if (seen.count() != static_cast<std::size_t>(n)) throw Error("partition does not cover every vertex");
  return cells;
}

}  // namespace

std::variant<QuotientMatrix, NotEquitable> quotient_matrix(const Graph& g, const Partition& partition) {
  const auto cells = validated_cells(g, partition);
  const std::size_t r = cells.size();
  QuotientMatrix qm;
  qm.partition = partition;
  qm.q.assign(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    const int first = partition[i][0];
    for (std::size_t j = 0; j < r; ++j)
      qm.q[i][j] = static_cast<std::int64_t>(g.row(first).count_and(cells[j]));
    for (int v : partition[i]) {
      for (std::size_t j = 0; j < r; ++j) {
        auto c = static_cast<std::int64_t>(g.row(v).count_and(cells[j]));
        if (c != qm.q[i][j])
          return NotEquitable{v, static_cast<int>(i), static_cast<int>(j), static_cast<int>(c),
                              static_cast<int>(qm.q[i][j])};
      }
    }
  }
  return qm;
}

Partition coarsest_equitable_refinement(const Graph& g, const Partition& partition) {
  validated_cells(g, partition);
  std::vector<std::vector<int>> cells;
  for (const auto& c : partition) cells.push_back(c.members());
  detail::refine_equitable(g, cells);
  Partition out;
  for (auto& c : cells) out.emplace_back(std::move(c));
  return out;
}

bool quotient_spectrum_subset(const QuotientMatrix& q, const Graph& g) {
  auto check = quotient_matrix(g, q.partition);
  if (!std::holds_alternative<QuotientMatrix>(check) || std::get<QuotientMatrix>(check).q != q.q)
    throw Error("quotient matrix is not the equitable quotient of this graph");
  const ExactPolynomial cq = squarefree_part(characteristic_polynomial(q.q));
  return divides(cq, char_poly(g));
}

BigInt determinant(const IntMatrix& m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error("determinant needs a square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return a[n - 1][n - 1] * sign;
}

// Hoffman-type identity ------------------------------------------------------------------

CubicFactor cubic_factor(const Graph& g) {
  if (g.order() == 0) throw Error("empty graph");
  if (!g.is_connected()) throw Error("graph is disconnected");
  auto k = g.regular_degree();
  if (!k) throw Error("graph is not regular");
  const ExactPolynomial sq = squarefree_part(char_poly(g));
  if (sq.degree() != 4)
    throw Error("graph has " + std::to_string(sq.degree()) + " distinct eigenvalues, expected 4");
  CubicFactor c;
  c.gv = divide_exact(sq, ExactPolynomial::linear_root(*k));
  if (!c.gv.is_monic()) c.gv = -c.gv;
  c.sum = -c.gv.coeff(2);
  c.pair_sum = c.gv.coeff(1);
  c.product = -c.gv.coeff(0);
  c.gv_at_k = c.gv.eval(BigInt(*k));
  return c;
}

HoffmanResidual hoffman_residual(const Graph& g) {
  HoffmanResidual r;
  r.cubic = cubic_factor(g);
  const int n = g.order();
  r.j_coefficient = Rational(r.cubic.gv_at_k, n);
  const IntMatrix a1 = adjacency_matrix(g);
  auto times_a = [&](const IntMatrix& m) {
    IntMatrix out(m.size(), std::vector<std::int64_t>(m.size(), 0));
    for (int i = 0; i < n; ++i)
      g.row(i).for_each([&](std::size_t l) {
        for (int j = 0; j < n; ++j) out[i][j] += m[l][j];
      });
    return out;
  };
  const IntMatrix a2 = times_a(a1);
  const IntMatrix a3 = times_a(a2);
  r.zero = true;
  for (int i = 0; i < n && r.zero; ++i)
    for (int j = 0; j < n; ++j) {
      BigInt v = BigInt(a3[i][j]) - r.cubic.sum * a2[i][j] + r.cubic.pair_sum * a1[i][j];
      if (i == j) v -= r.cubic.product;
      v = v * n - r.cubic.gv_at_k;
      if (v != 0) {
        r.zero = false;
        r.witness = std::make_pair(i, j);
        r.witness_value = v;
        break;
      }
    }
  return r;
}

}  // namespace coedge
