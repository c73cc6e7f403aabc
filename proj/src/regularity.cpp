#include "coedge/regularity.hpp"

#include <array>
#include <sstream>

namespace coedge {

namespace mp = boost::multiprecision;

std::string Witness::to_string() const {
  std::ostringstream os;
  os << kind << " at (";
  for (std::size_t i = 0; i < vertices.size(); ++i) os << (i ? "," : "") << vertices[i];
  os << "): observed " << observed << ", expected " << expected;
  return os.str();
}

namespace {

/// Regularity plus the complete/empty exclusions shared by co-edge-regular
/// and strongly regular graphs.
std::optional<Witness> check_regular_nontrivial(const Graph& g) {
  const int n = g.order();
  if (n == 0) return Witness{"empty_input", {}, 0, 0};
  const int k = g.degree(0);
  for (int x = 1; x < n; ++x)
    if (g.degree(x) != k) return Witness{"not_regular", {0, x}, g.degree(x), k};
  if (g.is_complete()) return Witness{"complete", {}, k, n - 1};
  if (g.is_empty()) return Witness{"empty", {}, 0, 0};
  return std::nullopt;
}

/// c over nonadjacent pairs in lexicographic order.
Checked<int> constant_c(const Graph& g) {
  const int n = g.order();
  std::optional<int> c;
  for (int x = 0; x < n; ++x)
    for (int z = x + 1; z < n; ++z) {
      if (g.adjacent(x, z)) continue;
      const int v = a_xy(g, x, z);
      if (!c) c = v;
      else if (v != *c) return Checked<int>::fail({"c_not_constant", {x, z}, v, *c});
    }
  return Checked<int>::ok(*c);
}

std::vector<std::vector<int>> edge_overlaps(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (auto [x, y] : g.edges()) a[x][y] = a[y][x] = a_xy(g, x, y);
  return a;
}

template <class Int>
std::vector<std::vector<Int>> times_adjacency(const Graph& g, const std::vector<std::vector<Int>>& m) {
  const int n = g.order();
  std::vector<std::vector<Int>> out(m.size(), std::vector<Int>(m.size(), Int(0)));
  for (int i = 0; i < n; ++i)
    g.row(i).for_each([&](std::size_t l) {
      for (int j = 0; j < n; ++j) out[i][j] += m[l][j];
    });
  return out;
}

template <class Int>
std::vector<std::vector<Int>> identity(int n) {
  std::vector<std::vector<Int>> m(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

Checked<CoEdgeParams> co_edge_regular_params(const Graph& g) {
  if (auto w = check_regular_nontrivial(g)) return Checked<CoEdgeParams>::fail(*w);
  auto c = constant_c(g);
  if (!c) return Checked<CoEdgeParams>::fail(c.witness);
  return Checked<CoEdgeParams>::ok({g.order(), g.degree(0), *c});
}

Checked<int> strongly_co_edge_regular_ell(const Graph& g) {
  auto params = co_edge_regular_params(g);
  if (!params) return Checked<int>::fail(params.witness);
  const int n = g.order();
  const auto a = edge_overlaps(g);
  std::optional<int> ell;
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      if (x == z || g.adjacent(x, z)) continue;
      int sum = 0;
      (g.row(x) & g.row(z)).for_each([&](std::size_t y) { sum += a[x][y]; });
      if (!ell) ell = sum;
      else if (sum != *ell) return Checked<int>::fail({"ell_not_constant", {x, z}, sum, *ell});
    }
  return Checked<int>::ok(*ell);
}

std::vector<std::vector<BigInt>> adjacency_power(const Graph& g, int r) {
  if (r < 0) throw Error("negative matrix power");
  auto m = identity<BigInt>(g.order());
  for (int i = 0; i < r; ++i) m = times_adjacency(g, m);
  return m;
}

WalkRegularity is_walk_regular(const Graph& g) {
  if (g.order() == 0) throw Error("walk-regularity of the empty graph");
  WalkRegularity out;
  const int n = g.order();
  out.power_bound = squarefree_part(char_poly(g)).degree();
  int max_deg = 0;
  for (int x = 0; x < n; ++x) max_deg = std::max(max_deg, g.degree(x));

  auto check_diag = [&](int r, const auto& m) -> bool {
    for (int y = 1; y < n; ++y)
      if (m[y][y] != m[0][0]) {
        out.failure = std::array<int, 3>{r, 0, y};
        return false;
      }
    return true;
  };

  // Entries of A^r are bounded by max_deg^r; stay in 64-bit while safe.
  auto small = identity<long long>(n);
  double magnitude = 1;
  int r = 0;
  for (; r < out.power_bound; ++r) {
    if (r > 0) {
      magnitude *= std::max(max_deg, 1);
      if (magnitude > 1e17) break;
      small = times_adjacency(g, small);
    }
    if (!check_diag(r, small)) return out;
  }
  if (r < out.power_bound) {
    std::vector<std::vector<BigInt>> big(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) big[i][j] = small[i][j];
    for (; r < out.power_bound; ++r) {
      big = times_adjacency(g, big);
      if (!check_diag(r, big)) return out;
    }
  }
  out.walk_regular = true;
  return out;
}

Checked<SrgParams> strongly_regular_params(const Graph& g) {
  if (auto w = check_regular_nontrivial(g)) return Checked<SrgParams>::fail(*w);
  std::optional<int> a;
  for (auto [x, y] : g.edges()) {
    const int v = a_xy(g, x, y);
    if (!a) a = v;
    else if (v != *a) return Checked<SrgParams>::fail({"a_not_constant", {x, y}, v, *a});
  }
  auto c = constant_c(g);
  if (!c) return Checked<SrgParams>::fail(c.witness);
  return Checked<SrgParams>::ok({g.order(), g.degree(0), *a, *c});
}

SrgEigenData srg_eigen_data(int n, int k, int a, int c) {
  if (c < 0 || k <= c) throw Error("SRG parameters need k > c >= 0");
  if (static_cast<long long>(k) * (k - a - 1) != static_cast<long long>(n - k - 1) * c)
    throw Error("SRG counting identity k(k-a-1) = (n-k-1)c fails");
  SrgEigenData d;
  const long long amc = a - c;
  const long long disc = amc * amc + 4LL * (k - c);
  const long long num = 2LL * k + static_cast<long long>(n - 1) * amc;
  const BigInt root = mp::sqrt(BigInt(disc));
  const bool rational = root * root == disc;
  const ExactPolynomial quad(std::vector<BigInt>{BigInt(-(k - c)), BigInt(-amc), BigInt(1)});

  d.conference = (n == 4 * c + 1 && k == 2 * c && a == c - 1);
  if (rational) {
    const long long s = root.convert_to<long long>();
    d.theta = RootInterval::rational(Rational(amc + s, 2));
    d.tau = RootInterval::rational(Rational(amc - s, 2));
    if (num % s != 0) throw Error("SRG multiplicities are not integral");
    const long long diff = num / s;  // m_tau - m_theta
    if ((n - 1 + diff) % 2 != 0) throw Error("SRG multiplicities are not integral");
    d.m_tau = static_cast<int>((n - 1 + diff) / 2);
    d.m_theta = static_cast<int>((n - 1 - diff) / 2);
  } else {
    if (num != 0) throw Error("SRG multiplicities are not integral");
    if ((n - 1) % 2 != 0) throw Error("SRG multiplicities are not integral");
    d.m_theta = d.m_tau = (n - 1) / 2;
    auto roots = isolate_real_roots(quad);
    d.tau = roots[0];
    d.theta = roots[1];
  }
  if (d.m_theta < 0 || d.m_tau < 0) throw Error("SRG multiplicities are negative");

  // k + m_theta*theta + m_tau*tau with theta,tau = (amc ± sqrt(disc))/2.
  if (rational) {
    d.trace_ok = Rational(k) + d.m_theta * d.theta.lo + d.m_tau * d.tau.lo == 0;
  } else {
    d.trace_ok = d.m_theta == d.m_tau && k + static_cast<long long>(d.m_theta) * amc == 0;
  }
  return d;
}

Rational ell_from_spectrum(const Graph& g, int c) {
  const CubicFactor cf = cubic_factor(g);
  const int k = g.degree(0);
  return Rational(cf.sum * c) + Rational(cf.gv_at_k, g.order()) - Rational((k - c) * c);
}

Rational theorem12_ell(const Graph& g) {
  const CubicFactor cf = cubic_factor(g);
  const int k = g.degree(0);
  return Rational(2 * cf.sum) + Rational(cf.gv_at_k, g.order()) - Rational(2 * (k - 2));
}

Checked<int> is_terwilliger(const Graph& g) {
  if (g.order() > 0 && g.is_complete()) throw Error("Terwilliger property needs a non-complete graph");
  const int n = g.order();
  std::optional<int> size;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (g.adjacent(x, y)) continue;
      const Bitset common = g.row(x) & g.row(y);
      const auto members = common.to_vector();
      if (members.empty()) continue;  // not at distance 2
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
          if (!g.adjacent(members[i], members[j]))
            return Checked<int>::fail({"not_clique", {x, y, members[i], members[j]},
                                       static_cast<long long>(members.size()), 0});
      const int s = static_cast<int>(members.size());
      if (!size) size = s;
      else if (s != *size) return Checked<int>::fail({"size_varies", {x, y}, s, *size});
    }
  return Checked<int>::ok(size.value_or(0));
}

MomentReport moment_identities(const Graph& g) {
  auto params = co_edge_regular_params(g);
  if (!params) throw Error("moment identities need a co-edge-regular graph: " + params.witness.to_string());
  const auto [n, k, c] = *params;
  MomentReport r;
  const auto a = edge_overlaps(g);
  auto a2 = times_adjacency(g, identity<long long>(n));
  a2 = times_adjacency(g, a2);
  const auto a3 = times_adjacency(g, a2);
  const auto a4 = times_adjacency(g, a3);
  r.sum_a.assign(static_cast<std::size_t>(n), 0);
  r.sum_a_squared.assign(static_cast<std::size_t>(n), 0);
  r.holds = true;
  for (int x = 0; x < n; ++x) {
    g.row(x).for_each([&](std::size_t y) {
      r.sum_a[x] += a[x][y];
      r.sum_a_squared[x] += static_cast<long long>(a[x][y]) * a[x][y];
    });
    if (a3[x][x] != r.sum_a[x]) {
      r.holds = false;
      r.failure = Witness{"cube_diagonal", {x}, a3[x][x], r.sum_a[x]};
      break;
    }
    const long long expected = static_cast<long long>(k) * k + r.sum_a_squared[x] +
                               static_cast<long long>(n - k - 1) * c * c;
    if (a4[x][x] != expected) {
      r.holds = false;
      r.failure = Witness{"fourth_power_diagonal", {x}, a4[x][x], expected};
      break;
    }
  }
  r.walk_regular = is_walk_regular(g).walk_regular;
  r.sums_constant = true;
  for (int x = 1; x < n; ++x)
    if (r.sum_a[x] != r.sum_a[0] || r.sum_a_squared[x] != r.sum_a_squared[0]) r.sums_constant = false;
  if (r.walk_regular && !r.sums_constant) {
    r.holds = false;
    if (!r.failure) r.failure = Witness{"sums_vary_on_walk_regular", {0}, r.sum_a[0], r.sum_a[0]};
  }
  return r;
}

VertexSet heavy_neighbors(const Graph& g, int x) {
  std::vector<int> w;
  const int k = g.degree(x);
  g.row(x).for_each([&](std::size_t y) {
    if (2 * a_xy(g, x, static_cast<int>(y)) >= k) w.push_back(static_cast<int>(y));
  });
  return VertexSet(std::move(w));
}

RegularityReport regularity_report(const Graph& g) {
  RegularityReport r;
  r.n = g.order();
  if (r.n == 0) throw Error("regularity report of the empty graph");
  r.connected = g.is_connected();
  r.complete = g.is_complete();
  r.empty = g.is_empty();
  if (auto k = g.regular_degree()) {
    r.regular = true;
    r.k = *k;
  }
  auto coedge = co_edge_regular_params(g);
  if (coedge) {
    r.co_edge_regular = true;
    r.c = coedge->c;
    auto ell = strongly_co_edge_regular_ell(g);
    if (ell) {
      r.strongly_co_edge_regular = true;
      r.ell = *ell;
    } else {
      r.witnesses.push_back(ell.witness);
    }
  } else {
    r.witnesses.push_back(coedge.witness);
  }
  auto walk = is_walk_regular(g);
  r.walk_regular = walk.walk_regular;
  if (walk.failure) {
    auto [p, x, y] = *walk.failure;
    r.witnesses.push_back({"walk_diagonal_r" + std::to_string(p), {x, y}, 0, 0});
  }
  auto srg = strongly_regular_params(g);
  if (srg) {
    r.strongly_regular = true;
    r.a = srg->a;
  } else if (coedge) {
    r.witnesses.push_back(srg.witness);
  }
  if (!r.complete) {
    auto t = is_terwilliger(g);
    r.terwilliger = static_cast<bool>(t);
    if (!t) r.witnesses.push_back(t.witness);
  } else {
    r.witnesses.push_back({"complete", {}, r.n - 1, r.n - 1});
  }
  return r;
}

}  // namespace coedge
