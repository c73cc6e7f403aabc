#include "coedge/pipeline.hpp"

#include <sstream>

#include "coedge/canonical.hpp"
#include "coedge/recognizers.hpp"
#include "coedge/regularity.hpp"
#include "coedge/spectrum.hpp"
#include "coedge/subgraph.hpp"

namespace coedge {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Grid: return "Grid";
    case Outcome::TwoCliqueExtC5: return "TwoCliqueExtC5";
    case Outcome::Shrikhande: return "Shrikhande";
    case Outcome::HypothesesNotMet: return "HypothesesNotMet";
    case Outcome::ConclusionViolated: return "ConclusionViolated";
  }
  return "Unknown";
}

std::string ClassificationVerdict::summary() const {
  if (outcome == Outcome::Grid) return "Grid(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return to_string(outcome);
}

int ClassificationVerdict::exit_code() const {
  switch (outcome) {
    case Outcome::HypothesesNotMet: return 1;
    case Outcome::ConclusionViolated: return 2;
    default: return 0;
  }
}

namespace {

std::string str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

/// Accumulates trail entries and stops at the first failed hypothesis.
class Trail {
public:
  explicit Trail(std::string theorem) { v_.theorem = std::move(theorem); }

  bool require(const std::string& check, bool ok, const std::string& result, const std::string& witness = {}) {
    v_.trail.push_back({check, ok, result, witness});
    if (!ok) {
      v_.outcome = Outcome::HypothesesNotMet;
      v_.reasons.push_back(check + ": " + result + (witness.empty() ? "" : " [" + witness + "]"));
    }
    return ok;
  }
  void note(const std::string& check, bool ok, const std::string& result, const std::string& witness = {}) {
    v_.trail.push_back({check, ok, result, witness});
  }
  ClassificationVerdict& verdict() { return v_; }
  ClassificationVerdict finish() { return std::move(v_); }

private:
  ClassificationVerdict v_;
};

struct BaseFacts {
  CoEdgeParams params;
};

/// connected -> regular/co-edge-regular -> c = 2.
std::optional<BaseFacts> check_base(const Graph& g, Trail& t) {
  if (g.order() == 0) {
    t.require("connected", false, "empty input");
    return std::nullopt;
  }
  if (!t.require("connected", g.is_connected(), g.is_connected() ? "yes" : "no")) return std::nullopt;
  const auto params = co_edge_regular_params(g);
  if (!params) {
    const bool regular = params.witness.kind != "not_regular";
    t.require("regular", regular, regular ? "yes" : "no", regular ? "" : params.witness.to_string());
    if (regular) t.require("co-edge-regular", false, "no", params.witness.to_string());
    return std::nullopt;
  }
  t.note("regular", true, "k = " + std::to_string(params->k));
  t.note("co-edge-regular", true, "(n,k,c) = " + triple(params->n, params->k, params->c));
  if (!t.require("c = 2", params->c == 2, "c = " + std::to_string(params->c))) return std::nullopt;
  return BaseFacts{*params};
}

/// Walk-regular and strongly co-edge-regular; records combinatorial ℓ.
std::optional<int> check_walk_and_ell(const Graph& g, Trail& t) {
  const auto walk = is_walk_regular(g);
  std::string wit;
  if (walk.failure) {
    const auto [r, x, y] = *walk.failure;
    wit = "(A^" + std::to_string(r) + ")_{" + std::to_string(x) + "," + std::to_string(x) + "} != (A^" +
          std::to_string(r) + ")_{" + std::to_string(y) + "," + std::to_string(y) + "}";
  }
  if (!t.require("walk-regular", walk.walk_regular, walk.walk_regular ? "yes" : "no", wit)) return std::nullopt;
  const auto ell = strongly_co_edge_regular_ell(g);
  if (!t.require("strongly co-edge-regular", static_cast<bool>(ell),
                 ell ? "ell = " + std::to_string(*ell) : "no", ell ? "" : ell.witness.to_string()))
    return std::nullopt;
  t.verdict().combinatorial_ell = *ell;
  return *ell;
}

/// Conclusion: a grid with p + q = k + 2 and ℓ = k - 2 (p > q when strict).
bool conclude_grid(const Graph& g, int k, const Rational& ell, bool strict, Trail& t) {
  const auto grid = recognize_grid(g);
  if (!grid) {
    t.note("grid", false, "not a grid");
    return false;
  }
  const bool sum_ok = grid->p + grid->q == k + 2;
  const bool ell_ok = ell == k - 2;
  const bool order_ok = !strict || grid->p > grid->q;
  t.note("grid", sum_ok && ell_ok && order_ok,
         "Grid(" + std::to_string(grid->p) + "," + std::to_string(grid->q) + "), p+q = " +
             std::to_string(grid->p + grid->q) + ", k+2 = " + std::to_string(k + 2) + ", ell = " + str(ell));
  if (!(sum_ok && ell_ok && order_ok)) return false;
  t.verdict().outcome = Outcome::Grid;
  t.verdict().p = grid->p;
  t.verdict().q = grid->q;
  return true;
}

bool conclude_two_clique_c5(const Graph& g, Trail& t) {
  const bool iso = is_isomorphic(g, s_clique_extension(cycle_graph(5), 2));
  t.note("2-clique extension of C5", iso, iso ? "isomorphic" : "not isomorphic");
  if (iso) t.verdict().outcome = Outcome::TwoCliqueExtC5;
  return iso;
}

void violated(Trail& t, const std::string& evidence) {
  t.verdict().outcome = Outcome::ConclusionViolated;
  t.verdict().evidence = evidence;
}

}  // namespace

ClassificationVerdict classify_theorem_1_2(const Graph& g) {
  Trail t("T1.2");
  const auto base = check_base(g, t);
  if (!base) return t.finish();
  const int k = base->params.k;
  const Spectrum spec = spectrum(g);
  if (!t.require("four distinct eigenvalues", spec.distinct_count == 4,
                 std::to_string(spec.distinct_count) + " distinct", spec.to_string()))
    return t.finish();
  const Rational ell = theorem12_ell(g);
  t.verdict().spectral_ell = ell;
  const auto comb = strongly_co_edge_regular_ell(g);
  if (comb) t.verdict().combinatorial_ell = *comb;
  t.note("spectral ell", true, str(ell), comb ? "combinatorial ell = " + std::to_string(*comb) : "");

  const Rational three_quarters_k = Rational(3 * k, 4);
  const bool branch_i = ell >= three_quarters_k;
  const auto min_cmp = cmp_min_eigenvalue(spec, Rational(-3));
  const bool min_ok = min_cmp != std::strong_ordering::less;
  const bool branch_ii = min_ok && k >= 120;
  t.note("ell >= 3k/4", branch_i, str(ell) + " vs " + str(three_quarters_k));
  t.note("theta_min >= -3 and k >= 120", branch_ii,
         std::string("theta_min ") + (min_ok ? ">= -3" : "< -3") + ", k = " + std::to_string(k));

  if (branch_i) {
    t.verdict().theorem = "T1.2i";
    if (conclude_grid(g, k, ell, true, t)) return t.finish();
    if (conclude_two_clique_c5(g, t)) return t.finish();
    violated(t, "branch (i) hypotheses hold but g is neither a grid with p > q, p+q = k+2, ell = k-2 nor the 2-clique extension of C5");
    return t.finish();
  }
  if (branch_ii) {
    t.verdict().theorem = "T1.2ii";
    if (conclude_grid(g, k, ell, true, t)) return t.finish();
    violated(t, "branch (ii) hypotheses hold but g is not a grid with p > q, p+q = k+2, ell = k-2");
    return t.finish();
  }
  t.verdict().outcome = Outcome::HypothesesNotMet;
  t.verdict().reasons.push_back("branch (i): ell = " + str(ell) + " < 3k/4 = " + str(three_quarters_k));
  t.verdict().reasons.push_back(std::string("branch (ii): ") + (min_ok ? "" : "theta_min < -3, ") +
                                "k = " + std::to_string(k) + (k >= 120 ? "" : " < 120"));
  return t.finish();
}

ClassificationVerdict classify_theorem_1_3(const Graph& g) {
  Trail t("T1.3");
  const auto base = check_base(g, t);
  if (!base) return t.finish();
  const int k = base->params.k;
  const auto ell = check_walk_and_ell(g, t);
  if (!ell) return t.finish();
  const Rational three_quarters_k = Rational(3 * k, 4);
  if (!t.require("ell >= 3k/4", Rational(*ell) >= three_quarters_k,
                 "ell = " + std::to_string(*ell) + ", 3k/4 = " + str(three_quarters_k)))
    return t.finish();
  if (conclude_grid(g, k, Rational(*ell), false, t)) return t.finish();
  if (conclude_two_clique_c5(g, t)) return t.finish();
  violated(t, "hypotheses hold but g is neither a grid with p+q = k+2, ell = k-2 nor the 2-clique extension of C5");
  return t.finish();
}

ClassificationVerdict classify_theorem_1_4(const Graph& g) {
  Trail t("T1.4");
  const auto base = check_base(g, t);
  if (!base) return t.finish();
  const int k = base->params.k;
  const auto ell = check_walk_and_ell(g, t);
  if (!ell) return t.finish();
  const bool min_ok = cmp_min_eigenvalue(g, Rational(-3)) != std::strong_ordering::less;
  if (!t.require("theta_min >= -3", min_ok, min_ok ? "yes" : "theta_min < -3")) return t.finish();
  if (!t.require("k >= 120", k >= 120, "k = " + std::to_string(k))) return t.finish();
  if (conclude_grid(g, k, Rational(*ell), false, t)) return t.finish();
  violated(t, "hypotheses hold but g is not a grid with p+q = k+2, ell = k-2");
  return t.finish();
}

ClassificationVerdict verify_theorem_4_1(const Graph& g) {
  Trail t("T4.1");
  const auto base = check_base(g, t);
  if (!base) return t.finish();
  const int k = base->params.k;
  const auto ell = check_walk_and_ell(g, t);
  if (!ell) return t.finish();
  if (!t.require("ell = k-2", *ell == k - 2, "ell = " + std::to_string(*ell) + ", k-2 = " + std::to_string(k - 2)))
    return t.finish();
  const auto quad = has_induced_quadrangle(g);
  std::string wit;
  if (quad) wit = "(" + std::to_string((*quad)[0]) + "," + std::to_string((*quad)[1]) + "," +
                  std::to_string((*quad)[2]) + "," + std::to_string((*quad)[3]) + ")";
  if (!t.require("induced quadrangle", quad.has_value(), quad ? "found" : "none", wit)) return t.finish();
  const bool shrikhande = is_isomorphic(g, shrikhande_graph());
  t.note("Shrikhande", shrikhande, shrikhande ? "isomorphic" : "not isomorphic");
  if (shrikhande) {
    t.verdict().outcome = Outcome::Shrikhande;
    return t.finish();
  }
  if (conclude_grid(g, k, Rational(*ell), false, t)) return t.finish();
  violated(t, "hypotheses hold but g is neither Shrikhande nor a grid with p+q = k+2");
  return t.finish();
}

ClassificationVerdict check_nonexistence_windows(const Graph& g) {
  Trail t("T4.2+T4.3");
  const auto base = check_base(g, t);
  if (!base) return t.finish();
  const int k = base->params.k;
  const auto ell = strongly_co_edge_regular_ell(g);
  if (!t.require("strongly co-edge-regular", static_cast<bool>(ell),
                 ell ? "ell = " + std::to_string(*ell) : "no", ell ? "" : ell.witness.to_string()))
    return t.finish();
  t.verdict().combinatorial_ell = *ell;
  const Rational l(*ell);
  const Rational three_quarters_k = Rational(3 * k, 4);
  const bool quad = has_induced_quadrangle(g).has_value();
  const bool min_ok = cmp_min_eigenvalue(g, Rational(-3)) != std::strong_ordering::less;

  const bool window42 = three_quarters_k <= l && l <= k - 3;
  const bool bundle42 = quad && window42;
  const bool bundle43 = min_ok && k >= 120 && l < three_quarters_k;
  t.note("quadrangle and 3k/4 <= ell <= k-3", bundle42,
         std::string("quadrangle ") + (quad ? "present" : "absent") + ", ell = " + str(l) + ", window [" +
             str(three_quarters_k) + ", " + std::to_string(k - 3) + "]");
  t.note("theta_min >= -3, k >= 120, ell < 3k/4", bundle43,
         std::string("theta_min ") + (min_ok ? ">= -3" : "< -3") + ", k = " + std::to_string(k) + ", ell = " + str(l));
  if (bundle42 || bundle43) {
    violated(t, bundle42 ? "induced quadrangle with 3k/4 <= ell <= k-3" : "theta_min >= -3, k >= 120, ell < 3k/4");
    return t.finish();
  }
  t.verdict().outcome = Outcome::HypothesesNotMet;
  t.verdict().reasons.push_back(quad ? "ell outside [3k/4, k-3]" : "no induced quadrangle");
  t.verdict().reasons.push_back(!min_ok ? "theta_min < -3" : k < 120 ? "k < 120" : "ell >= 3k/4");
  return t.finish();
}

ClassificationVerdict classify(const Graph& g, const std::string& theorem) {
  if (theorem == "1.2") return classify_theorem_1_2(g);
  if (theorem == "1.3") return classify_theorem_1_3(g);
  if (theorem == "1.4") return classify_theorem_1_4(g);
  if (theorem == "4.1") return verify_theorem_4_1(g);
  if (theorem == "windows" || theorem == "4.2" || theorem == "4.3") return check_nonexistence_windows(g);
  throw Error("unknown theorem '" + theorem + "'");
}

}  // namespace coedge
