#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coedge/graph.hpp"
#include "coedge/polynomial.hpp"

namespace coedge {

enum class Outcome { Grid, TwoCliqueExtC5, Shrikhande, HypothesesNotMet, ConclusionViolated };

std::string to_string(Outcome o);

struct TrailEntry {
  std::string check;
  bool passed = false;
  std::string result;
  std::string witness;

  friend bool operator==(const TrailEntry&, const TrailEntry&) = default;
};

struct ClassificationVerdict {
  /// "T1.2i", "T1.2ii", "T1.2", "T1.3", "T1.4", "T4.1" or "T4.2+T4.3".
  std::string theorem;
  Outcome outcome = Outcome::HypothesesNotMet;
  int p = 0;
  int q = 0;
  std::vector<std::string> reasons;
  std::string evidence;
  std::vector<TrailEntry> trail;
  std::optional<Rational> spectral_ell;
  std::optional<int> combinatorial_ell;

  /// "Grid(7,4)", "HypothesesNotMet", ...
  std::string summary() const;
  /// 0 for a conclusion reached, 1 for unmet hypotheses, 2 for a violation.
  int exit_code() const;

  friend bool operator==(const ClassificationVerdict&, const ClassificationVerdict&) = default;
};

/// Co-edge-regular (n,k,2), four distinct eigenvalues, spectral ℓ.
ClassificationVerdict classify_theorem_1_2(const Graph& g);
/// Walk-regular, strongly co-edge-regular (n,k,2,ℓ), ℓ >= 3k/4.
ClassificationVerdict classify_theorem_1_3(const Graph& g);
/// Walk-regular, strongly co-edge-regular (n,k,2,ℓ), θ_min >= -3, k >= 120.
ClassificationVerdict classify_theorem_1_4(const Graph& g);
/// Walk-regular, strongly co-edge-regular (n,k,2,k-2) with an induced
/// quadrangle: Shrikhande or a grid with p+q = k+2.
ClassificationVerdict verify_theorem_4_1(const Graph& g);
/// Reports ConclusionViolated when g meets either nonexistence bundle:
/// quadrangle with 3k/4 <= ℓ <= k-3, or θ_min >= -3, k >= 120, ℓ < 3k/4.
ClassificationVerdict check_nonexistence_windows(const Graph& g);

/// Dispatch by name: "1.2", "1.3", "1.4", "4.1", "windows".
ClassificationVerdict classify(const Graph& g, const std::string& theorem);

}  // namespace coedge
