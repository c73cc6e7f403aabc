#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "coedge/canonical.hpp"
#include "coedge/graph.hpp"

namespace coedge {

struct GridRecognition {
  int p = 0;
  int q = 0;  // p >= q
  /// iso[v] is the vertex of grid_graph(p, q) matched to v.
  std::vector<int> isomorphism;
};

/// Recognises the p×q grid (p >= q >= 2) through its two clique families.
std::optional<GridRecognition> recognize_grid(const Graph& g);

struct CliqueExtensionRecognition {
  /// 1 when the closed-neighbourhood classes are singletons or of mixed size.
  int s = 1;
  Graph quotient;
  /// class_of[v] is the quotient vertex containing v.
  std::vector<int> class_of;
  std::string note;
};

/// Groups vertices by closed neighbourhood. Throws Error on complete input.
CliqueExtensionRecognition recognize_clique_extension(const Graph& g);

enum class TerwilligerVerdict {
  HasQuadrangle,
  TwoCliqueExtensionOfPentagon,
  TwoCliqueExtensionOfPetersen,
  /// ℓ < 2k/7, where the trichotomy is not claimed.
  OutsideScope,
  /// No quadrangle, ℓ >= 2k/7, and neither named extension.
  Unclassified,
};

std::string to_string(TerwilligerVerdict v);

struct TerwilligerStructure {
  TerwilligerVerdict verdict = TerwilligerVerdict::Unclassified;
  std::optional<std::array<int, 4>> quadrangle;
  int ell = 0;
  int k = 0;
};

/// Requires a strongly co-edge-regular graph with c = 2; throws otherwise.
TerwilligerStructure terwilliger_structure(const Graph& g);

}  // namespace coedge
