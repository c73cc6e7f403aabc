#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coedge/pipeline.hpp"
#include "coedge/regularity.hpp"
#include "coedge/spectrum.hpp"
#include "coedge/subgraph.hpp"

namespace coedge {

inline constexpr int kReportSchemaVersion = 1;

/// Exact rational as "p" or "p/q".
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const RegularityReport& r);
nlohmann::json to_json(const MomentReport& m);
nlohmann::json to_json(const Spectrum& s);
nlohmann::json to_json(const ClassificationVerdict& v);
nlohmann::json to_json(const ForbiddenHit& h);

/// Inverse of to_json(Spectrum).
Spectrum spectrum_from_json(const nlohmann::json& j);
/// Inverse of to_json(ClassificationVerdict).
ClassificationVerdict verdict_from_json(const nlohmann::json& j);

/// FNV-1a of the canonical graph6 string, hex.
std::string canonical_hash(const Graph& g);

struct ReportDocument {
  int schema_version = kReportSchemaVersion;
  std::string source;
  std::string format;
  std::string canonical_hash;
  std::optional<nlohmann::json> regularity;
  std::optional<nlohmann::json> spectrum;
  std::vector<nlohmann::json> verdicts;
  std::vector<nlohmann::json> witnesses;

  nlohmann::json to_json() const;
  static ReportDocument from_json(const nlohmann::json& j);

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

}  // namespace coedge
