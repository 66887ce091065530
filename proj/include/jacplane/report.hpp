#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "jacplane/atlas.hpp"
#include "jacplane/classify.hpp"

namespace jacplane {

// Everything the CLI emits for one curve.
struct AnalysisReport {
  CurveAnalysis analysis;
  ClassLabel label;
  std::optional<DpwReport> dpw;        // absent when r == 0 or degenerate
  std::optional<SplittingType> split;  // absent when r == 0
  std::vector<CheckResult> checks;
  std::optional<RccReport> rcc;
  std::optional<i64> mu_hint;
  bool irreducible_hint = false;
  u64 seed = kDefaultSeed;
  double wall_ms = 0.0;

  bool any_check_failed() const;
};

AnalysisReport build_report(const HomogPoly& f, const AnalyzeOptions& opts,
                            std::optional<i64> mu_hint = std::nullopt,
                            bool irreducible_hint = false);

nlohmann::json report_to_json(const AnalysisReport& r,
                              bool include_timing = false);

// Rebuilds the analysis core from JSON (round-trip support).
AnalysisReport report_from_json(const nlohmann::json& j);

std::string report_to_table(const AnalysisReport& r);

// The JSON schema the reports validate against (also shipped under schema/).
const char* report_schema_text();

}  // namespace jacplane
