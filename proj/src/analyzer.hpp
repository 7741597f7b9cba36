#pragma once

#include "cfg.hpp"
#include "class_metrics.hpp"
#include "parser.hpp"
#include "report.hpp"
#include "rollup.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oodq {

struct AnalyzeOptions {
  CfgOptions cfg;
  ClassMetricsOptions class_metrics;
  std::vector<ThresholdBound> bounds = default_bounds();
  std::optional<std::map<std::string, double>> baseline;
  bool fair_poor_only = false;
};

// Runs the whole metric pipeline over a resolved project. Methods whose
// bodies cannot be lowered are skipped with a diagnostic; everything
// else lands in the report deterministically (classes lexicographic,
// methods in declaration order).
QualityReport analyze_project(const ProjectModel& project,
                              const AnalyzeOptions& options = {},
                              const std::vector<ParseDiagnostic>& parse_diagnostics = {});

} // namespace oodq
