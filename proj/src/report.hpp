#pragma once

#include "app_metrics.hpp"
#include "class_metrics.hpp"
#include "complexity.hpp"
#include "rollup.hpp"
#include "system_metrics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oodq {

struct ClassReport {
  std::string qualified_name;
  ClassMetricVector metrics;
  CKVector ck;
  QmoodClassMetrics qmood;
  FactorResult factor;
};

struct MethodReport {
  std::string method_id; // <class>#<signature>
  std::string class_name;
  MethodComplexity complexity;
  ScatterQuadrant quadrant = ScatterQuadrant::ReliableMaintainable;
};

struct QualityReport {
  std::string project_name;
  ApplicationMetrics application;
  std::vector<ClassReport> classes;  // lexicographic by qualified name
  std::vector<MethodReport> methods; // class order, declaration order within
  MOODVector mood;
  QmoodDesignProperties properties;
  QualityIndices indices;
  std::vector<RankedClass> ranking;
  std::optional<CategoryDistribution> distribution; // absent for empty projects
  bool fair_poor_only = false;
  std::vector<std::string> diagnostics;
};

// Stable JSON: schema version field, sorted keys, full-precision
// numbers; byte-identical across runs on equal reports.
std::string report_json(const QualityReport& report);

// One row per class, RFC-4180 quoting, ratios to two decimals.
std::string report_csv(const QualityReport& report);

// Scatter companion table: method_id,v,ev,iv,quadrant.
std::string scatter_csv(const QualityReport& report);

} // namespace oodq
