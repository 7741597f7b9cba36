#pragma once

#include "class_metrics.hpp"

#include <limits>
#include <map>
#include <string>
#include <vector>

namespace oodq {

struct ThresholdBound {
  std::string metric_name;
  double min = -std::numeric_limits<double>::infinity();
  double max = std::numeric_limits<double>::infinity();
};

struct MetricStatus {
  std::string metric_name;
  double value = 0;
  int status = 0; // 0 in range, -1 out of range
};

enum class Category { Excellent, Good, Fair, Poor };

const char* category_name(Category c);

struct CriterionResult {
  std::string name; // ANALYZABILITY, CHANGEABILITY, STABILITY, TESTABILITY
  std::vector<MetricStatus> component_statuses;
  int out_count = 0;
  Category category = Category::Excellent;
};

struct FactorResult {
  std::vector<CriterionResult> criteria; // the four, fixed order
  std::vector<MetricStatus> metric_statuses; // all 13, table order
  int rank = 0; // -1 count over the 13 metrics
  Category category = Category::Excellent;
};

// Shipped defaults: the thirteen class-metric bounds.
const std::vector<ThresholdBound>& default_bounds();

// Text of the shipped bounds file (identical to data/default_thresholds.tsv).
const char* default_bounds_text();

// Parses a bounds table: `metric<ws>min<ws>max` lines, `inf` / `-inf`
// literals, `#` comments. Unknown metrics are accepted (custom setups);
// malformed lines raise AnalysisError{SchemaViolation}.
std::vector<ThresholdBound> parse_bounds(const std::string& text);

// Component metrics per criterion.
const std::map<std::string, std::vector<std::string>>& criterion_components();

// status 0 iff min <= value <= max (inclusive).
MetricStatus evaluate_status(const std::string& metric_name, double value,
                             const ThresholdBound& bound);

// out_count and category: 0 -> Excellent, 1 -> Good, 2 -> Fair, >=3 -> Poor.
CriterionResult criterion_result(std::string name, std::vector<MetricStatus> statuses);

// Evaluates all 13 metrics plus the four criteria; rank is the total
// -1 count. Factor category from summed criterion scores (E=0 G=1 F=2
// P=3): 0 Excellent, 1-2 Good, 3-5 Fair, >=6 Poor. Throws
// AnalysisError{MissingBound} when a metric has no bound.
FactorResult factor_result(const ClassMetricVector& vector,
                           const std::vector<ThresholdBound>& bounds);

struct RankedClass {
  std::string qualified_name;
  int rank = 0;
  Category category = Category::Excellent;
};

// Descending by rank, ties lexicographic by name; optionally only the
// Fair/Poor classes.
std::vector<RankedClass> rank_classes(const std::vector<RankedClass>& classes,
                                      bool fair_poor_only = false);

struct CategoryDistribution {
  int excellent = 0, good = 0, fair = 0, poor = 0; // integer percentages
  bool rounding_gap = false; // percentages do not sum to exactly 100
};

// Percentages rounded half-up. Throws AnalysisError{EmptyProject} for
// an empty input.
CategoryDistribution category_distribution(const std::vector<Category>& categories);

} // namespace oodq
