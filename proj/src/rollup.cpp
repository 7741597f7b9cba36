#include "rollup.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace oodq {

const char* category_name(Category c) {
  switch (c) {
  case Category::Excellent: return "EXCELLENT";
  case Category::Good: return "GOOD";
  case Category::Fair: return "FAIR";
  case Category::Poor: return "POOR";
  }
  return "EXCELLENT";
}

// Bounds as in the shipped data/default_thresholds.tsv.
const char* default_bounds_text() {
  return "# Default class-metric bounds (min/max, inclusive).\n"
         "# inf and -inf mark unbounded sides.\n"
         "cl_comf\t0.20\tinf\n"
         "cl_comm\t-inf\tinf\n"
         "cl_data\t0\t7\n"
         "cl_data_publ\t0\t0\n"
         "cl_func\t0\t25\n"
         "cl_func_publ\t0\t15\n"
         "cl_line\t-inf\tinf\n"
         "cl_stat\t0\t100\n"
         "cl_wmc\t0\t60\n"
         "cu_cdused\t0\t10\n"
         "cu_cdusers\t0\t5\n"
         "in_bases\t0\t3\n"
         "in_noc\t0\t3\n";
}

std::vector<ThresholdBound> parse_bounds(const std::string& text) {
  std::vector<ThresholdBound> bounds;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto parse_limit = [&](const std::string& token) -> double {
    if (token == "inf" || token == "+inf") return std::numeric_limits<double>::infinity();
    if (token == "-inf") return -std::numeric_limits<double>::infinity();
    try {
      std::size_t used = 0;
      double value = std::stod(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      return value;
    } catch (const std::exception&) {
      fail(ErrorCode::SchemaViolation,
           "bounds line " + std::to_string(line_no) + ": bad limit '" + token + "'");
    }
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = line;
    auto hash = trimmed.find('#');
    if (hash != std::string::npos) trimmed.resize(hash);
    std::istringstream fields(trimmed);
    std::string name, min_tok, max_tok;
    if (!(fields >> name)) continue; // blank or comment
    if (!(fields >> min_tok >> max_tok))
      fail(ErrorCode::SchemaViolation,
           "bounds line " + std::to_string(line_no) + ": expected 'metric min max'");
    std::string extra;
    if (fields >> extra)
      fail(ErrorCode::SchemaViolation,
           "bounds line " + std::to_string(line_no) + ": trailing content '" + extra + "'");
    ThresholdBound b;
    b.metric_name = name;
    b.min = parse_limit(min_tok);
    b.max = parse_limit(max_tok);
    if (b.min > b.max)
      fail(ErrorCode::SchemaViolation,
           "bounds line " + std::to_string(line_no) + ": min exceeds max");
    bounds.push_back(std::move(b));
  }
  return bounds;
}

const std::vector<ThresholdBound>& default_bounds() {
  static const std::vector<ThresholdBound> bounds = parse_bounds(default_bounds_text());
  return bounds;
}

const std::map<std::string, std::vector<std::string>>& criterion_components() {
  static const std::map<std::string, std::vector<std::string>> components{
      {"ANALYZABILITY", {"cl_wmc", "cl_comf", "in_bases", "cu_cdused"}},
      {"CHANGEABILITY", {"cl_stat", "cl_func", "cl_data"}},
      {"STABILITY", {"cl_data_publ", "cu_cdusers", "in_noc", "cl_func_publ"}},
      {"TESTABILITY", {"cl_wmc", "cl_func", "cu_cdused"}},
  };
  return components;
}

MetricStatus evaluate_status(const std::string& metric_name, double value,
                             const ThresholdBound& bound) {
  MetricStatus s;
  s.metric_name = metric_name;
  s.value = value;
  s.status = (value >= bound.min && value <= bound.max) ? 0 : -1;
  return s;
}

namespace {

Category category_from_out_count(int out_count) {
  if (out_count <= 0) return Category::Excellent;
  if (out_count == 1) return Category::Good;
  if (out_count == 2) return Category::Fair;
  return Category::Poor;
}

int category_score(Category c) {
  switch (c) {
  case Category::Excellent: return 0;
  case Category::Good: return 1;
  case Category::Fair: return 2;
  case Category::Poor: return 3;
  }
  return 0;
}

const ThresholdBound& find_bound(const std::vector<ThresholdBound>& bounds,
                                 const std::string& metric_name) {
  for (const ThresholdBound& b : bounds)
    if (b.metric_name == metric_name) return b;
  fail(ErrorCode::MissingBound, "no bound configured for metric " + metric_name);
}

} // namespace

CriterionResult criterion_result(std::string name, std::vector<MetricStatus> statuses) {
  CriterionResult r;
  r.name = std::move(name);
  r.component_statuses = std::move(statuses);
  for (const MetricStatus& s : r.component_statuses) r.out_count += s.status == -1 ? 1 : 0;
  r.category = category_from_out_count(r.out_count);
  return r;
}

FactorResult factor_result(const ClassMetricVector& vector,
                           const std::vector<ThresholdBound>& bounds) {
  FactorResult f;
  for (const std::string& metric : ClassMetricVector::metric_names()) {
    const ThresholdBound& bound = find_bound(bounds, metric);
    MetricStatus status = evaluate_status(metric, vector.value_of(metric), bound);
    f.rank += status.status == -1 ? 1 : 0;
    f.metric_statuses.push_back(std::move(status));
  }
  int score_sum = 0;
  static const std::vector<std::string> order{"ANALYZABILITY", "CHANGEABILITY",
                                              "STABILITY", "TESTABILITY"};
  for (const std::string& criterion : order) {
    std::vector<MetricStatus> parts;
    for (const std::string& metric : criterion_components().at(criterion)) {
      const ThresholdBound& bound = find_bound(bounds, metric);
      parts.push_back(evaluate_status(metric, vector.value_of(metric), bound));
    }
    CriterionResult r = criterion_result(criterion, std::move(parts));
    score_sum += category_score(r.category);
    f.criteria.push_back(std::move(r));
  }
  if (score_sum == 0) f.category = Category::Excellent;
  else if (score_sum <= 2) f.category = Category::Good;
  else if (score_sum <= 5) f.category = Category::Fair;
  else f.category = Category::Poor;
  return f;
}

std::vector<RankedClass> rank_classes(const std::vector<RankedClass>& classes,
                                      bool fair_poor_only) {
  std::vector<RankedClass> out;
  for (const RankedClass& c : classes) {
    if (fair_poor_only && c.category != Category::Fair && c.category != Category::Poor)
      continue;
    out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const RankedClass& a, const RankedClass& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    return a.qualified_name < b.qualified_name;
  });
  return out;
}

CategoryDistribution category_distribution(const std::vector<Category>& categories) {
  if (categories.empty()) fail(ErrorCode::EmptyProject, "no classes to categorize");
  long counts[4] = {0, 0, 0, 0};
  for (Category c : categories) counts[category_score(c)]++;
  const double total = static_cast<double>(categories.size());
  auto pct = [&](long count) {
    return static_cast<int>(std::floor(100.0 * static_cast<double>(count) / total + 0.5));
  };
  CategoryDistribution d;
  d.excellent = pct(counts[0]);
  d.good = pct(counts[1]);
  d.fair = pct(counts[2]);
  d.poor = pct(counts[3]);
  d.rounding_gap = d.excellent + d.good + d.fair + d.poor != 100;
  return d;
}

} // namespace oodq
