#include "analyzer.hpp"

#include "app_metrics.hpp"
#include "complexity.hpp"
#include "errors.hpp"
#include "system_metrics.hpp"

#include <algorithm>
#include <numeric>

namespace oodq {

QualityReport analyze_project(const ProjectModel& project, const AnalyzeOptions& options,
                              const std::vector<ParseDiagnostic>& parse_diagnostics) {
  QualityReport report;
  report.project_name = project.name;
  report.fair_poor_only = options.fair_poor_only;
  for (const ParseDiagnostic& d : parse_diagnostics) {
    std::string severity = d.severity == ParseDiagnostic::Severity::Error ? "error" : "warning";
    report.diagnostics.push_back(severity + ": " + d.path + ":" +
                                 std::to_string(d.line) + ": " + d.message);
  }

  std::vector<int> order(project.classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return project.classes[static_cast<std::size_t>(a)].qualified_name <
           project.classes[static_cast<std::size_t>(b)].qualified_name;
  });

  // Per-method complexities first; everything downstream reads the map.
  std::map<std::string, int> v_of;
  for (int idx : order) {
    const ClassModel& cls = project.classes[static_cast<std::size_t>(idx)];
    for (const MethodModel& method : cls.methods) {
      if (!method.body) continue;
      std::string key = method_key(cls, method);
      try {
        std::vector<std::string> warnings;
        ControlFlowGraph cfg = build_cfg(*method.body, options.cfg, &warnings);
        for (const std::string& w : warnings)
          report.diagnostics.push_back("warning: " + key + ": " + w);
        MethodReport mr;
        mr.method_id = key;
        mr.class_name = cls.qualified_name;
        mr.complexity.method_id = key;
        mr.complexity.v = cyclomatic(cfg);
        mr.complexity.ev = essential(cfg);
        mr.complexity.iv = design_complexity(cfg, method, project);
        mr.quadrant = scatter_quadrant(mr.complexity.v, mr.complexity.ev);
        v_of[key] = mr.complexity.v;
        report.methods.push_back(std::move(mr));
      } catch (const AnalysisError& e) {
        report.diagnostics.push_back("error: " + key + ": " + e.what() +
                                     " (method skipped)");
      }
    }
  }

  ReferenceIndex refs(project);
  std::vector<QmoodClassMetrics> qmood_per_class;
  std::vector<RankedClass> ranked;
  std::vector<Category> categories;
  for (int idx : order) {
    const ClassModel& cls = project.classes[static_cast<std::size_t>(idx)];
    ClassReport cr;
    cr.qualified_name = cls.qualified_name;
    cr.metrics = class_metrics(project, idx, refs, v_of);
    cr.ck = ck_metrics(project, idx, refs, v_of, options.class_metrics);
    cr.qmood = qmood_class_metrics(project, idx);
    cr.factor = factor_result(cr.metrics, options.bounds);
    qmood_per_class.push_back(cr.qmood);
    ranked.push_back({cls.qualified_name, cr.factor.rank, cr.factor.category});
    categories.push_back(cr.factor.category);
    report.classes.push_back(std::move(cr));
  }

  report.application = application_metrics(project, v_of);
  if (!project.classes.empty()) {
    report.mood = mood_metrics(project, refs);
    report.distribution = category_distribution(categories);
  }
  std::vector<std::string> property_diags;
  report.properties = qmood_properties(
      project, qmood_per_class, options.baseline ? &*options.baseline : nullptr,
      &property_diags);
  for (const std::string& d : property_diags)
    report.diagnostics.push_back("warning: " + d);
  report.indices = quality_indices(report.properties);
  report.ranking = rank_classes(ranked, options.fair_poor_only);
  return report;
}

} // namespace oodq
