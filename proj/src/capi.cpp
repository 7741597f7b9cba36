#include "oodq/oodq.h"

#include "analyzer.hpp"
#include "errors.hpp"
#include "model_json.hpp"
#include "parser.hpp"
#include "report.hpp"
#include "rollup.hpp"
#include "svg.hpp"
#include "usecase.hpp"

#include <cstring>
#include <new>
#include <sstream>
#include <string>

using namespace oodq;

struct oodq_project {
  ProjectModel model;
  std::vector<ParseDiagnostic> diagnostics;
};

struct oodq_report {
  QualityReport report;
  std::vector<ThresholdBound> bounds;
};

namespace {

thread_local std::string g_last_error;

oodq_status status_of(const AnalysisError& e) {
  switch (e.code()) {
  case ErrorCode::IoFailure: return OODQ_ERR_IO;
  case ErrorCode::SchemaViolation: return OODQ_ERR_PARSE;
  case ErrorCode::DuplicateClassName:
  case ErrorCode::CyclicInheritance: return OODQ_ERR_MODEL;
  case ErrorCode::UsageError: return OODQ_ERR_ARGUMENT;
  default: return OODQ_ERR_ANALYSIS;
  }
}

char* dup_string(const std::string& text) {
  char* out = new (std::nothrow) char[text.size() + 1];
  if (!out) return nullptr;
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

oodq_status give(const std::string& text, char** out) {
  char* copy = dup_string(text);
  if (!copy) {
    g_last_error = "out of memory";
    return OODQ_ERR_ANALYSIS;
  }
  *out = copy;
  return OODQ_OK;
}

template <typename Fn> oodq_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const AnalysisError& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return OODQ_ERR_ANALYSIS;
  }
}

// Baseline file: `property value` per line, # comments. Values must be
// non-negative; unknown property names are rejected.
std::map<std::string, double> parse_baseline(const std::string& text) {
  std::map<std::string, double> baseline;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string name;
    if (!(fields >> name)) continue;
    double value = 0;
    if (!(fields >> value))
      fail(ErrorCode::SchemaViolation,
           "baseline line " + std::to_string(line_no) + ": expected 'property value'");
    bool known = false;
    for (const std::string& candidate : QmoodDesignProperties::property_names())
      known = known || candidate == name;
    if (!known)
      fail(ErrorCode::SchemaViolation,
           "baseline line " + std::to_string(line_no) + ": unknown property " + name);
    if (value < 0)
      fail(ErrorCode::SchemaViolation,
           "baseline line " + std::to_string(line_no) + ": negative divisor");
    baseline[name] = value;
  }
  return baseline;
}

} // namespace

extern "C" {

const char* oodq_last_error(void) { return g_last_error.c_str(); }

oodq_status oodq_project_from_source(const char* root, const char* extension_glob,
                                     oodq_project** out) {
  if (!root || !out) {
    g_last_error = "null argument";
    return OODQ_ERR_ARGUMENT;
  }
  return guarded([&] {
    SourceTreeResult result =
        parse_source_tree(root, extension_glob ? extension_glob : "*.java");
    auto* project = new oodq_project{std::move(result.project),
                                     std::move(result.diagnostics)};
    *out = project;
    return OODQ_OK;
  });
}

oodq_status oodq_project_from_model_json(const char* text, oodq_project** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return OODQ_ERR_ARGUMENT;
  }
  return guarded([&] {
    auto* project = new oodq_project{load_model_json(text), {}};
    *out = project;
    return OODQ_OK;
  });
}

void oodq_project_free(oodq_project* project) { delete project; }

int oodq_project_class_count(const oodq_project* project) {
  return project ? static_cast<int>(project->model.classes.size()) : 0;
}

oodq_status oodq_project_model_json(const oodq_project* project, char** out) {
  if (!project || !out) {
    g_last_error = "null argument";
    return OODQ_ERR_ARGUMENT;
  }
  return guarded([&] { return give(emit_model_json(project->model), out); });
}

oodq_status oodq_project_diagnostics(const oodq_project* project, char** out) {
  if (!project || !out) {
    g_last_error = "null argument";
    return OODQ_ERR_ARGUMENT;
  }
  std::string text;
  for (const ParseDiagnostic& d : project->diagnostics) {
    text += d.severity == ParseDiagnostic::Severity::Error ? "error: " : "warning: ";
    text += d.path + ":" + std::to_string(d.line) + ": " + d.message + "\n";
  }
  return give(text, out);
}

void oodq_options_init(oodq_options* options) {
  if (!options) return;
  options->count_short_circuit = 1;
  options->unit_wmc = 0;
  options->lcom_static_attrs = 0;
  options->fair_poor_only = 0;
  options->thresholds_text = nullptr;
  options->baseline_text = nullptr;
}

oodq_status oodq_analyze(const oodq_project* project, const oodq_options* options,
                         oodq_report** out) {
  if (!project || !out) {
    g_last_error = "null argument";
    return OODQ_ERR_ARGUMENT;
  }
  return guarded([&] {
    AnalyzeOptions opts;
    if (options) {
      opts.cfg.count_short_circuit = options->count_short_circuit != 0;
      opts.class_metrics.unit_wmc = options->unit_wmc != 0;
      opts.class_metrics.lcom_static_attrs = options->lcom_static_attrs != 0;
      opts.fair_poor_only = options->fair_poor_only != 0;
      if (options->thresholds_text) opts.bounds = parse_bounds(options->thresholds_text);
      if (options->baseline_text) opts.baseline = parse_baseline(options->baseline_text);
    }
    QualityReport qr = analyze_project(project->model, opts, project->diagnostics);
    *out = new oodq_report{std::move(qr), std::move(opts.bounds)};
    return OODQ_OK;
  });
}

void oodq_report_free(oodq_report* report) { delete report; }

oodq_status oodq_report_json(const oodq_report* report, char** out) {
  if (!report || !out) {
    g_last_error = "null argument";
    return OODQ_ERR_ARGUMENT;
  }
  return guarded([&] { return give(report_json(report->report), out); });
}

oodq_status oodq_report_csv(const oodq_report* report, char** out) {
  if (!report || !out) {
    g_last_error = "null argument";
    return OODQ_ERR_ARGUMENT;
  }
  return guarded([&] { return give(report_csv(report->report), out); });
}

oodq_status oodq_report_scatter_svg(const oodq_report* report, char** out) {
  if (!report || !out) {
    g_last_error = "null argument";
    return OODQ_ERR_ARGUMENT;
  }
  return guarded([&] { return give(emit_scatter_svg(report->report.methods), out); });
}

oodq_status oodq_report_scatter_csv(const oodq_report* report, char** out) {
  if (!report || !out) {
    g_last_error = "null argument";
    return OODQ_ERR_ARGUMENT;
  }
  return guarded([&] { return give(scatter_csv(report->report), out); });
}

int oodq_report_class_count(const oodq_report* report) {
  return report ? static_cast<int>(report->report.classes.size()) : 0;
}

oodq_status oodq_report_class_name(const oodq_report* report, int index, char** out) {
  if (!report || !out) {
    g_last_error = "null argument";
    return OODQ_ERR_ARGUMENT;
  }
  if (index < 0 || index >= static_cast<int>(report->report.classes.size())) {
    g_last_error = "class index out of range";
    return OODQ_ERR_ARGUMENT;
  }
  return give(report->report.classes[static_cast<std::size_t>(index)].qualified_name, out);
}

oodq_status oodq_report_kiviat_svg(const oodq_report* report, const char* class_name,
                                   char** out) {
  if (!report || !class_name || !out) {
    g_last_error = "null argument";
    return OODQ_ERR_ARGUMENT;
  }
  return guarded([&] {
    for (const ClassReport& cr : report->report.classes) {
      if (cr.qualified_name == class_name)
        return give(emit_kiviat(cr.qualified_name, cr.metrics, report->bounds), out);
    }
    g_last_error = std::string("unknown class ") + class_name;
    return OODQ_ERR_ARGUMENT;
  });
}

oodq_status oodq_cohesion_json(const char* document_text, int is_yaml, int min_overlap,
                               char** out) {
  if (!document_text || !out) {
    g_last_error = "null argument";
    return OODQ_ERR_ARGUMENT;
  }
  if (min_overlap < 1) {
    g_last_error = "min_overlap must be at least 1";
    return OODQ_ERR_ARGUMENT;
  }
  return guarded([&] {
    UseCaseModel model = load_use_case_model(document_text, is_yaml != 0);
    return give(cohesion_report_json(model, min_overlap), out);
  });
}

void oodq_string_free(char* text) { delete[] text; }

} // extern "C"
