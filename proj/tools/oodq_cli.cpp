// Command-line front end; talks to the analyzer exclusively through the
// C API in oodq/oodq.h.

#include <oodq/oodq.h>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAnalysis = 1;
constexpr int kExitUsage = 2;

struct StringDeleter {
  void operator()(char* p) const { oodq_string_free(p); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct ProjectDeleter {
  void operator()(oodq_project* p) const { oodq_project_free(p); }
};
struct ReportDeleter {
  void operator()(oodq_report* r) const { oodq_report_free(r); }
};

int fail_analysis(const std::string& context) {
  std::cerr << "error: " << context << ": " << oodq_last_error() << "\n";
  return kExitAnalysis;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

bool write_file(const std::filesystem::path& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return out.good();
}

std::string safe_file_name(const std::string& class_name) {
  std::string out;
  for (char c : class_name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '_';
    out.push_back(ok ? c : '_');
  }
  return out;
}

std::unique_ptr<oodq_project, ProjectDeleter> open_project(const std::string& src,
                                                           const std::string& model,
                                                           const std::string& glob,
                                                           int& exit_code) {
  oodq_project* raw = nullptr;
  if (!src.empty()) {
    if (oodq_project_from_source(src.c_str(), glob.empty() ? nullptr : glob.c_str(),
                                 &raw) != OODQ_OK) {
      exit_code = fail_analysis("reading " + src);
      return nullptr;
    }
  } else {
    std::string text;
    if (!read_file(model, text)) {
      std::cerr << "error: cannot read model file " << model << "\n";
      exit_code = kExitAnalysis;
      return nullptr;
    }
    if (oodq_project_from_model_json(text.c_str(), &raw) != OODQ_OK) {
      exit_code = fail_analysis("loading " + model);
      return nullptr;
    }
  }
  exit_code = kExitOk;
  return std::unique_ptr<oodq_project, ProjectDeleter>(raw);
}

int run_analyze(const std::string& src, const std::string& model,
                const std::string& glob, const std::string& thresholds_path,
                const std::string& baseline_path, const std::string& out_dir,
                const std::string& formats, bool kiviat, bool scatter,
                bool fair_poor_only, bool no_short_circuit, bool unit_wmc) {
  int code = kExitOk;
  auto project = open_project(src, model, glob, code);
  if (!project) return code;

  ApiString diags;
  {
    char* raw = nullptr;
    if (oodq_project_diagnostics(project.get(), &raw) == OODQ_OK) diags.reset(raw);
  }
  if (diags && diags.get()[0]) std::cerr << diags.get();

  oodq_options options;
  oodq_options_init(&options);
  options.count_short_circuit = no_short_circuit ? 0 : 1;
  options.unit_wmc = unit_wmc ? 1 : 0;
  options.fair_poor_only = fair_poor_only ? 1 : 0;

  std::string thresholds_text;
  std::string resolved_thresholds = thresholds_path;
  if (resolved_thresholds.empty()) {
    const char* env = std::getenv("OODQ_THRESHOLDS");
    if (env && env[0]) resolved_thresholds = env;
  }
  if (!resolved_thresholds.empty()) {
    if (!read_file(resolved_thresholds, thresholds_text)) {
      std::cerr << "error: cannot read thresholds file " << resolved_thresholds << "\n";
      return kExitAnalysis;
    }
    options.thresholds_text = thresholds_text.c_str();
  }
  std::string baseline_text;
  if (!baseline_path.empty()) {
    if (!read_file(baseline_path, baseline_text)) {
      std::cerr << "error: cannot read baseline file " << baseline_path << "\n";
      return kExitAnalysis;
    }
    options.baseline_text = baseline_text.c_str();
  }

  oodq_report* raw_report = nullptr;
  if (oodq_analyze(project.get(), &options, &raw_report) != OODQ_OK)
    return fail_analysis("analysis");
  std::unique_ptr<oodq_report, ReportDeleter> report(raw_report);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create output directory " << out_dir << "\n";
    return kExitAnalysis;
  }
  std::filesystem::path out_base(out_dir);

  bool want_json = formats.find("json") != std::string::npos;
  bool want_csv = formats.find("csv") != std::string::npos;
  if (!want_json && !want_csv) {
    std::cerr << "error: --format must name json and/or csv\n";
    return kExitUsage;
  }
  if (want_json) {
    char* text = nullptr;
    if (oodq_report_json(report.get(), &text) != OODQ_OK)
      return fail_analysis("report.json");
    ApiString holder(text);
    if (!write_file(out_base / "report.json", text)) {
      std::cerr << "error: cannot write report.json\n";
      return kExitAnalysis;
    }
  }
  if (want_csv) {
    char* text = nullptr;
    if (oodq_report_csv(report.get(), &text) != OODQ_OK)
      return fail_analysis("report.csv");
    ApiString holder(text);
    if (!write_file(out_base / "report.csv", text)) {
      std::cerr << "error: cannot write report.csv\n";
      return kExitAnalysis;
    }
  }
  if (scatter) {
    char* svg = nullptr;
    if (oodq_report_scatter_svg(report.get(), &svg) != OODQ_OK)
      return fail_analysis("scatter.svg");
    ApiString svg_holder(svg);
    char* csv = nullptr;
    if (oodq_report_scatter_csv(report.get(), &csv) != OODQ_OK)
      return fail_analysis("scatter.csv");
    ApiString csv_holder(csv);
    if (!write_file(out_base / "scatter.svg", svg) ||
        !write_file(out_base / "scatter.csv", csv)) {
      std::cerr << "error: cannot write scatter outputs\n";
      return kExitAnalysis;
    }
  }
  if (kiviat) {
    std::filesystem::create_directories(out_base / "kiviat", ec);
    int count = oodq_report_class_count(report.get());
    for (int i = 0; i < count; ++i) {
      char* name = nullptr;
      if (oodq_report_class_name(report.get(), i, &name) != OODQ_OK)
        return fail_analysis("class name");
      ApiString name_holder(name);
      char* svg = nullptr;
      if (oodq_report_kiviat_svg(report.get(), name, &svg) != OODQ_OK)
        return fail_analysis(std::string("kiviat for ") + name);
      ApiString svg_holder(svg);
      auto file = out_base / "kiviat" / (safe_file_name(name) + ".svg");
      if (!write_file(file, svg)) {
        std::cerr << "error: cannot write " << file << "\n";
        return kExitAnalysis;
      }
    }
  }
  return kExitOk;
}

int run_cohesion(const std::string& model_path, int min_overlap) {
  std::string text;
  if (!read_file(model_path, text)) {
    std::cerr << "error: cannot read " << model_path << "\n";
    return kExitAnalysis;
  }
  bool yaml = model_path.size() > 5 && model_path.rfind(".yaml") == model_path.size() - 5;
  yaml = yaml ||
         (model_path.size() > 4 && model_path.rfind(".yml") == model_path.size() - 4);
  char* out = nullptr;
  if (oodq_cohesion_json(text.c_str(), yaml ? 1 : 0, min_overlap, &out) != OODQ_OK)
    return fail_analysis("cohesion analysis");
  ApiString holder(out);
  std::cout << out;
  return kExitOk;
}

int run_emit_model(const std::string& src, const std::string& glob) {
  int code = kExitOk;
  auto project = open_project(src, "", glob, code);
  if (!project) return code;
  ApiString diags;
  {
    char* raw = nullptr;
    if (oodq_project_diagnostics(project.get(), &raw) == OODQ_OK) diags.reset(raw);
  }
  if (diags && diags.get()[0]) std::cerr << diags.get();
  char* out = nullptr;
  if (oodq_project_model_json(project.get(), &out) != OODQ_OK)
    return fail_analysis("model emission");
  ApiString holder(out);
  std::cout << out;
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"object-oriented design quality analyzer"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "analyze a source tree or model");
  std::string src, model, glob, thresholds, baseline, out_dir = "oodq-out";
  std::string formats = "json";
  bool kiviat = false, scatter = false, fair_poor_only = false;
  bool no_short_circuit = false, unit_wmc = false;
  analyze->add_option("--src", src, "source tree root");
  analyze->add_option("--model", model, "class-model interchange file");
  analyze->add_option("--glob", glob, "source file glob (default *.java)");
  analyze->add_option("--thresholds", thresholds,
                      "bounds file (falls back to $OODQ_THRESHOLDS, then defaults)");
  analyze->add_option("--baseline", baseline, "property baseline divisors");
  analyze->add_option("--out", out_dir, "output directory (default oodq-out)");
  analyze->add_option("--format", formats, "comma list: json,csv (default json)");
  analyze->add_flag("--kiviat", kiviat, "emit per-class Kiviat SVGs");
  analyze->add_flag("--scatter", scatter, "emit the v/ev scatter plot and CSV");
  analyze->add_flag("--fair-poor-only", fair_poor_only,
                    "rank only FAIR and POOR classes");
  analyze->add_flag("--no-short-circuit", no_short_circuit,
                    "do not count && || ?: as decisions");
  analyze->add_flag("--unit-wmc", unit_wmc, "CK WMC counts methods instead of v(G)");

  // cohesion
  auto* cohesion = app.add_subcommand("cohesion", "use-case cohesion and coupling");
  std::string cohesion_model;
  int min_overlap = 1;
  cohesion->add_option("--model", cohesion_model, "use-case document (JSON or YAML)")
      ->required();
  cohesion->add_option("--min-overlap", min_overlap,
                       "shared messages needed for similarity (default 1)");

  // emit-model
  auto* emit = app.add_subcommand("emit-model", "dump the class-model interchange JSON");
  std::string emit_src, emit_glob;
  emit->add_option("--src", emit_src, "source tree root")->required();
  emit->add_option("--glob", emit_glob, "source file glob (default *.java)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      app.exit(e);
      return kExitOk;
    }
    std::cerr << e.what() << "\n" << app.help() << "\n";
    return kExitUsage;
  }

  if (analyze->parsed()) {
    if (src.empty() == model.empty()) { // exactly one input is required
      std::cerr << "error: provide exactly one of --src or --model\n"
                << analyze->help() << "\n";
      return kExitUsage;
    }
    return run_analyze(src, model, glob, thresholds, baseline, out_dir, formats, kiviat,
                       scatter, fair_poor_only, no_short_circuit, unit_wmc);
  }
  if (cohesion->parsed()) return run_cohesion(cohesion_model, min_overlap);
  if (emit->parsed()) return run_emit_model(emit_src, emit_glob);
  return kExitUsage;
}
