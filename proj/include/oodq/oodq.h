/* oodq — object-oriented design quality analyzer, C API.
 *
 * All functions returning oodq_status give OODQ_OK on success; on any
 * failure the out-parameters are untouched and oodq_last_error() holds
 * a thread-local message. Strings returned through char** out-params
 * are heap-allocated; release them with oodq_string_free().
 */
#ifndef OODQ_H
#define OODQ_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct oodq_project oodq_project;
typedef struct oodq_report oodq_report;

typedef enum oodq_status {
  OODQ_OK = 0,
  OODQ_ERR_IO = 1,       /* missing/unreadable inputs */
  OODQ_ERR_PARSE = 2,    /* malformed documents, schema violations */
  OODQ_ERR_MODEL = 3,    /* duplicate class names, inheritance cycles */
  OODQ_ERR_ANALYSIS = 4, /* domain errors, missing bounds, empty project */
  OODQ_ERR_ARGUMENT = 5  /* null or invalid arguments */
} oodq_status;

/* Message for the most recent failure on this thread ("" when none). */
const char* oodq_last_error(void);

/* ---- project construction ---- */

/* Parses every file under `root` matching `extension_glob` (defaults to
 * "*.java" when null) and resolves the class model. Parse problems are
 * collected as diagnostics, not failures. */
oodq_status oodq_project_from_source(const char* root, const char* extension_glob,
                                     oodq_project** out);

/* Loads the neutral class-model interchange document. */
oodq_status oodq_project_from_model_json(const char* text, oodq_project** out);

void oodq_project_free(oodq_project* project);

int oodq_project_class_count(const oodq_project* project);

/* Interchange document for the project (stable across runs). */
oodq_status oodq_project_model_json(const oodq_project* project, char** out);

/* Newline-separated parse diagnostics; empty string when clean. */
oodq_status oodq_project_diagnostics(const oodq_project* project, char** out);

/* ---- analysis ---- */

typedef struct oodq_options {
  int count_short_circuit; /* 1: && || ?: add decisions (default) */
  int unit_wmc;            /* 1: CK WMC counts methods, not summed v(G) */
  int lcom_static_attrs;   /* 1: static attributes count as shared state */
  int fair_poor_only;      /* 1: ranking keeps only FAIR/POOR classes */
  const char* thresholds_text; /* bounds table text; null for defaults */
  const char* baseline_text;   /* property baseline text; null for none */
} oodq_options;

/* Fills an options struct with the defaults described above. */
void oodq_options_init(oodq_options* options);

oodq_status oodq_analyze(const oodq_project* project, const oodq_options* options,
                         oodq_report** out);

void oodq_report_free(oodq_report* report);

/* ---- report emission ---- */

oodq_status oodq_report_json(const oodq_report* report, char** out);
oodq_status oodq_report_csv(const oodq_report* report, char** out);
oodq_status oodq_report_scatter_svg(const oodq_report* report, char** out);
oodq_status oodq_report_scatter_csv(const oodq_report* report, char** out);

int oodq_report_class_count(const oodq_report* report);
oodq_status oodq_report_class_name(const oodq_report* report, int index, char** out);

/* Kiviat diagram for one analyzed class. */
oodq_status oodq_report_kiviat_svg(const oodq_report* report, const char* class_name,
                                   char** out);

/* ---- use-case cohesion ---- */

/* Evaluates CL_UC / CL_UCM / coupling factor over a use-case document
 * (JSON, or YAML when is_yaml is nonzero) and returns a JSON report.
 * min_overlap is the number of shared messages that makes two
 * scenarios similar (use 1 for the default). */
oodq_status oodq_cohesion_json(const char* document_text, int is_yaml, int min_overlap,
                               char** out);

void oodq_string_free(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* OODQ_H */
