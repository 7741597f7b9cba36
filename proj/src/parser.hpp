#pragma once

#include "lines.hpp"
#include "model.hpp"

#include <string>
#include <vector>

namespace oodq {

struct SourceFile {
  std::string path;
  std::string text;
  int line_count = 0;
};

SourceFile make_source_file(std::string path, std::string text);

struct ParseDiagnostic {
  enum class Severity { Warning, Error };
  std::string path;
  int line = 0;
  std::string message;
  Severity severity = Severity::Error;
};

struct ParseResult {
  std::vector<ClassModel> classes;
  LineTally tally;
  std::vector<ParseDiagnostic> diagnostics;
};

// Parses one compilation unit of the supported Java subset: package and
// import headers, class/interface/enum declarations (nested classes
// flatten to Outer.Inner), fields and methods with modifiers, and the
// statement grammar needed for control-flow metrics. Generic arguments
// are stripped to raw names; annotations are skipped; anonymous class
// and lambda bodies contribute their invocations to the enclosing
// method. Syntax errors degrade to diagnostics with recovery at the
// next member boundary.
ParseResult parse_compilation_unit(const SourceFile& file);

struct SourceTreeResult {
  ProjectModel project;
  std::vector<ParseDiagnostic> diagnostics;
};

// Parses every file under `root` matching `extension_glob` (sorted by
// path for determinism) and resolves the combined model. Throws
// AnalysisError{IoFailure} when root is missing and propagates
// CyclicInheritance/DuplicateClassName from resolution.
SourceTreeResult parse_source_tree(const std::string& root,
                                   const std::string& extension_glob = "*.java");

} // namespace oodq
