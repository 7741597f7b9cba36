#pragma once

#include "lines.hpp"
#include "statements.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oodq {

enum class Visibility { Public, Protected, Package, Private };
enum class ClassKind { Class, Interface, Enum };

const char* visibility_name(Visibility v);
bool visibility_from_name(const std::string& name, Visibility& out);
const char* class_kind_name(ClassKind k);
bool class_kind_from_name(const std::string& name, ClassKind& out);

// 1-based inclusive source line range.
struct LineSpan {
  int start = 0;
  int end = 0;
  int extent() const { return end - start + 1; }
  friend bool operator==(const LineSpan&, const LineSpan&) = default;
};

// A type mention. `resolved` is an index into ProjectModel::classes;
// absent means the type is external to the analyzed project.
struct TypeRef {
  std::string name;
  std::optional<int> resolved;
};

struct AttributeModel {
  std::string name;
  TypeRef declared_type;
  Visibility visibility = Visibility::Package;
  bool is_static = false;
};

struct CallSite {
  std::string target_name;
  int arity = 0;
  std::optional<TypeRef> receiver_type; // absent = unknown receiver
};

struct MethodModel {
  std::string name;
  std::vector<TypeRef> parameters;
  std::optional<TypeRef> return_type; // absent = void or constructor
  Visibility visibility = Visibility::Package;
  bool is_static = false;
  bool is_abstract = false;
  bool is_constructor = false;
  std::optional<Statement> body; // absent for abstract/interface methods
  std::vector<CallSite> invocations;
  LineSpan line_span;
  std::vector<TypeRef> local_decl_types;     // declared local/catch-param types
  std::vector<std::string> attribute_refs;   // own-class attributes referenced

  bool is_concrete() const { return body.has_value(); }
  // Stable display identity; overloads disambiguated by parameter names.
  std::string signature() const;
};

struct ClassModel {
  std::string qualified_name;
  ClassKind kind = ClassKind::Class;
  std::vector<TypeRef> supertypes; // extends and implements, in source order
  std::vector<AttributeModel> attributes;
  std::vector<MethodModel> methods;
  LineSpan line_span;
  LineTally line_tally; // tally of the class's own line region

  std::string simple_name() const;
  std::string package() const;
};

struct ProjectModel {
  std::string name;
  std::string source_root;
  std::vector<ClassModel> classes;
  LineTally source_tally; // all analyzed source files combined

  int index_of(const std::string& qualified_name) const; // -1 when absent
};

// Resolves type references against the class list, verifies name
// uniqueness and an acyclic inheritance graph, and assembles the model.
// Resolution: exact qualified-name match, else a unique simple-name
// match, else a same-package candidate on simple-name ties, else the
// reference stays external.
//
// Throws AnalysisError{DuplicateClassName} and
// AnalysisError{CyclicInheritance} (message names the cycle).
ProjectModel resolve_project(std::vector<ClassModel> classes,
                             std::string name = {},
                             std::string source_root = {},
                             LineTally source_tally = {});

// Re-runs resolution in place (idempotent).
void resolve(ProjectModel& project);

// Direct children via resolved supertype edges, lexicographic by
// qualified name.
std::vector<int> subclasses_of(const ProjectModel& project, int class_index);

// Transitive closure over resolved supertypes, deduplicated, self
// excluded, lexicographic by qualified name.
std::vector<int> ancestors_of(const ProjectModel& project, int class_index);

// Transitive descendants via resolved supertype edges (inverse closure).
std::vector<int> descendants_of(const ProjectModel& project, int class_index);

// Length in edges of the longest resolved supertype chain (0 for roots).
int inheritance_depth(const ProjectModel& project, int class_index);

} // namespace oodq
