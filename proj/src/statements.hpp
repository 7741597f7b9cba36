#pragma once

#include <string>
#include <vector>

namespace oodq {

enum class StmtKind {
  Sequence, // implicit grouping: method bodies, case groups, catch bodies
  Block,    // explicit `{ ... }` statement
  If,
  IfElse,
  While,
  DoWhile,
  For,
  Switch,
  Try,
  Return,
  Throw,
  Break,
  Continue,
  Expression,
  LocalDecl,
};

const char* stmt_kind_name(StmtKind kind);
bool stmt_kind_from_name(const std::string& name, StmtKind& out);

// One node of a method's statement tree. Header expressions (conditions,
// for-clauses, returned values, ...) contribute their operator counts and
// call sites to the owning node; sub-statements are children.
//
// Children conventions:
//   If:      [then]            IfElse: [then, else]
//   While/DoWhile/For: [body]
//   Switch:  one Sequence child per case group, `group_labels[i]` case
//            labels route to child i (a default label counts as one)
//   Try:     [body, catch_0..catch_{n-1}, finally?] — all Sequence nodes
//   Block:   contained statements
struct Statement {
  StmtKind kind = StmtKind::Sequence;
  int line = 0;
  int short_circuit_ops = 0; // `&&` and `||` in header expressions
  int conditional_ops = 0;   // `?:` in header expressions
  std::vector<int> calls;    // indices into the owning method's invocations
  std::vector<Statement> children;

  // Switch
  std::vector<int> group_labels;
  bool has_default = false;

  // Try
  int catch_count = 0;
  bool has_finally = false;

  // Break / Continue
  bool labeled = false;
  std::string target_label;

  // Loop label, when the statement was labeled
  std::string label;
};

// Number of case labels excluding the default.
int switch_case_count(const Statement& sw);

// Node count excluding Sequence and Block nodes (the cl_stat contribution
// of one statement tree).
int count_statements(const Statement& root);

} // namespace oodq
