#include "statements.hpp"

#include <array>
#include <utility>

namespace oodq {

namespace {
constexpr std::array<std::pair<StmtKind, const char*>, 15> kKindNames{{
    {StmtKind::Sequence, "sequence"},
    {StmtKind::Block, "block"},
    {StmtKind::If, "if"},
    {StmtKind::IfElse, "if-else"},
    {StmtKind::While, "while"},
    {StmtKind::DoWhile, "do-while"},
    {StmtKind::For, "for"},
    {StmtKind::Switch, "switch"},
    {StmtKind::Try, "try"},
    {StmtKind::Return, "return"},
    {StmtKind::Throw, "throw"},
    {StmtKind::Break, "break"},
    {StmtKind::Continue, "continue"},
    {StmtKind::Expression, "expression"},
    {StmtKind::LocalDecl, "local-declaration"},
}};
} // namespace

const char* stmt_kind_name(StmtKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "sequence";
}

bool stmt_kind_from_name(const std::string& name, StmtKind& out) {
  for (const auto& [k, n] : kKindNames) {
    if (name == n) {
      out = k;
      return true;
    }
  }
  return false;
}

int switch_case_count(const Statement& sw) {
  int total = 0;
  for (int labels : sw.group_labels) total += labels;
  return sw.has_default ? total - 1 : total;
}

int count_statements(const Statement& root) {
  int n = (root.kind == StmtKind::Sequence || root.kind == StmtKind::Block) ? 0 : 1;
  for (const Statement& child : root.children) n += count_statements(child);
  return n;
}

} // namespace oodq
