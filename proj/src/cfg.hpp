#pragma once

#include "statements.hpp"

#include <string>
#include <vector>

namespace oodq {

enum class EdgeLabel { True, False, Case, Exception, Fallthrough, Jump };

const char* edge_label_name(EdgeLabel label);

struct CfgEdge {
  int from = 0;
  int to = 0;
  EdgeLabel label = EdgeLabel::Fallthrough;
};

struct CfgNode {
  std::vector<int> calls; // indices into the owning method's invocations
  int line = 0;
};

// Directed multigraph with a synthetic entry (no in-edges) and exit
// (no out-edges). Every node is reachable from entry and reaches exit.
struct ControlFlowGraph {
  std::vector<CfgNode> nodes;
  std::vector<CfgEdge> edges;
  int entry = 0;
  int exit = 1;

  int out_degree(int node) const;
  int in_degree(int node) const;
};

struct CfgOptions {
  // Each && / || and each ?: in a statement's header expressions adds
  // one decision node.
  bool count_short_circuit = true;
};

// Lowers a method body into a CFG. Structured statements lower
// canonically; return/throw jump to exit; break/continue jump to their
// loop exit / loop head; each catch clause draws an exception edge from
// the guarded region's exit; `finally` is sequential. Unreachable
// statements are dropped with a warning. Throws
// AnalysisError{MalformedBody} for break/continue without a target.
ControlFlowGraph build_cfg(const Statement& body, const CfgOptions& options = {},
                           std::vector<std::string>* warnings = nullptr);

// True when entry reaches every node and every node reaches exit.
bool cfg_is_valid(const ControlFlowGraph& cfg);

} // namespace oodq
