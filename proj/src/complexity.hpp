#pragma once

#include "cfg.hpp"
#include "model.hpp"

#include <functional>
#include <string>
#include <vector>

namespace oodq {

struct MethodComplexity {
  std::string method_id;
  int v = 1;  // cyclomatic
  int ev = 1; // essential
  int iv = 1; // module design
};

// v(G) = E - N + 2.
int cyclomatic(const ControlFlowGraph& cfg);

// Independent route: sum over nodes of (out-degree - 1) plus one.
int cyclomatic_by_decisions(const ControlFlowGraph& cfg);

// Cyclomatic number of the residue after iteratively collapsing
// structured primes (sequences, if/if-else diamonds, while and do-while
// loops, no-fall-through switches and converging try/catch fans). A
// fully structured method yields 1; jump edges leaving a conditional or
// loop keep their region irreducible.
int essential(const ControlFlowGraph& cfg);

// Cyclomatic number after removing every decision on whose branches no
// marked node appears (marked = contains a call into the project).
// `is_internal_call` maps a call-site index of the analyzed method to
// whether it targets a project class.
int design_complexity(const ControlFlowGraph& cfg,
                      const std::function<bool(int)>& is_internal_call);

// Convenience for project analysis: marks calls whose receiver resolves
// to a class of `project` (self calls included).
int design_complexity(const ControlFlowGraph& cfg, const MethodModel& method,
                      const ProjectModel& project);

enum class ScatterQuadrant {
  ReliableMaintainable,     // v <= 10, ev <= 4
  ReliableUnmaintainable,   // v > 10, ev <= 4
  UnreliableMaintainable,   // v <= 10, ev > 4
  UnreliableUnmaintainable, // v > 10, ev > 4
};

const char* scatter_quadrant_name(ScatterQuadrant quadrant);

// Thresholds: v at 10, ev at 4. Throws AnalysisError{DomainError} when
// ev > v.
ScatterQuadrant scatter_quadrant(int v, int ev);

} // namespace oodq
