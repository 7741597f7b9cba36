#pragma once

#include "model.hpp"

#include <string>

namespace oodq {

// Neutral class-model interchange. Deterministic: equal models emit
// byte-identical documents; load re-resolves type references, so
// load(emit(p)) is structurally equal to p.
std::string emit_model_json(const ProjectModel& project);

// Throws AnalysisError{SchemaViolation} with a JSON-pointer-style
// location; DuplicateClassName / CyclicInheritance propagate from
// resolution.
ProjectModel load_model_json(const std::string& text);

} // namespace oodq
