#pragma once

#include <set>
#include <string>
#include <vector>

namespace oodq {

struct ScenarioEvent {
  std::string name;
  std::string sender;
  std::string receiver;
};

struct ScenarioModel {
  std::string id;
  std::vector<ScenarioEvent> events; // list order is the time axis
  std::set<std::string> concepts;
};

struct UseCase {
  std::string id;
  std::vector<ScenarioModel> scenarios;
};

struct UseCaseRelation {
  std::string kind; // include | extend
  std::string from;
  std::string to;
};

struct DomainModel {
  std::set<std::string> concepts;
  std::set<std::pair<std::string, std::string>> client_relations; // client -> supplier
};

struct UseCaseModel {
  std::vector<UseCase> use_cases;
  std::vector<UseCaseRelation> relations;
  DomainModel domain;
};

// Similar iff the scenarios exchange at least `min_overlap` common
// message names.
bool scenario_similarity(const ScenarioModel& a, const ScenarioModel& b,
                         int min_overlap = 1);

// |similar pairs| / |all pairs| within one use case; 1 with fewer than
// two scenarios.
double cl_uc(const UseCase& use_case, int min_overlap = 1);

// 1 - |similar cross-use-case pairs| / |all cross pairs|; 1 when fewer
// than two use cases carry scenarios.
double cl_ucm(const UseCaseModel& model, int min_overlap = 1);

// |client relations| / (TC^2 - TC). Throws AnalysisError{DomainError}
// when the domain has fewer than two concepts.
double coupling_factor(const DomainModel& domain);

// Loads the committed use-case schema from JSON or YAML (`.yaml`/`.yml`
// selects the YAML reader). Throws AnalysisError{SchemaViolation} with
// a JSON-pointer-style location on malformed documents.
UseCaseModel load_use_case_model(const std::string& text, bool yaml = false);

// Cohesion/coupling results serialized as a JSON object.
std::string cohesion_report_json(const UseCaseModel& model, int min_overlap = 1);

} // namespace oodq
