#include "usecase.hpp"

#include "errors.hpp"

#include <json.hpp>
#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <sstream>

namespace oodq {

bool scenario_similarity(const ScenarioModel& a, const ScenarioModel& b,
                         int min_overlap) {
  std::set<std::string> names_a;
  for (const ScenarioEvent& e : a.events) names_a.insert(e.name);
  std::set<std::string> shared;
  for (const ScenarioEvent& e : b.events)
    if (names_a.count(e.name)) shared.insert(e.name);
  return static_cast<int>(shared.size()) >= min_overlap;
}

double cl_uc(const UseCase& use_case, int min_overlap) {
  const std::size_t n = use_case.scenarios.size();
  if (n < 2) return 1.0; // no pairs, vacuously cohesive
  long pairs = 0, similar = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ++pairs;
      if (scenario_similarity(use_case.scenarios[i], use_case.scenarios[j], min_overlap))
        ++similar;
    }
  }
  return static_cast<double>(similar) / static_cast<double>(pairs);
}

double cl_ucm(const UseCaseModel& model, int min_overlap) {
  long pairs = 0, similar = 0;
  for (std::size_t u = 0; u < model.use_cases.size(); ++u) {
    for (std::size_t w = u + 1; w < model.use_cases.size(); ++w) {
      for (const ScenarioModel& a : model.use_cases[u].scenarios) {
        for (const ScenarioModel& b : model.use_cases[w].scenarios) {
          ++pairs;
          if (scenario_similarity(a, b, min_overlap)) ++similar;
        }
      }
    }
  }
  if (pairs == 0) return 1.0;
  return 1.0 - static_cast<double>(similar) / static_cast<double>(pairs);
}

double coupling_factor(const DomainModel& domain) {
  const long tc = static_cast<long>(domain.concepts.size());
  if (tc < 2) fail(ErrorCode::DomainError, "coupling factor needs at least two concepts");
  return static_cast<double>(domain.client_relations.size()) /
         static_cast<double>(tc * tc - tc);
}

namespace {

using nlohmann::json;

[[noreturn]] void bad_doc(const std::string& where, const std::string& what) {
  fail(ErrorCode::SchemaViolation, where + ": " + what);
}

json yaml_to_json(const YAML::Node& node) {
  switch (node.Type()) {
  case YAML::NodeType::Null: return nullptr;
  case YAML::NodeType::Scalar: {
    // preserve scalars as strings except obvious numerics/bools
    const std::string& s = node.Scalar();
    if (s == "true") return true;
    if (s == "false") return false;
    try {
      std::size_t used = 0;
      double d = std::stod(s, &used);
      if (used == s.size()) return d;
    } catch (const std::exception&) {
    }
    return s;
  }
  case YAML::NodeType::Sequence: {
    json arr = json::array();
    for (const auto& item : node) arr.push_back(yaml_to_json(item));
    return arr;
  }
  case YAML::NodeType::Map: {
    json obj = json::object();
    for (const auto& kv : node) obj[kv.first.Scalar()] = yaml_to_json(kv.second);
    return obj;
  }
  default: return nullptr;
  }
}

std::string require_string(const json& j, const std::string& where, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    bad_doc(where + "/" + key, "expected a string");
  return j[key].get<std::string>();
}

} // namespace

UseCaseModel load_use_case_model(const std::string& text, bool yaml) {
  json doc;
  if (yaml) {
    try {
      doc = yaml_to_json(YAML::Load(text));
    } catch (const YAML::Exception& e) {
      bad_doc("/", std::string("YAML parse error: ") + e.what());
    }
  } else {
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      bad_doc("/", std::string("JSON parse error: ") + e.what());
    }
  }
  if (!doc.is_object()) bad_doc("/", "expected an object");
  if (!doc.contains("use_cases") || !doc["use_cases"].is_array())
    bad_doc("/use_cases", "expected an array");

  UseCaseModel model;
  int ui = 0;
  for (const json& uc_doc : doc["use_cases"]) {
    std::string uwhere = "/use_cases/" + std::to_string(ui++);
    if (!uc_doc.is_object()) bad_doc(uwhere, "expected an object");
    UseCase uc;
    uc.id = require_string(uc_doc, uwhere, "id");
    if (uc_doc.contains("scenarios")) {
      if (!uc_doc["scenarios"].is_array()) bad_doc(uwhere + "/scenarios", "expected an array");
      int si = 0;
      for (const json& sc_doc : uc_doc["scenarios"]) {
        std::string swhere = uwhere + "/scenarios/" + std::to_string(si++);
        if (!sc_doc.is_object()) bad_doc(swhere, "expected an object");
        ScenarioModel sc;
        sc.id = require_string(sc_doc, swhere, "id");
        if (sc_doc.contains("events")) {
          if (!sc_doc["events"].is_array()) bad_doc(swhere + "/events", "expected an array");
          int ei = 0;
          for (const json& ev_doc : sc_doc["events"]) {
            std::string ewhere = swhere + "/events/" + std::to_string(ei++);
            if (!ev_doc.is_object()) bad_doc(ewhere, "expected an object");
            ScenarioEvent ev;
            ev.name = require_string(ev_doc, ewhere, "name");
            ev.sender = require_string(ev_doc, ewhere, "from");
            ev.receiver = require_string(ev_doc, ewhere, "to");
            sc.concepts.insert(ev.sender);
            sc.concepts.insert(ev.receiver);
            sc.events.push_back(std::move(ev));
          }
        }
        uc.scenarios.push_back(std::move(sc));
      }
    }
    model.use_cases.push_back(std::move(uc));
  }

  if (doc.contains("relations")) {
    if (!doc["relations"].is_array()) bad_doc("/relations", "expected an array");
    std::set<std::string> ids;
    for (const UseCase& uc : model.use_cases) ids.insert(uc.id);
    int ri = 0;
    for (const json& rel_doc : doc["relations"]) {
      std::string rwhere = "/relations/" + std::to_string(ri++);
      UseCaseRelation rel;
      rel.kind = require_string(rel_doc, rwhere, "kind");
      if (rel.kind != "include" && rel.kind != "extend")
        bad_doc(rwhere + "/kind", "expected include or extend");
      rel.from = require_string(rel_doc, rwhere, "from");
      rel.to = require_string(rel_doc, rwhere, "to");
      if (!ids.count(rel.from)) bad_doc(rwhere + "/from", "unknown use case " + rel.from);
      if (!ids.count(rel.to)) bad_doc(rwhere + "/to", "unknown use case " + rel.to);
      model.relations.push_back(std::move(rel));
    }
  }

  if (doc.contains("domain")) {
    const json& dom = doc["domain"];
    if (!dom.is_object()) bad_doc("/domain", "expected an object");
    if (dom.contains("concepts")) {
      if (!dom["concepts"].is_array()) bad_doc("/domain/concepts", "expected an array");
      for (const json& c : dom["concepts"]) {
        if (!c.is_string()) bad_doc("/domain/concepts", "expected strings");
        model.domain.concepts.insert(c.get<std::string>());
      }
    }
    if (dom.contains("client_relations")) {
      if (!dom["client_relations"].is_array())
        bad_doc("/domain/client_relations", "expected an array");
      int ci = 0;
      for (const json& pair : dom["client_relations"]) {
        std::string cwhere = "/domain/client_relations/" + std::to_string(ci++);
        std::string client = require_string(pair, cwhere, "client");
        std::string supplier = require_string(pair, cwhere, "supplier");
        if (client == supplier) bad_doc(cwhere, "self relations are not allowed");
        if (!model.domain.concepts.count(client))
          bad_doc(cwhere + "/client", "unknown concept " + client);
        if (!model.domain.concepts.count(supplier))
          bad_doc(cwhere + "/supplier", "unknown concept " + supplier);
        model.domain.client_relations.insert({client, supplier});
      }
    }
  }
  return model;
}

std::string cohesion_report_json(const UseCaseModel& model, int min_overlap) {
  json out;
  out["schema"] = 1;
  json per_uc = json::object();
  for (const UseCase& uc : model.use_cases) per_uc[uc.id] = cl_uc(uc, min_overlap);
  out["cl_uc"] = per_uc;
  out["cl_ucm"] = cl_ucm(model, min_overlap);
  if (model.domain.concepts.size() >= 2)
    out["coupling_factor"] = coupling_factor(model.domain);
  else
    out["coupling_factor"] = nullptr;
  out["use_cases"] = model.use_cases.size();
  long scenario_count = 0;
  for (const UseCase& uc : model.use_cases)
    scenario_count += static_cast<long>(uc.scenarios.size());
  out["scenarios"] = scenario_count;
  return out.dump(2) + "\n";
}

} // namespace oodq
