#include "model_json.hpp"

#include "errors.hpp"

#include <json.hpp>

namespace oodq {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail(ErrorCode::SchemaViolation, where + ": " + what);
}

json tally_to_json(const LineTally& t) {
  json j;
  j["sline"] = t.sline;
  j["scomm"] = t.scomm;
  j["sblank"] = t.sblank;
  j["ssbra"] = t.ssbra;
  j["sloc"] = t.sloc;
  j["eloc"] = t.eloc;
  return j;
}

LineTally tally_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  LineTally t;
  auto field = [&](const char* key) -> std::int64_t {
    if (!j.contains(key) || !j[key].is_number_integer())
      bad(where + "/" + key, "expected an integer");
    return j[key].get<std::int64_t>();
  };
  t.sline = field("sline");
  t.scomm = field("scomm");
  t.sblank = field("sblank");
  t.ssbra = field("ssbra");
  t.sloc = field("sloc");
  t.eloc = field("eloc");
  return t;
}

json statement_to_json(const Statement& s) {
  json j;
  j["kind"] = stmt_kind_name(s.kind);
  if (s.line) j["line"] = s.line;
  if (s.short_circuit_ops) j["short_circuit"] = s.short_circuit_ops;
  if (s.conditional_ops) j["conditional"] = s.conditional_ops;
  if (!s.calls.empty()) j["calls"] = s.calls;
  if (!s.children.empty()) {
    json kids = json::array();
    for (const Statement& c : s.children) kids.push_back(statement_to_json(c));
    j["children"] = std::move(kids);
  }
  if (s.kind == StmtKind::Switch) {
    j["group_labels"] = s.group_labels;
    j["has_default"] = s.has_default;
  }
  if (s.kind == StmtKind::Try) {
    j["catches"] = s.catch_count;
    j["has_finally"] = s.has_finally;
  }
  if (s.kind == StmtKind::Break || s.kind == StmtKind::Continue) {
    if (s.labeled) {
      j["labeled"] = true;
      j["target_label"] = s.target_label;
    }
  }
  if (!s.label.empty()) j["label"] = s.label;
  return j;
}

Statement statement_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  Statement s;
  if (!j.contains("kind") || !j["kind"].is_string())
    bad(where + "/kind", "expected a string");
  if (!stmt_kind_from_name(j["kind"].get<std::string>(), s.kind))
    bad(where + "/kind", "unknown kind " + j["kind"].get<std::string>());
  if (j.contains("line")) s.line = j["line"].get<int>();
  if (j.contains("short_circuit")) s.short_circuit_ops = j["short_circuit"].get<int>();
  if (j.contains("conditional")) s.conditional_ops = j["conditional"].get<int>();
  if (j.contains("calls")) {
    if (!j["calls"].is_array()) bad(where + "/calls", "expected an array");
    for (const json& c : j["calls"]) s.calls.push_back(c.get<int>());
  }
  if (j.contains("children")) {
    if (!j["children"].is_array()) bad(where + "/children", "expected an array");
    int i = 0;
    for (const json& c : j["children"])
      s.children.push_back(statement_from_json(c, where + "/children/" + std::to_string(i++)));
  }
  if (j.contains("group_labels"))
    for (const json& g : j["group_labels"]) s.group_labels.push_back(g.get<int>());
  if (j.contains("has_default")) s.has_default = j["has_default"].get<bool>();
  if (j.contains("catches")) s.catch_count = j["catches"].get<int>();
  if (j.contains("has_finally")) s.has_finally = j["has_finally"].get<bool>();
  if (j.contains("labeled")) s.labeled = j["labeled"].get<bool>();
  if (j.contains("target_label")) s.target_label = j["target_label"].get<std::string>();
  if (j.contains("label")) s.label = j["label"].get<std::string>();
  return s;
}

std::string kind_to_string(ClassKind k) { return class_kind_name(k); }

} // namespace

std::string emit_model_json(const ProjectModel& project) {
  json doc;
  doc["schema"] = 1;
  doc["name"] = project.name;
  doc["source_root"] = project.source_root;
  doc["source_tally"] = tally_to_json(project.source_tally);
  json classes = json::array();
  for (const ClassModel& cls : project.classes) {
    json c;
    c["name"] = cls.qualified_name;
    c["kind"] = kind_to_string(cls.kind);
    json supers = json::array();
    for (const TypeRef& st : cls.supertypes) supers.push_back(st.name);
    c["supertypes"] = std::move(supers);
    c["line_span"] = {cls.line_span.start, cls.line_span.end};
    c["line_tally"] = tally_to_json(cls.line_tally);
    json attrs = json::array();
    for (const AttributeModel& a : cls.attributes) {
      json attr;
      attr["name"] = a.name;
      attr["type"] = a.declared_type.name;
      attr["visibility"] = visibility_name(a.visibility);
      attr["static"] = a.is_static;
      attrs.push_back(std::move(attr));
    }
    c["attributes"] = std::move(attrs);
    json methods = json::array();
    for (const MethodModel& m : cls.methods) {
      json method;
      method["name"] = m.name;
      json params = json::array();
      for (const TypeRef& p : m.parameters) params.push_back(p.name);
      method["parameters"] = std::move(params);
      method["return_type"] = m.return_type ? json(m.return_type->name) : json(nullptr);
      method["visibility"] = visibility_name(m.visibility);
      method["static"] = m.is_static;
      method["abstract"] = m.is_abstract;
      method["constructor"] = m.is_constructor;
      method["line_span"] = {m.line_span.start, m.line_span.end};
      json calls = json::array();
      for (const CallSite& call : m.invocations) {
        json cj;
        cj["name"] = call.target_name;
        cj["arity"] = call.arity;
        cj["receiver"] = call.receiver_type ? json(call.receiver_type->name) : json(nullptr);
        calls.push_back(std::move(cj));
      }
      method["invocations"] = std::move(calls);
      json locals = json::array();
      for (const TypeRef& t : m.local_decl_types) locals.push_back(t.name);
      method["local_types"] = std::move(locals);
      method["attribute_refs"] = m.attribute_refs;
      method["body"] = m.body ? statement_to_json(*m.body) : json(nullptr);
      methods.push_back(std::move(method));
    }
    c["methods"] = std::move(methods);
    classes.push_back(std::move(c));
  }
  doc["classes"] = std::move(classes);
  return doc.dump(2) + "\n";
}

ProjectModel load_model_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    bad("/", std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) bad("/", "expected an object");
  if (!doc.contains("classes") || !doc["classes"].is_array())
    bad("/classes", "expected an array");

  auto str = [&](const json& j, const std::string& where, const char* key,
                 bool required = true) -> std::string {
    if (!j.contains(key)) {
      if (required) bad(where + "/" + key, "missing");
      return {};
    }
    if (!j[key].is_string()) bad(where + "/" + key, "expected a string");
    return j[key].get<std::string>();
  };

  std::vector<ClassModel> classes;
  int ci = 0;
  for (const json& c : doc["classes"]) {
    std::string cwhere = "/classes/" + std::to_string(ci++);
    if (!c.is_object()) bad(cwhere, "expected an object");
    ClassModel cls;
    cls.qualified_name = str(c, cwhere, "name");
    std::string kind = str(c, cwhere, "kind", false);
    if (!kind.empty() && !class_kind_from_name(kind, cls.kind))
      bad(cwhere + "/kind", "unknown kind " + kind);
    if (c.contains("supertypes")) {
      if (!c["supertypes"].is_array()) bad(cwhere + "/supertypes", "expected an array");
      for (const json& st : c["supertypes"]) {
        if (!st.is_string()) bad(cwhere + "/supertypes", "expected strings");
        cls.supertypes.push_back(TypeRef{st.get<std::string>(), {}});
      }
    }
    if (c.contains("line_span")) {
      if (!c["line_span"].is_array() || c["line_span"].size() != 2)
        bad(cwhere + "/line_span", "expected [start, end]");
      cls.line_span.start = c["line_span"][0].get<int>();
      cls.line_span.end = c["line_span"][1].get<int>();
      if (cls.line_span.start > cls.line_span.end)
        bad(cwhere + "/line_span", "start exceeds end");
    } else {
      cls.line_span = {1, 1};
    }
    if (c.contains("line_tally"))
      cls.line_tally = tally_from_json(c["line_tally"], cwhere + "/line_tally");
    if (c.contains("attributes")) {
      if (!c["attributes"].is_array()) bad(cwhere + "/attributes", "expected an array");
      int ai = 0;
      for (const json& a : c["attributes"]) {
        std::string awhere = cwhere + "/attributes/" + std::to_string(ai++);
        AttributeModel attr;
        attr.name = str(a, awhere, "name");
        attr.declared_type = TypeRef{str(a, awhere, "type"), {}};
        std::string vis = str(a, awhere, "visibility");
        if (!visibility_from_name(vis, attr.visibility))
          bad(awhere + "/visibility", "unknown visibility " + vis);
        if (a.contains("static")) attr.is_static = a["static"].get<bool>();
        for (const AttributeModel& existing : cls.attributes)
          if (existing.name == attr.name)
            bad(awhere + "/name", "duplicate attribute " + attr.name);
        cls.attributes.push_back(std::move(attr));
      }
    }
    if (c.contains("methods")) {
      if (!c["methods"].is_array()) bad(cwhere + "/methods", "expected an array");
      int mi = 0;
      for (const json& m : c["methods"]) {
        std::string mwhere = cwhere + "/methods/" + std::to_string(mi++);
        MethodModel method;
        method.name = str(m, mwhere, "name");
        if (m.contains("parameters")) {
          if (!m["parameters"].is_array()) bad(mwhere + "/parameters", "expected an array");
          for (const json& p : m["parameters"]) {
            if (!p.is_string()) bad(mwhere + "/parameters", "expected strings");
            method.parameters.push_back(TypeRef{p.get<std::string>(), {}});
          }
        }
        if (m.contains("return_type") && !m["return_type"].is_null())
          method.return_type = TypeRef{m["return_type"].get<std::string>(), {}};
        std::string vis = str(m, mwhere, "visibility");
        if (!visibility_from_name(vis, method.visibility))
          bad(mwhere + "/visibility", "unknown visibility " + vis);
        if (m.contains("static")) method.is_static = m["static"].get<bool>();
        if (m.contains("abstract")) method.is_abstract = m["abstract"].get<bool>();
        if (m.contains("constructor")) method.is_constructor = m["constructor"].get<bool>();
        if (m.contains("line_span")) {
          if (!m["line_span"].is_array() || m["line_span"].size() != 2)
            bad(mwhere + "/line_span", "expected [start, end]");
          method.line_span.start = m["line_span"][0].get<int>();
          method.line_span.end = m["line_span"][1].get<int>();
        }
        if (m.contains("invocations")) {
          if (!m["invocations"].is_array()) bad(mwhere + "/invocations", "expected an array");
          int ii = 0;
          for (const json& call : m["invocations"]) {
            std::string iwhere = mwhere + "/invocations/" + std::to_string(ii++);
            CallSite site;
            site.target_name = str(call, iwhere, "name");
            if (call.contains("arity")) site.arity = call["arity"].get<int>();
            if (site.arity < 0) bad(iwhere + "/arity", "negative arity");
            if (call.contains("receiver") && !call["receiver"].is_null())
              site.receiver_type = TypeRef{call["receiver"].get<std::string>(), {}};
            method.invocations.push_back(std::move(site));
          }
        }
        if (m.contains("local_types")) {
          for (const json& t : m["local_types"]) {
            if (!t.is_string()) bad(mwhere + "/local_types", "expected strings");
            method.local_decl_types.push_back(TypeRef{t.get<std::string>(), {}});
          }
        }
        if (m.contains("attribute_refs")) {
          for (const json& r : m["attribute_refs"]) {
            if (!r.is_string()) bad(mwhere + "/attribute_refs", "expected strings");
            method.attribute_refs.push_back(r.get<std::string>());
          }
        }
        if (m.contains("body") && !m["body"].is_null()) {
          if (method.is_abstract) bad(mwhere + "/body", "abstract method with a body");
          method.body = statement_from_json(m["body"], mwhere + "/body");
          int call_count = static_cast<int>(method.invocations.size());
          std::function<void(const Statement&)> check = [&](const Statement& s) {
            for (int idx : s.calls)
              if (idx < 0 || idx >= call_count)
                bad(mwhere + "/body", "call index out of range");
            for (const Statement& child : s.children) check(child);
          };
          check(*method.body);
        }
        cls.methods.push_back(std::move(method));
      }
    }
    classes.push_back(std::move(cls));
  }

  std::string name = doc.contains("name") && doc["name"].is_string()
                         ? doc["name"].get<std::string>()
                         : std::string{};
  std::string root = doc.contains("source_root") && doc["source_root"].is_string()
                         ? doc["source_root"].get<std::string>()
                         : std::string{};
  LineTally tally;
  if (doc.contains("source_tally"))
    tally = tally_from_json(doc["source_tally"], "/source_tally");
  return resolve_project(std::move(classes), std::move(name), std::move(root), tally);
}

} // namespace oodq
