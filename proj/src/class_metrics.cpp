#include "class_metrics.hpp"

#include "lines.hpp"

#include <algorithm>

namespace oodq {

double ClassMetricVector::value_of(const std::string& metric_name) const {
  if (metric_name == "cl_comf") return cl_comf;
  if (metric_name == "cl_comm") return static_cast<double>(cl_comm);
  if (metric_name == "cl_data") return static_cast<double>(cl_data);
  if (metric_name == "cl_data_publ") return static_cast<double>(cl_data_publ);
  if (metric_name == "cl_func") return static_cast<double>(cl_func);
  if (metric_name == "cl_func_publ") return static_cast<double>(cl_func_publ);
  if (metric_name == "cl_line") return static_cast<double>(cl_line);
  if (metric_name == "cl_stat") return static_cast<double>(cl_stat);
  if (metric_name == "cl_wmc") return static_cast<double>(cl_wmc);
  if (metric_name == "cu_cdused") return static_cast<double>(cu_cdused);
  if (metric_name == "cu_cdusers") return static_cast<double>(cu_cdusers);
  if (metric_name == "in_bases") return static_cast<double>(in_bases);
  if (metric_name == "in_noc") return static_cast<double>(in_noc);
  return 0.0;
}

const std::vector<std::string>& ClassMetricVector::metric_names() {
  static const std::vector<std::string> names{
      "cl_comf", "cl_comm",   "cl_data",    "cl_data_publ", "cl_func",
      "cl_func_publ", "cl_line", "cl_stat", "cl_wmc",       "cu_cdused",
      "cu_cdusers",   "in_bases", "in_noc"};
  return names;
}

ReferenceIndex::ReferenceIndex(const ProjectModel& project) {
  const std::size_t n = project.classes.size();
  used_.resize(n);
  users_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const ClassModel& cls = project.classes[i];
    auto note = [&](const TypeRef& ref) {
      if (!ref.resolved) return;
      int target = *ref.resolved;
      if (target == static_cast<int>(i)) return; // self excluded
      used_[i].insert(target);
    };
    for (const AttributeModel& attr : cls.attributes) note(attr.declared_type);
    for (const MethodModel& m : cls.methods) {
      for (const TypeRef& p : m.parameters) note(p);
      if (m.return_type) note(*m.return_type);
      for (const TypeRef& t : m.local_decl_types) note(t);
      for (const CallSite& call : m.invocations)
        if (call.receiver_type) note(*call.receiver_type);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (int target : used_[i]) users_[static_cast<std::size_t>(target)].insert(static_cast<int>(i));
}

std::string method_key(const ClassModel& cls, const MethodModel& method) {
  return cls.qualified_name + "#" + method.signature();
}

ClassMetricVector class_metrics(const ProjectModel& project, int class_index,
                                const ReferenceIndex& refs,
                                const std::map<std::string, int>& method_cyclomatic) {
  const ClassModel& cls = project.classes[static_cast<std::size_t>(class_index)];
  ClassMetricVector v;
  v.cl_comf = comment_rate(cls.line_tally);
  v.cl_comm = cls.line_tally.scomm;
  v.cl_data = static_cast<long>(cls.attributes.size());
  for (const AttributeModel& attr : cls.attributes)
    v.cl_data_publ += attr.visibility == Visibility::Public ? 1 : 0;
  v.cl_func = static_cast<long>(cls.methods.size());
  for (const MethodModel& m : cls.methods)
    v.cl_func_publ += m.visibility == Visibility::Public ? 1 : 0;
  v.cl_line = cls.line_span.extent();
  for (const MethodModel& m : cls.methods) {
    if (!m.body) continue;
    v.cl_stat += count_statements(*m.body);
    auto it = method_cyclomatic.find(method_key(cls, m));
    if (it != method_cyclomatic.end()) v.cl_wmc += it->second;
  }
  v.cu_cdused = static_cast<long>(refs.used_by(class_index).size());
  v.cu_cdusers = static_cast<long>(refs.users_of(class_index).size());
  v.in_bases = static_cast<long>(ancestors_of(project, class_index).size());
  v.in_noc = static_cast<long>(subclasses_of(project, class_index).size());
  return v;
}

long lcom_value(const ClassModel& cls, bool count_static_attrs) {
  std::set<std::string> counted;
  for (const AttributeModel& attr : cls.attributes)
    if (count_static_attrs || !attr.is_static) counted.insert(attr.name);

  std::vector<std::set<std::string>> refs;
  for (const MethodModel& m : cls.methods) {
    std::set<std::string> used;
    for (const std::string& name : m.attribute_refs)
      if (counted.count(name)) used.insert(name);
    refs.push_back(std::move(used));
  }

  long disjoint = 0, sharing = 0;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    for (std::size_t j = i + 1; j < refs.size(); ++j) {
      bool share = false;
      for (const std::string& name : refs[i])
        if (refs[j].count(name)) { share = true; break; }
      (share ? sharing : disjoint)++;
    }
  }
  return std::max(0L, disjoint - sharing);
}

CKVector ck_metrics(const ProjectModel& project, int class_index,
                    const ReferenceIndex& refs,
                    const std::map<std::string, int>& method_cyclomatic,
                    const ClassMetricsOptions& options) {
  const ClassModel& cls = project.classes[static_cast<std::size_t>(class_index)];
  CKVector ck;
  if (options.unit_wmc) {
    ck.wmc = static_cast<long>(cls.methods.size());
  } else {
    for (const MethodModel& m : cls.methods) {
      if (!m.body) continue;
      auto it = method_cyclomatic.find(method_key(cls, m));
      if (it != method_cyclomatic.end()) ck.wmc += it->second;
    }
  }
  ck.dit = inheritance_depth(project, class_index);
  ck.noc = static_cast<long>(subclasses_of(project, class_index).size());

  std::set<int> coupled = refs.used_by(class_index);
  for (int user : refs.users_of(class_index)) coupled.insert(user);
  ck.cbo = static_cast<long>(coupled.size());

  // RFC: own methods plus distinct signatures invoked on other classes.
  std::set<std::pair<std::string, int>> remote;
  for (const MethodModel& m : cls.methods) {
    for (const CallSite& call : m.invocations) {
      bool self_call = call.receiver_type && call.receiver_type->resolved &&
                       *call.receiver_type->resolved == class_index;
      if (self_call) continue;
      remote.insert({call.target_name, call.arity});
    }
  }
  ck.rfc = static_cast<long>(cls.methods.size()) + static_cast<long>(remote.size());

  ck.lcom = lcom_value(cls, options.lcom_static_attrs);
  return ck;
}

} // namespace oodq
