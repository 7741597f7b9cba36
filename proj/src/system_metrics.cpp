#include "system_metrics.hpp"

#include "errors.hpp"

#include <algorithm>
#include <set>

namespace oodq {

double QmoodDesignProperties::value_of(const std::string& property) const {
  if (property == "design_size") return design_size;
  if (property == "hierarchies") return hierarchies;
  if (property == "abstraction") return abstraction;
  if (property == "encapsulation") return encapsulation;
  if (property == "coupling") return coupling;
  if (property == "cohesion") return cohesion;
  if (property == "composition") return composition;
  if (property == "inheritance") return inheritance;
  if (property == "polymorphism") return polymorphism;
  if (property == "messaging") return messaging;
  if (property == "complexity") return complexity;
  return 0.0;
}

void QmoodDesignProperties::set(const std::string& property, double value) {
  if (property == "design_size") design_size = value;
  else if (property == "hierarchies") hierarchies = value;
  else if (property == "abstraction") abstraction = value;
  else if (property == "encapsulation") encapsulation = value;
  else if (property == "coupling") coupling = value;
  else if (property == "cohesion") cohesion = value;
  else if (property == "composition") composition = value;
  else if (property == "inheritance") inheritance = value;
  else if (property == "polymorphism") polymorphism = value;
  else if (property == "messaging") messaging = value;
  else if (property == "complexity") complexity = value;
}

const std::vector<std::string>& QmoodDesignProperties::property_names() {
  static const std::vector<std::string> names{
      "design_size", "hierarchies", "abstraction",  "encapsulation",
      "coupling",    "cohesion",    "composition",  "inheritance",
      "polymorphism", "messaging",  "complexity"};
  return names;
}

namespace {

struct Signature {
  std::string name;
  int arity;
  bool operator<(const Signature& o) const {
    return name < o.name || (name == o.name && arity < o.arity);
  }
};

bool inheritable_method(const MethodModel& m) {
  return !m.is_constructor && m.visibility != Visibility::Private;
}

// Methods available by inheritance and not redeclared locally.
std::set<Signature> inherited_methods(const ProjectModel& project, int class_index) {
  std::set<Signature> inherited;
  for (int anc : ancestors_of(project, class_index)) {
    for (const MethodModel& m : project.classes[static_cast<std::size_t>(anc)].methods)
      if (inheritable_method(m))
        inherited.insert({m.name, static_cast<int>(m.parameters.size())});
  }
  const ClassModel& cls = project.classes[static_cast<std::size_t>(class_index)];
  for (const MethodModel& m : cls.methods)
    inherited.erase({m.name, static_cast<int>(m.parameters.size())});
  return inherited;
}

std::set<std::string> inherited_attributes(const ProjectModel& project, int class_index) {
  std::set<std::string> inherited;
  for (int anc : ancestors_of(project, class_index)) {
    for (const AttributeModel& a : project.classes[static_cast<std::size_t>(anc)].attributes)
      if (a.visibility != Visibility::Private) inherited.insert(a.name);
  }
  const ClassModel& cls = project.classes[static_cast<std::size_t>(class_index)];
  for (const AttributeModel& a : cls.attributes) inherited.erase(a.name);
  return inherited;
}

} // namespace

MOODVector mood_metrics(const ProjectModel& project, const ReferenceIndex& refs) {
  if (project.classes.empty()) fail(ErrorCode::EmptyProject, "no classes to measure");
  MOODVector mood;

  long methods_total = 0, methods_hidden = 0;
  long attrs_total = 0, attrs_hidden = 0;
  for (const ClassModel& cls : project.classes) {
    for (const MethodModel& m : cls.methods) {
      ++methods_total;
      methods_hidden += m.visibility != Visibility::Public ? 1 : 0;
    }
    for (const AttributeModel& a : cls.attributes) {
      ++attrs_total;
      attrs_hidden += a.visibility != Visibility::Public ? 1 : 0;
    }
  }
  mood.mhf = methods_total ? static_cast<double>(methods_hidden) / methods_total : 0.0;
  mood.ahf = attrs_total ? static_cast<double>(attrs_hidden) / attrs_total : 0.0;

  long inh_methods = 0, avail_methods = 0;
  long inh_attrs = 0, avail_attrs = 0;
  for (std::size_t i = 0; i < project.classes.size(); ++i) {
    const ClassModel& cls = project.classes[i];
    auto mi = inherited_methods(project, static_cast<int>(i));
    inh_methods += static_cast<long>(mi.size());
    avail_methods += static_cast<long>(mi.size()) + static_cast<long>(cls.methods.size());
    auto ai = inherited_attributes(project, static_cast<int>(i));
    inh_attrs += static_cast<long>(ai.size());
    avail_attrs += static_cast<long>(ai.size()) + static_cast<long>(cls.attributes.size());
  }
  mood.mif = avail_methods ? static_cast<double>(inh_methods) / avail_methods : 0.0;
  mood.aif = avail_attrs ? static_cast<double>(inh_attrs) / avail_attrs : 0.0;

  const long tc = static_cast<long>(project.classes.size());
  if (tc >= 2) {
    long client_pairs = 0;
    for (std::size_t i = 0; i < project.classes.size(); ++i)
      client_pairs += static_cast<long>(refs.used_by(static_cast<int>(i)).size());
    mood.cf = static_cast<double>(client_pairs) / static_cast<double>(tc * tc - tc);
  }

  // PF: overriding methods over (new overridable methods x descendants).
  long overrides = 0;
  long potential = 0;
  for (std::size_t i = 0; i < project.classes.size(); ++i) {
    const ClassModel& cls = project.classes[i];
    std::set<Signature> from_ancestors;
    for (int anc : ancestors_of(project, static_cast<int>(i)))
      for (const MethodModel& m : project.classes[static_cast<std::size_t>(anc)].methods)
        if (inheritable_method(m) && !m.is_static)
          from_ancestors.insert({m.name, static_cast<int>(m.parameters.size())});
    std::set<Signature> overridden, newly_declared;
    for (const MethodModel& m : cls.methods) {
      if (m.is_constructor || m.is_static || m.visibility == Visibility::Private) continue;
      Signature sig{m.name, static_cast<int>(m.parameters.size())};
      if (from_ancestors.count(sig)) overridden.insert(sig);
      else newly_declared.insert(sig);
    }
    overrides += static_cast<long>(overridden.size());
    long descendants = static_cast<long>(descendants_of(project, static_cast<int>(i)).size());
    potential += static_cast<long>(newly_declared.size()) * descendants;
  }
  if (potential > 0)
    mood.pf = static_cast<double>(overrides) / static_cast<double>(potential);

  return mood;
}

QmoodClassMetrics qmood_class_metrics(const ProjectModel& project, int class_index) {
  const ClassModel& cls = project.classes[static_cast<std::size_t>(class_index)];
  QmoodClassMetrics q;
  q.ana = static_cast<double>(ancestors_of(project, class_index).size());

  if (cls.attributes.empty()) {
    q.dam = 1.0; // nothing exposed
  } else {
    long hidden = 0;
    for (const AttributeModel& a : cls.attributes)
      hidden += (a.visibility == Visibility::Private ||
                 a.visibility == Visibility::Protected)
                    ? 1
                    : 0;
    q.dam = static_cast<double>(hidden) / static_cast<double>(cls.attributes.size());
  }

  // DCC: classes related via attribute types and parameter passing.
  std::set<int> related;
  for (const AttributeModel& a : cls.attributes)
    if (a.declared_type.resolved && *a.declared_type.resolved != class_index)
      related.insert(*a.declared_type.resolved);
  for (const MethodModel& m : cls.methods)
    for (const TypeRef& p : m.parameters)
      if (p.resolved && *p.resolved != class_index) related.insert(*p.resolved);
  q.dcc = static_cast<double>(related.size());

  // CAM over parameter-type names, each method set widened by the
  // class's own type.
  if (!cls.methods.empty()) {
    std::set<std::string> all_types{cls.qualified_name};
    double sum = 0;
    for (const MethodModel& m : cls.methods) {
      std::set<std::string> mine{cls.qualified_name};
      for (const TypeRef& p : m.parameters) {
        mine.insert(p.name);
        all_types.insert(p.name);
      }
      sum += static_cast<double>(mine.size());
    }
    q.cam = sum / (static_cast<double>(cls.methods.size()) *
                   static_cast<double>(all_types.size()));
  }

  for (const AttributeModel& a : cls.attributes)
    q.moa += a.declared_type.resolved ? 1 : 0;

  auto mi = inherited_methods(project, class_index);
  double avail = static_cast<double>(mi.size()) + static_cast<double>(cls.methods.size());
  q.mfa = avail > 0 ? static_cast<double>(mi.size()) / avail : 0.0;

  // NOP: abstract methods plus methods some descendant redefines.
  std::set<Signature> below;
  for (int desc : descendants_of(project, class_index))
    for (const MethodModel& m : project.classes[static_cast<std::size_t>(desc)].methods)
      if (!m.is_constructor)
        below.insert({m.name, static_cast<int>(m.parameters.size())});
  for (const MethodModel& m : cls.methods) {
    if (m.is_constructor) continue;
    if (m.is_abstract ||
        below.count({m.name, static_cast<int>(m.parameters.size())}))
      q.nop += 1;
  }

  for (const MethodModel& m : cls.methods)
    q.cis += m.visibility == Visibility::Public ? 1 : 0;
  q.nom = static_cast<double>(cls.methods.size());
  return q;
}

QmoodDesignProperties qmood_properties(const ProjectModel& project,
                                       const std::vector<QmoodClassMetrics>& per_class,
                                       const std::map<std::string, double>* baseline,
                                       std::vector<std::string>* diagnostics) {
  QmoodDesignProperties p;
  const std::size_t n = project.classes.size();
  if (n > 0) {
    p.design_size = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      bool root = true;
      for (const TypeRef& st : project.classes[i].supertypes)
        if (st.resolved) root = false;
      if (root && !descendants_of(project, static_cast<int>(i)).empty())
        p.hierarchies += 1;
    }
    double ana = 0, dam = 0, dcc = 0, cam = 0, moa = 0, mfa = 0, nop = 0, cis = 0,
           nom = 0;
    for (const QmoodClassMetrics& q : per_class) {
      ana += q.ana; dam += q.dam; dcc += q.dcc; cam += q.cam; moa += q.moa;
      mfa += q.mfa; nop += q.nop; cis += q.cis; nom += q.nom;
    }
    const double dn = static_cast<double>(per_class.size());
    p.abstraction = ana / dn;
    p.encapsulation = dam / dn;
    p.coupling = dcc / dn;
    p.cohesion = cam / dn;
    p.composition = moa / dn;
    p.inheritance = mfa / dn;
    p.polymorphism = nop / dn;
    p.messaging = cis / dn;
    p.complexity = nom / dn;
  }
  if (baseline) {
    for (const std::string& name : QmoodDesignProperties::property_names()) {
      auto it = baseline->find(name);
      if (it == baseline->end()) continue;
      if (it->second == 0.0) {
        p.set(name, 0.0);
        if (diagnostics)
          diagnostics->push_back("baseline divisor for " + name + " is zero");
        continue;
      }
      p.set(name, p.value_of(name) / it->second);
    }
  }
  return p;
}

QualityIndices quality_indices(const QmoodDesignProperties& p) {
  QualityIndices qi;
  qi.reusability = -0.25 * p.coupling + 0.25 * p.cohesion + 0.5 * p.messaging +
                   0.5 * p.design_size;
  qi.flexibility = 0.25 * p.encapsulation - 0.25 * p.coupling + 0.5 * p.composition +
                   0.5 * p.polymorphism;
  qi.understandability = -0.33 * p.abstraction + 0.33 * p.encapsulation -
                         0.33 * p.coupling + 0.33 * p.cohesion -
                         0.33 * p.polymorphism - 0.33 * p.complexity -
                         0.33 * p.design_size;
  qi.functionality = 0.12 * p.cohesion + 0.22 * p.polymorphism + 0.22 * p.messaging +
                     0.22 * p.design_size + 0.22 * p.hierarchies;
  qi.extendibility = 0.5 * p.abstraction - 0.5 * p.coupling + 0.5 * p.inheritance +
                     0.5 * p.polymorphism;
  qi.effectiveness = 0.2 * (p.abstraction + p.encapsulation + p.composition +
                            p.inheritance + p.polymorphism);
  qi.tqi = qi.reusability + qi.flexibility + qi.understandability + qi.functionality +
           qi.extendibility + qi.effectiveness;
  return qi;
}

} // namespace oodq
