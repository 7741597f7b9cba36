#include "model.hpp"

#include "errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace oodq {

const char* visibility_name(Visibility v) {
  switch (v) {
  case Visibility::Public: return "public";
  case Visibility::Protected: return "protected";
  case Visibility::Package: return "package";
  case Visibility::Private: return "private";
  }
  return "package";
}

bool visibility_from_name(const std::string& name, Visibility& out) {
  if (name == "public") out = Visibility::Public;
  else if (name == "protected") out = Visibility::Protected;
  else if (name == "package") out = Visibility::Package;
  else if (name == "private") out = Visibility::Private;
  else return false;
  return true;
}

const char* class_kind_name(ClassKind k) {
  switch (k) {
  case ClassKind::Class: return "class";
  case ClassKind::Interface: return "interface";
  case ClassKind::Enum: return "enum";
  }
  return "class";
}

bool class_kind_from_name(const std::string& name, ClassKind& out) {
  if (name == "class") out = ClassKind::Class;
  else if (name == "interface") out = ClassKind::Interface;
  else if (name == "enum") out = ClassKind::Enum;
  else return false;
  return true;
}

std::string MethodModel::signature() const {
  std::string sig = name;
  sig.push_back('(');
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    if (i) sig.push_back(',');
    sig += parameters[i].name;
  }
  sig.push_back(')');
  return sig;
}

std::string ClassModel::simple_name() const {
  auto pos = qualified_name.rfind('.');
  return pos == std::string::npos ? qualified_name : qualified_name.substr(pos + 1);
}

std::string ClassModel::package() const {
  auto pos = qualified_name.rfind('.');
  return pos == std::string::npos ? std::string{} : qualified_name.substr(0, pos);
}

int ProjectModel::index_of(const std::string& qualified_name) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].qualified_name == qualified_name) return static_cast<int>(i);
  return -1;
}

namespace {

class Resolver {
public:
  explicit Resolver(std::vector<ClassModel>& classes) : classes_(classes) {
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      const auto& qn = classes_[i].qualified_name;
      if (!by_qualified_.emplace(qn, static_cast<int>(i)).second)
        fail(ErrorCode::DuplicateClassName, "duplicate class name: " + qn);
      by_simple_[classes_[i].simple_name()].push_back(static_cast<int>(i));
    }
  }

  void resolve_all() {
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      ClassModel& cls = classes_[i];
      const std::string pkg = cls.package();
      auto fix = [&](TypeRef& ref) { resolve_ref(ref, pkg); };
      for (TypeRef& st : cls.supertypes) fix(st);
      for (AttributeModel& attr : cls.attributes) fix(attr.declared_type);
      for (MethodModel& m : cls.methods) {
        for (TypeRef& p : m.parameters) fix(p);
        if (m.return_type) fix(*m.return_type);
        for (TypeRef& t : m.local_decl_types) fix(t);
        for (CallSite& call : m.invocations)
          if (call.receiver_type) fix(*call.receiver_type);
      }
    }
  }

  void check_acyclic() const {
    // 0 = unvisited, 1 = on stack, 2 = done
    std::vector<int> state(classes_.size(), 0);
    std::vector<int> stack;
    for (std::size_t i = 0; i < classes_.size(); ++i)
      if (state[i] == 0) visit(static_cast<int>(i), state, stack);
  }

private:
  void resolve_ref(TypeRef& ref, const std::string& referrer_package) {
    ref.resolved.reset();
    if (ref.name.empty()) return;
    if (auto it = by_qualified_.find(ref.name); it != by_qualified_.end()) {
      ref.resolved = it->second;
      return;
    }
    if (ref.name.find('.') != std::string::npos) return; // qualified but unknown
    auto it = by_simple_.find(ref.name);
    if (it == by_simple_.end()) return;
    const auto& candidates = it->second;
    if (candidates.size() == 1) {
      ref.resolved = candidates.front();
      return;
    }
    int same_package = -1;
    int same_package_hits = 0;
    for (int idx : candidates) {
      if (classes_[idx].package() == referrer_package) {
        same_package = idx;
        ++same_package_hits;
      }
    }
    if (same_package_hits == 1) ref.resolved = same_package;
    // ties stay external
  }

  void visit(int idx, std::vector<int>& state, std::vector<int>& stack) const {
    state[idx] = 1;
    stack.push_back(idx);
    for (const TypeRef& st : classes_[idx].supertypes) {
      if (!st.resolved) continue;
      int next = *st.resolved;
      if (state[next] == 1) {
        std::ostringstream msg;
        msg << "inheritance cycle: ";
        auto from = std::find(stack.begin(), stack.end(), next);
        for (auto it = from; it != stack.end(); ++it)
          msg << classes_[*it].qualified_name << " -> ";
        msg << classes_[next].qualified_name;
        fail(ErrorCode::CyclicInheritance, msg.str());
      }
      if (state[next] == 0) visit(next, state, stack);
    }
    stack.pop_back();
    state[idx] = 2;
  }

  std::vector<ClassModel>& classes_;
  std::map<std::string, int> by_qualified_;
  std::map<std::string, std::vector<int>> by_simple_;
};

} // namespace

ProjectModel resolve_project(std::vector<ClassModel> classes, std::string name,
                             std::string source_root, LineTally source_tally) {
  Resolver resolver(classes);
  resolver.resolve_all();
  resolver.check_acyclic();
  ProjectModel project;
  project.name = std::move(name);
  project.source_root = std::move(source_root);
  project.classes = std::move(classes);
  project.source_tally = source_tally;
  return project;
}

void resolve(ProjectModel& project) {
  ProjectModel fresh = resolve_project(std::move(project.classes), project.name,
                                       project.source_root, project.source_tally);
  project = std::move(fresh);
}

std::vector<int> subclasses_of(const ProjectModel& project, int class_index) {
  std::vector<int> children;
  for (std::size_t i = 0; i < project.classes.size(); ++i) {
    for (const TypeRef& st : project.classes[i].supertypes) {
      if (st.resolved && *st.resolved == class_index) {
        children.push_back(static_cast<int>(i));
        break;
      }
    }
  }
  std::sort(children.begin(), children.end(), [&](int a, int b) {
    return project.classes[a].qualified_name < project.classes[b].qualified_name;
  });
  return children;
}

std::vector<int> ancestors_of(const ProjectModel& project, int class_index) {
  std::set<int> seen;
  std::vector<int> work{class_index};
  while (!work.empty()) {
    int current = work.back();
    work.pop_back();
    for (const TypeRef& st : project.classes[current].supertypes) {
      if (!st.resolved) continue;
      if (*st.resolved == class_index) continue;
      if (seen.insert(*st.resolved).second) work.push_back(*st.resolved);
    }
  }
  std::vector<int> result(seen.begin(), seen.end());
  std::sort(result.begin(), result.end(), [&](int a, int b) {
    return project.classes[a].qualified_name < project.classes[b].qualified_name;
  });
  return result;
}

std::vector<int> descendants_of(const ProjectModel& project, int class_index) {
  std::set<int> seen;
  for (std::size_t i = 0; i < project.classes.size(); ++i) {
    if (static_cast<int>(i) == class_index) continue;
    for (int anc : ancestors_of(project, static_cast<int>(i))) {
      if (anc == class_index) {
        seen.insert(static_cast<int>(i));
        break;
      }
    }
  }
  return {seen.begin(), seen.end()};
}

int inheritance_depth(const ProjectModel& project, int class_index) {
  int depth = 0;
  for (const TypeRef& st : project.classes[class_index].supertypes) {
    if (!st.resolved || *st.resolved == class_index) continue;
    depth = std::max(depth, 1 + inheritance_depth(project, *st.resolved));
  }
  return depth;
}

} // namespace oodq
