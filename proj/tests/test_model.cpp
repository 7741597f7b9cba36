#include "errors.hpp"
#include "model.hpp"

#include <doctest.h>

using namespace oodq;

namespace {

ClassModel cls(std::string name, std::vector<std::string> supers = {}) {
  ClassModel c;
  c.qualified_name = std::move(name);
  c.line_span = {1, 1};
  for (auto& s : supers) c.supertypes.push_back(TypeRef{std::move(s), {}});
  return c;
}

} // namespace

TEST_CASE("direct name match resolves supertype") {
  auto p = resolve_project({cls("A"), cls("B", {"A"})});
  int b = p.index_of("B");
  REQUIRE(b >= 0);
  REQUIRE(p.classes[b].supertypes.size() == 1);
  CHECK(p.classes[b].supertypes[0].resolved == p.index_of("A"));
}

TEST_CASE("unresolvable supertype stays external") {
  auto p = resolve_project({cls("C", {"External"})});
  CHECK_FALSE(p.classes[0].supertypes[0].resolved.has_value());
}

TEST_CASE("two-cycle raises CyclicInheritance") {
  CHECK_THROWS_WITH_AS(resolve_project({cls("A", {"B"}), cls("B", {"A"})}),
                       doctest::Contains("cycle"), AnalysisError);
  try {
    resolve_project({cls("A", {"B"}), cls("B", {"A"})});
  } catch (const AnalysisError& e) {
    CHECK(e.code() == ErrorCode::CyclicInheritance);
    CHECK(std::string(e.what()).find("A") != std::string::npos);
    CHECK(std::string(e.what()).find("B") != std::string::npos);
  }
}

TEST_CASE("duplicate class names rejected") {
  try {
    resolve_project({cls("X"), cls("X")});
    FAIL("expected DuplicateClassName");
  } catch (const AnalysisError& e) {
    CHECK(e.code() == ErrorCode::DuplicateClassName);
  }
}

TEST_CASE("simple-name resolution prefers the same package, stays external on ties") {
  auto p = resolve_project({cls("a.Util"), cls("b.Util"), cls("a.User", {"Util"}),
                            cls("c.Other", {"Util"})});
  int user = p.index_of("a.User");
  CHECK(p.classes[user].supertypes[0].resolved == p.index_of("a.Util"));
  int other = p.index_of("c.Other");
  CHECK_FALSE(p.classes[other].supertypes[0].resolved.has_value());
}

TEST_CASE("subclasses are direct children in lexicographic order") {
  auto p = resolve_project({cls("A"), cls("C", {"A"}), cls("B", {"A"}), cls("D", {"B"})});
  auto kids = subclasses_of(p, p.index_of("A"));
  REQUIRE(kids.size() == 2);
  CHECK(p.classes[kids[0]].qualified_name == "B");
  CHECK(p.classes[kids[1]].qualified_name == "C");
  CHECK(subclasses_of(p, p.index_of("D")).empty());

  // chain: only the immediate child
  auto chain = resolve_project({cls("A"), cls("B", {"A"}), cls("C", {"B"})});
  auto direct = subclasses_of(chain, chain.index_of("A"));
  REQUIRE(direct.size() == 1);
  CHECK(chain.classes[direct[0]].qualified_name == "B");
}

TEST_CASE("ancestors: chain closure and interface union") {
  auto p = resolve_project({cls("A"), cls("B", {"A"}), cls("C", {"B"})});
  CHECK(ancestors_of(p, p.index_of("A")).empty());
  auto anc = ancestors_of(p, p.index_of("C"));
  REQUIRE(anc.size() == 2);
  CHECK(p.classes[anc[0]].qualified_name == "A");
  CHECK(p.classes[anc[1]].qualified_name == "B");

  ClassModel iface = cls("I");
  iface.kind = ClassKind::Interface;
  auto q = resolve_project({cls("A"), cls("B", {"A"}), iface, cls("D", {"B", "I"})});
  auto danc = ancestors_of(q, q.index_of("D"));
  REQUIRE(danc.size() == 3);
  CHECK(q.classes[danc[0]].qualified_name == "A");
  CHECK(q.classes[danc[1]].qualified_name == "B");
  CHECK(q.classes[danc[2]].qualified_name == "I");
}

TEST_CASE("ancestors never contain the class itself") {
  auto p = resolve_project({cls("A"), cls("B", {"A"}), cls("C", {"B", "A"})});
  for (std::size_t i = 0; i < p.classes.size(); ++i)
    for (int anc : ancestors_of(p, static_cast<int>(i)))
      CHECK(anc != static_cast<int>(i));
}

TEST_CASE("resolution is idempotent") {
  ClassModel a = cls("A");
  a.attributes.push_back({"x", TypeRef{"B", {}}, Visibility::Private, false});
  auto p = resolve_project({a, cls("B", {"A"})});
  ProjectModel again = p;
  resolve(again);
  CHECK(again.classes.size() == p.classes.size());
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    CHECK(again.classes[i].qualified_name == p.classes[i].qualified_name);
    for (std::size_t s = 0; s < p.classes[i].supertypes.size(); ++s)
      CHECK(again.classes[i].supertypes[s].resolved ==
            p.classes[i].supertypes[s].resolved);
    for (std::size_t s = 0; s < p.classes[i].attributes.size(); ++s)
      CHECK(again.classes[i].attributes[s].declared_type.resolved ==
            p.classes[i].attributes[s].declared_type.resolved);
  }
}

TEST_CASE("subclass/supertype duality") {
  auto p = resolve_project(
      {cls("A"), cls("B", {"A"}), cls("C", {"A"}), cls("D", {"C"}), cls("E")});
  for (std::size_t y = 0; y < p.classes.size(); ++y) {
    for (int x : subclasses_of(p, static_cast<int>(y))) {
      bool found = false;
      for (const TypeRef& st : p.classes[x].supertypes)
        if (st.resolved == static_cast<int>(y)) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("inheritance depth and descendants") {
  auto p = resolve_project({cls("A"), cls("B", {"A"}), cls("C", {"B"}), cls("X")});
  CHECK(inheritance_depth(p, p.index_of("A")) == 0);
  CHECK(inheritance_depth(p, p.index_of("C")) == 2);
  CHECK(descendants_of(p, p.index_of("A")).size() == 2);
  CHECK(descendants_of(p, p.index_of("X")).empty());
}
