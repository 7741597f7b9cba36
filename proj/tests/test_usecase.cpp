#include "errors.hpp"
#include "usecase.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace oodq;

namespace {

ScenarioModel scenario(std::string id, std::vector<std::string> messages) {
  ScenarioModel s;
  s.id = std::move(id);
  for (auto& m : messages) {
    ScenarioEvent e;
    e.name = std::move(m);
    e.sender = "User";
    e.receiver = "System";
    s.concepts = {"User", "System"};
    s.events.push_back(std::move(e));
  }
  return s;
}

} // namespace

TEST_CASE("scenario similarity: identity, disjoint, single shared message") {
  auto a = scenario("a", {"login", "order", "pay"});
  auto b = scenario("b", {"browse", "compare"});
  auto c = scenario("c", {"pay", "ship", "bill", "note", "close"});
  CHECK(scenario_similarity(a, a));
  CHECK_FALSE(scenario_similarity(a, b));
  CHECK(scenario_similarity(a, c)); // one shared of five
  // symmetry
  CHECK(scenario_similarity(a, c) == scenario_similarity(c, a));
  CHECK(scenario_similarity(a, b) == scenario_similarity(b, a));
  // higher overlap requirement
  CHECK_FALSE(scenario_similarity(a, c, 2));
}

TEST_CASE("cl_uc: shared pair, dissimilar trio, single scenario") {
  UseCase pair{"uc", {scenario("a", {"x", "y"}), scenario("b", {"y", "z"})}};
  CHECK(cl_uc(pair) == doctest::Approx(1.0));

  UseCase trio{"uc", {scenario("a", {"x"}), scenario("b", {"y"}), scenario("c", {"z"})}};
  CHECK(cl_uc(trio) == doctest::Approx(0.0));

  UseCase single{"uc", {scenario("a", {"x"})}};
  CHECK(cl_uc(single) == doctest::Approx(1.0));
  UseCase none{"uc", {}};
  CHECK(cl_uc(none) == doctest::Approx(1.0));
}

TEST_CASE("cl_ucm: disjoint, fully crosscut, one-in-four") {
  UseCaseModel disjoint;
  disjoint.use_cases.push_back({"u1", {scenario("a", {"x"}), scenario("b", {"x2"})}});
  disjoint.use_cases.push_back({"u2", {scenario("c", {"y"}), scenario("d", {"y2"})}});
  CHECK(cl_ucm(disjoint) == doctest::Approx(1.0));

  UseCaseModel crosscut;
  crosscut.use_cases.push_back({"u1", {scenario("a", {"m"}), scenario("b", {"m"})}});
  crosscut.use_cases.push_back({"u2", {scenario("c", {"m"}), scenario("d", {"m"})}});
  CHECK(cl_ucm(crosscut) == doctest::Approx(0.0));

  // 2x2 scenarios, exactly one of the four cross pairs similar
  UseCaseModel quarter;
  quarter.use_cases.push_back({"u1", {scenario("a", {"shared"}), scenario("b", {"b1"})}});
  quarter.use_cases.push_back({"u2", {scenario("c", {"shared"}), scenario("d", {"d1"})}});
  CHECK(cl_ucm(quarter) == doctest::Approx(0.75));

  UseCaseModel one_sided;
  one_sided.use_cases.push_back({"u1", {scenario("a", {"x"})}});
  CHECK(cl_ucm(one_sided) == doctest::Approx(1.0));
}

TEST_CASE("cohesion is invariant under scenario reordering") {
  UseCase uc{"uc",
             {scenario("a", {"x", "y"}), scenario("b", {"y"}), scenario("c", {"q"})}};
  UseCase shuffled{"uc",
                   {scenario("c", {"q"}), scenario("a", {"x", "y"}), scenario("b", {"y"})}};
  CHECK(cl_uc(uc) == doctest::Approx(cl_uc(shuffled)));
}

TEST_CASE("adding a similar cross pair never increases cl_ucm") {
  UseCaseModel m;
  m.use_cases.push_back({"u1", {scenario("a", {"x"}), scenario("b", {"y"})}});
  m.use_cases.push_back({"u2", {scenario("c", {"z"})}});
  double before = cl_ucm(m);
  m.use_cases[1].scenarios.push_back(scenario("d", {"x"})); // similar to a
  double after = cl_ucm(m);
  CHECK(after <= before);
}

TEST_CASE("coupling factor: extremes, the 1/6 example, domain errors") {
  DomainModel none;
  none.concepts = {"A", "B", "C"};
  CHECK(coupling_factor(none) == doctest::Approx(0.0));

  DomainModel complete;
  complete.concepts = {"A", "B"};
  complete.client_relations = {{"A", "B"}, {"B", "A"}};
  CHECK(coupling_factor(complete) == doctest::Approx(1.0));

  DomainModel one;
  one.concepts = {"A", "B", "C"};
  one.client_relations = {{"A", "B"}};
  CHECK(coupling_factor(one) == doctest::Approx(1.0 / 6.0));

  DomainModel tiny;
  tiny.concepts = {"A"};
  CHECK_THROWS_AS(coupling_factor(tiny), AnalysisError);
}

TEST_CASE("results stay within [0,1] on random models") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> msg(0, 5);
  for (int round = 0; round < 60; ++round) {
    UseCaseModel m;
    int ucs = count(rng);
    for (int u = 0; u < ucs; ++u) {
      UseCase uc;
      uc.id = "u" + std::to_string(u);
      int scs = count(rng) - 1;
      for (int s = 0; s < scs; ++s) {
        std::vector<std::string> msgs;
        int k = count(rng);
        for (int i = 0; i < k; ++i) msgs.push_back("m" + std::to_string(msg(rng)));
        uc.scenarios.push_back(scenario("s" + std::to_string(s), msgs));
      }
      m.use_cases.push_back(std::move(uc));
      double uc_value = cl_uc(m.use_cases.back());
      CHECK(uc_value >= 0.0);
      CHECK(uc_value <= 1.0);
    }
    double model_value = cl_ucm(m);
    CHECK(model_value >= 0.0);
    CHECK(model_value <= 1.0);
  }
}

TEST_CASE("JSON loader: round structure and schema violations") {
  std::string doc = R"({
    "use_cases": [
      {"id": "place-order", "scenarios": [
        {"id": "main", "events": [
          {"name": "submit", "from": "Customer", "to": "OrderSystem"},
          {"name": "confirm", "from": "OrderSystem", "to": "Customer"}
        ]},
        {"id": "bad-product", "events": [
          {"name": "submit", "from": "Customer", "to": "OrderSystem"},
          {"name": "reject", "from": "OrderSystem", "to": "Customer"}
        ]}
      ]},
      {"id": "view-order", "scenarios": [
        {"id": "main", "events": [
          {"name": "query", "from": "Teller", "to": "OrderSystem"}
        ]}
      ]}
    ],
    "relations": [{"kind": "include", "from": "view-order", "to": "place-order"}],
    "domain": {
      "concepts": ["Customer", "OrderSystem", "Teller"],
      "client_relations": [{"client": "Teller", "supplier": "OrderSystem"}]
    }
  })";
  auto model = load_use_case_model(doc);
  REQUIRE(model.use_cases.size() == 2);
  CHECK(model.use_cases[0].scenarios.size() == 2);
  CHECK(cl_uc(model.use_cases[0]) == doctest::Approx(1.0)); // share "submit"
  CHECK(model.domain.concepts.size() == 3);
  CHECK(coupling_factor(model.domain) == doctest::Approx(1.0 / 6.0));

  CHECK_THROWS_AS(load_use_case_model("{}"), AnalysisError);
  CHECK_THROWS_AS(load_use_case_model("not json"), AnalysisError);
  try {
    load_use_case_model(R"({"use_cases": [{"id": "u"}],
      "relations": [{"kind": "include", "from": "u", "to": "ghost"}]})");
    FAIL("expected SchemaViolation");
  } catch (const AnalysisError& e) {
    CHECK(e.code() == ErrorCode::SchemaViolation);
    CHECK(std::string(e.what()).find("/relations/0") != std::string::npos);
  }
}

TEST_CASE("YAML loader parses the same schema") {
  std::string doc =
      "use_cases:\n"
      "  - id: u1\n"
      "    scenarios:\n"
      "      - id: s1\n"
      "        events:\n"
      "          - {name: ping, from: A, to: B}\n"
      "  - id: u2\n"
      "    scenarios:\n"
      "      - id: s2\n"
      "        events:\n"
      "          - {name: ping, from: B, to: C}\n"
      "domain:\n"
      "  concepts: [A, B, C]\n"
      "  client_relations:\n"
      "    - {client: A, supplier: B}\n";
  auto model = load_use_case_model(doc, /*yaml=*/true);
  REQUIRE(model.use_cases.size() == 2);
  CHECK(cl_ucm(model) == doctest::Approx(0.0)); // the one cross pair is similar
  CHECK(coupling_factor(model.domain) == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("cohesion report JSON carries per-use-case and model values") {
  UseCaseModel m;
  m.use_cases.push_back({"alpha", {scenario("a", {"x"}), scenario("b", {"x"})}});
  m.use_cases.push_back({"beta", {scenario("c", {"y"})}});
  m.domain.concepts = {"A", "B", "C"};
  m.domain.client_relations = {{"A", "B"}};
  std::string out = cohesion_report_json(m);
  CHECK(out.find("\"alpha\": 1.0") != std::string::npos);
  CHECK(out.find("cl_ucm") != std::string::npos);
  CHECK(out.find("coupling_factor") != std::string::npos);
}
