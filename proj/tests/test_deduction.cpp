#include <doctest.h>

#include <algorithm>
#include <set>

#include "topo/deduction.hpp"
#include "topo/errors.hpp"

using namespace topo;
using Kind = ImplicationStatus::Kind;

namespace {

// T2 => US => T1, and {A, B} => C.
KnowledgeBase small_kb(std::vector<SpaceRecord> spaces = {}) {
  return KnowledgeBase({{"T2", "T2", ""}, {"US", "US", "P99"}, {"T1", "T1", ""}, {"A", "A", ""}, {"B", "B", ""},
                        {"C", "C", ""}},
                       {{{"T2"}, "US", "r1"}, {{"US"}, "T1", "r2"}, {{"A", "B"}, "C", "r3"}}, std::move(spaces));
}

SpaceRecord record(std::string name, std::vector<Trait> traits, Source source = Source::Paper) {
  return {std::move(name), "", source, "", std::move(traits)};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("forward chaining and contrapositives") {
  const ClosedKnowledgeBase closed = derive(small_kb({record("x", {{"T2", true, "given"}}),
                                                      record("y", {{"T1", false, "given"}}),
                                                      record("z", {{"A", true, "a"}, {"C", false, "c"}})}));
  const ClosedRecord* x = closed.find("x");
  REQUIRE(x != nullptr);
  CHECK(x->value("T1") == true);
  CHECK(x->traits.at("T1").chain.front() == "x: T2 [given]");
  CHECK(x->traits.at("T1").chain.back() == "US => T1 [r2]");
  CHECK_FALSE(x->traits.at("T1").asserted);
  CHECK(closed.find("y")->value("T2") == false);
  CHECK(closed.find("z")->value("B") == false);
  CHECK(closed.find("z")->value("T2") == std::nullopt);
  CHECK(derive(KnowledgeBase{}).records().empty());
}

TEST_CASE("contradictions carry both chains") {
  try {
    derive(small_kb({record("bad", {{"T2", true, "p"}, {"T1", false, "q"}})}));
    FAIL("expected Contradiction");
  } catch (const Contradiction& e) {
    CHECK(e.space() == "bad");
    CHECK_FALSE(e.positive_chain().empty());
    CHECK_FALSE(e.negative_chain().empty());
  }
}

TEST_CASE("status") {
  const ClosedKnowledgeBase closed = derive(small_kb({record("w", {{"US", true, "u"}, {"T2", false, "t"}})}));
  const ImplicationStatus up = status(closed, "T2", "T1");
  CHECK(up.kind == Kind::Implies);
  CHECK(up.chain == std::vector<std::string>{"T2 => US [r1]", "US => T1 [r2]"});
  CHECK(status(closed, "T1", "T1").kind == Kind::Implies);
  CHECK(status(closed, "T1", "T1").chain.empty());
  const ImplicationStatus down = status(closed, "US", "T2");
  CHECK(down.kind == Kind::NotImplies);
  CHECK(down.witness == "w");
  CHECK(status(closed, "A", "C").kind == Kind::Unknown);
  CHECK_THROWS_AS(status(closed, "T3", "T1"), UnknownProperty);
  CHECK(completeness_report(closed, std::vector<std::string>{"T1"}).empty());
}

TEST_CASE("malformed knowledge bases") {
  CHECK_THROWS_AS(KnowledgeBase::parse("{"), ParseError);
  try {
    KnowledgeBase::parse("{\n  \"properties\": [,]\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 18);
  }
  CHECK_THROWS_AS(KnowledgeBase::parse("[]"), MalformedKnowledgeBase);
  CHECK_THROWS_AS(KnowledgeBase::parse(R"({"properties":[],"implications":[]})"), MalformedKnowledgeBase);
  CHECK_THROWS_AS(KnowledgeBase::parse(R"({"properties":[{"id":"a"},{"id":"a"}],"implications":[],"spaces":[]})"),
                  MalformedKnowledgeBase);
  CHECK_THROWS_AS(
      KnowledgeBase::parse(R"({"properties":[{"id":"a"}],"implications":[{"if":["b"],"then":"a","ref":""}],"spaces":[]})"),
      MalformedKnowledgeBase);
  CHECK_THROWS_AS(
      KnowledgeBase::parse(R"({"properties":[{"id":"a"}],"implications":[{"if":["a"],"then":"a","ref":""}],"spaces":[]})"),
      MalformedKnowledgeBase);
  CHECK_THROWS_AS(KnowledgeBase::parse(R"({"properties":[{"id":"a"}],"implications":[],"spaces":[
      {"name":"s","source":"paper","traits":[{"prop":"a","value":true,"ref":""},{"prop":"a","value":false,"ref":""}]}]})"),
                  MalformedKnowledgeBase);
  CHECK_THROWS_AS(KnowledgeBase::parse(R"({"properties":[{"id":"a"}],"implications":[],"spaces":[
      {"name":"s","source":"rumour","traits":[]}]})"),
                  MalformedKnowledgeBase);
}

TEST_CASE("JSON round trip") {
  const KnowledgeBase kb = paper_kb();
  const KnowledgeBase again = KnowledgeBase::parse(kb.to_json_text());
  CHECK(again.to_json_text() == kb.to_json_text());
  CHECK(again.spaces().size() == kb.spaces().size());
  CHECK(again.implications().size() == kb.implications().size());
}

TEST_CASE("shipped knowledge base: statuses and witnesses") {
  const ClosedKnowledgeBase closed = derive(paper_kb());
  CHECK(status(closed, "T2", "T1").kind == Kind::Implies);
  const std::vector<std::tuple<std::string, std::string, std::string>> expected{
      {"US", "UCR", "S37"},       {"UCR", "UOK", "doubled-beta-omega"}, {"UR", "k2H", "URnotk2H"},
      {"UR", "RC", "URnotk2H"},   {"k1H", "UR", "S17"},                 {"UR", "sH", "S145"},
      {"UR", "lH", "S145"},       {"RC", "US", "S192"},
  };
  for (const auto& [p, q, w] : expected) {
    CAPTURE(p);
    CAPTURE(q);
    const ImplicationStatus st = status(closed, p, q);
    CHECK(st.kind == Kind::NotImplies);
    CHECK(st.witness == w);
  }
  CHECK(completeness_report(closed, diagram_properties()).empty());
  CHECK_FALSE(completeness_report(derive(paper_kb().paper_only()), diagram_properties()).empty());
}

TEST_CASE("shipped knowledge base: derivations") {
  const ClosedKnowledgeBase closed = derive(paper_kb());
  const ClosedRecord* s37 = closed.find("S37");
  REQUIRE(s37 != nullptr);
  CHECK(s37->value("T1") == true);
  for (const char* weaker_fails : {"UOK", "k2H", "wH", "KC", "k1H", "T2", "UR"}) CHECK(s37->value(weaker_fails) == false);
  CHECK(closed.find("S145")->value("k1H") == true);
  CHECK(closed.find("doubled-beta-omega")->value("T2") == false);
}

TEST_CASE("shipped knowledge base: provenance and sources") {
  const KnowledgeBase& kb = paper_kb();
  std::set<std::string> paper_names;
  for (const SpaceRecord& s : kb.spaces()) {
    if (s.source == Source::Paper) paper_names.insert(s.name);
    for (const Trait& t : s.traits) CHECK_FALSE(t.ref.empty());
  }
  CHECK(paper_names == std::set<std::string>{"S37", "doubled-beta-omega", "S17", "URnotk2H", "S145", "S192"});
  for (const Implication& imp : kb.implications()) CHECK_FALSE(imp.ref.empty());
  CHECK(kb.property("US").pibase == "P99");
  CHECK(kb.property("KC").pibase == "P100");
  CHECK_THROWS_AS(kb.property("nope"), UnknownProperty);
  CHECK(kb.paper_only().spaces().size() == 6);
}

TEST_CASE("DOT export") {
  const std::string diagram = export_dot(paper_kb(), diagram_properties());
  CHECK(diagram.rfind("digraph implications {\n", 0) == 0);
  CHECK(count(diagram, "[label=") == 13);
  CHECK(count(diagram, " -> ") == 16);
  CHECK(diagram.find("\"T2\" -> \"k1H\";") != std::string::npos);
  CHECK(diagram.find("\"T2\" -> \"T1\";") == std::string::npos);

  const std::string grid = export_dot(paper_kb(), convergence_grid_properties());
  CHECK(count(grid, "[label=") == 6);
  CHECK(count(grid, " -> ") == 7);

  CHECK(export_dot(paper_kb(), std::vector<std::string>{}) == "digraph implications {\n}\n");
  CHECK(export_dot(paper_kb(), diagram_properties()) == diagram);
}

TEST_CASE("census consistency") {
  for (std::size_t n : {3, 4}) {
    const CensusConsistencyReport report = check_census_consistency(paper_kb(), n);
    CHECK(report.ok());
    CHECK(report.spaces_checked > 0);
    CHECK_FALSE(report.checked_properties.empty());
  }
  CHECK(check_census_consistency(KnowledgeBase{}, 3).ok());
}

TEST_CASE("derive is idempotent and monotone") {
  const ClosedKnowledgeBase once = derive(paper_kb());
  const ClosedKnowledgeBase twice = derive(once.as_asserted());
  for (const ClosedRecord& r : once.records()) {
    const ClosedRecord* s = twice.find(r.name);
    REQUIRE(s != nullptr);
    CHECK(s->traits.size() == r.traits.size());
  }
  const ClosedKnowledgeBase fewer = derive(paper_kb().paper_only());
  for (const ClosedRecord& r : fewer.records()) {
    for (const auto& [prop, trait] : r.traits) CHECK(once.find(r.name)->value(prop) == trait.value);
  }
}

TEST_CASE("labels") {
  CHECK(to_string(Kind::Implies) == "IMPLIES");
  CHECK(to_string(Kind::NotImplies) == "NOT IMPLIES");
  CHECK(to_string(Kind::Unknown) == "UNKNOWN");
  CHECK(to_string(Source::External) == "external");
}
