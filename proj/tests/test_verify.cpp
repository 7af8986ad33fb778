#include <doctest.h>

#include <algorithm>

#include "topo/errors.hpp"
#include "topo/verify.hpp"

using namespace topo;

TEST_CASE("suite names are stable and unique") {
  const auto names = verification_suite_names();
  CHECK(names.size() == 30);
  auto sorted = names;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  CHECK(std::find(names.begin(), names.end(), "gen.characterization") != names.end());
}

TEST_CASE("every suite passes on the small census") {
  VerifyOptions options;
  options.max_points = 3;
  for (const SuiteResult& r : run_verification(options)) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.passed);
    CHECK(r.cases > 0);
  }
}

TEST_CASE("selection and errors") {
  VerifyOptions options;
  options.max_points = 2;
  const auto only = run_verification(options, {"conv.limits-antitone"});
  REQUIRE(only.size() == 1);
  CHECK(only[0].name == "conv.limits-antitone");
  CHECK_THROWS_AS(run_verification(options, {"no.such-suite"}), Error);
}

TEST_CASE("a refuted theory fails the census consistency suite") {
  const KnowledgeBase wrong({{"T0", "T0", ""}, {"T1", "T1", ""}}, {{{"T0"}, "T1", "false claim"}}, {});
  VerifyOptions options;
  options.max_points = 2;
  options.kb = &wrong;
  const auto r = run_verification(options, {"kb.census-consistency"});
  CHECK_FALSE(r[0].passed);
  CHECK(r[0].violations > 0);
  CHECK_FALSE(r[0].detail.empty());
}

TEST_CASE("results do not depend on threads or seed") {
  VerifyOptions a;
  a.max_points = 3;
  VerifyOptions b = a;
  b.threads = 4;
  b.seed = 12345;
  const auto ra = run_verification(a);
  const auto rb = run_verification(b);
  REQUIRE(ra.size() == rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i) {
    CHECK(ra[i].passed == rb[i].passed);
    CHECK(ra[i].violations == rb[i].violations);
  }
}
