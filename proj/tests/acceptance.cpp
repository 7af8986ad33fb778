// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include "support.hpp"
#include "topo/axioms.hpp"
#include "topo/convergence.hpp"
#include "topo/deduction.hpp"
#include "topo/enumerate.hpp"
#include "topo/generated.hpp"
#include "topo/verify.hpp"

using namespace topo;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

bool finer(const FinSpace& fine, const FinSpace& coarse) {
  for (PointSet u : coarse.opens()) {
    if (!fine.is_open(u)) return false;
  }
  return true;
}

std::vector<TestClass> builtin_classes() { return {TestClass::P(), TestClass::A(), TestClass::Sfin()}; }

Outcome census_counts() {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t expected[] = {1, 1, 4, 29, 355};
  std::string detail = "counts";
  bool ok = true;
  for (std::size_t n = 0; n <= 4; ++n) {
    const std::size_t got = enumerate_topologies(n).size();
    detail += " " + std::to_string(got);
    ok &= got == expected[n];
    if (n <= 3) ok &= oracle::all_topologies(n).size() == got;
  }
  VerifyOptions options;
  options.max_points = 4;
  for (const SuiteResult& r : run_verification(options)) ok &= r.passed;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok &= secs < 60.0;
  return {ok, detail + "; brute force agrees for n <= 3; census plus full suite run " + std::to_string(secs).substr(0, 5) +
                  " s"};
}

Outcome characterisations(const std::vector<FinSpace>& spaces) {
  std::size_t bad = 0;
  for (const FinSpace& x : spaces) {
    bad += is_c_hausdorff(x, TestClass::P()) != is_t0(x);
    bad += is_c_hausdorff(x, TestClass::A()) != is_t1(x);
    bad += is_c_hausdorff(x, TestClass::Sfin()) != is_us(x);
    bad += is_c_generated(x, TestClass::P()) != is_partition_topology(x);
    bad += !is_c_generated(x, TestClass::A());
  }
  return {bad == 0, std::to_string(spaces.size()) + " spaces, " + std::to_string(bad) + " violations"};
}

Outcome coreflection_laws(const std::vector<FinSpace>& spaces) {
  std::size_t bad = 0;
  std::size_t maps = 0;
  const TestClass pa = TestClass::explicit_class("PA", {FinSpace::indiscrete(2), FinSpace::sierpinski()});
  for (const FinSpace& x : spaces) {
    for (const TestClass& c : builtin_classes()) {
      const FinSpace xc = coreflection(x, c);
      bad += !finer(xc, x);
      bad += coreflection(xc, c) != xc;
    }
    // {P} and {A} are both contained in {P, A}.
    const FinSpace both = coreflection(x, pa);
    bad += !finer(coreflection(x, TestClass::P()), both);
    bad += !finer(coreflection(x, TestClass::A()), both);
  }
  for (const FinSpace& x : spaces) {
    if (x.size() > 2) continue;
    for (const FinSpace& y : spaces) {
      if (y.size() > 2) continue;
      for (const TestClass& c : builtin_classes()) {
        const FinSpace xc = coreflection(x, c);
        const FinSpace yc = coreflection(y, c);
        for_each_continuous_map(x, y, [&](const std::vector<Point>& f) {
          ++maps;
          bad += !is_continuous(xc, yc, f);
          return true;
        });
      }
    }
  }
  return {bad == 0, std::to_string(spaces.size()) + " spaces x 3 classes, " + std::to_string(maps) +
                        " maps checked for functoriality, " + std::to_string(bad) + " violations"};
}

Outcome contravariance(const std::vector<FinSpace>& spaces) {
  std::size_t bad = is_c_generated(FinSpace::indiscrete(2), TestClass::A()) ? 0 : 1;
  std::size_t a_hausdorff = 0;
  for (const FinSpace& x : spaces) {
    if (!is_c_hausdorff(x, TestClass::A())) continue;
    ++a_hausdorff;
    bad += !is_c_hausdorff(x, TestClass::P());
  }
  return {bad == 0, std::to_string(a_hausdorff) + " A-Hausdorff spaces, " + std::to_string(bad) + " violations"};
}

Outcome finite_collapse(const std::vector<FinSpace>& spaces) {
  std::size_t bad = 0;
  for (const FinSpace& x : spaces) {
    const bool d = is_discrete(x);
    for (bool v : {is_us(x), is_ur(x), is_ucr(x), is_kc(x), is_t1(x), is_t2(x), is_lh(x), is_sh(x), is_rc(x),
                   is_sequentially_discrete(x)}) {
      bad += v != d;
    }
  }
  return {bad == 0, std::to_string(spaces.size()) + " spaces, " + std::to_string(bad) + " violations"};
}

Outcome diagram_soundness() {
  const CensusConsistencyReport report = check_census_consistency(paper_kb(), 4);
  return {report.ok(), std::to_string(report.spaces_checked) + " spaces, " +
                           std::to_string(report.checked_properties.size()) + " checked properties, " +
                           std::to_string(report.contradictions.size()) + " contradictions"};
}

Outcome kb_reproduction() {
  using Kind = ImplicationStatus::Kind;
  const ClosedKnowledgeBase closed = derive(paper_kb());
  bool ok = status(closed, "T2", "T1").kind == Kind::Implies;
  const std::vector<std::tuple<std::string, std::string, std::string>> expected{
      {"US", "UCR", "S37"},     {"UCR", "UOK", "doubled-beta-omega"}, {"UR", "k2H", "URnotk2H"},
      {"UR", "RC", "URnotk2H"}, {"k1H", "UR", "S17"},                 {"UR", "sH", "S145"},
      {"UR", "lH", "S145"},     {"RC", "US", "S192"},
  };
  std::string detail;
  for (const auto& [p, q, w] : expected) {
    const ImplicationStatus st = status(closed, p, q);
    if (st.kind != Kind::NotImplies || st.witness != w) {
      ok = false;
      detail += p + "/" + q + " gave " + to_string(st.kind) + " " + st.witness + "; ";
    }
  }
  const std::size_t unknown = completeness_report(closed, diagram_properties()).size();
  const std::size_t paper_unknown = completeness_report(derive(paper_kb().paper_only()), diagram_properties()).size();
  ok &= unknown == 0;
  return {ok, detail + "9 statuses checked, " + std::to_string(unknown) + " unknown pairs; paper-only records leave " +
                  std::to_string(paper_unknown) + " (reported)"};
}

Outcome dot_export() {
  const std::string diagram = export_dot(paper_kb(), diagram_properties());
  const std::string grid = export_dot(paper_kb(), convergence_grid_properties());
  const std::size_t dn = count_of(diagram, "[label=");
  const std::size_t de = count_of(diagram, " -> ");
  const std::size_t gn = count_of(grid, "[label=");
  const std::size_t ge = count_of(grid, " -> ");
  return {dn == 13 && de == 16 && gn == 6 && ge == 7,
          "diagram " + std::to_string(dn) + " nodes / " + std::to_string(de) + " edges, grid " + std::to_string(gn) +
              " nodes / " + std::to_string(ge) + " edges"};
}

Outcome convergence_oracle() {
  std::size_t checked = 0;
  std::size_t bad = 0;
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const oracle::Family& f : oracle::all_topologies(n)) {
      const FinSpace x = space_of(n, f);
      for (std::size_t period = 1; period <= n; ++period) {
        for (const auto& cycle : oracle::all_functions(period, n)) {
          oracle::Mask values = 0;
          for (unsigned v : cycle) values |= oracle::Mask{1} << v;
          ++checked;
          bad += limits(x, set_of(values)).bits() != oracle::sequence_limits(n, f, cycle);
        }
      }
    }
  }
  return {bad == 0, std::to_string(checked) + " periodic sequences, " + std::to_string(bad) + " disagreements"};
}

}  // namespace

int main() {
  const std::vector<FinSpace> spaces = census(4);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"census counts", census_counts},
      {"characterisations", [&] { return characterisations(spaces); }},
      {"coreflection laws", [&] { return coreflection_laws(spaces); }},
      {"contravariance instance", [&] { return contravariance(spaces); }},
      {"finite collapse", [&] { return finite_collapse(spaces); }},
      {"diagram soundness", diagram_soundness},
      {"knowledge base reproduction", kb_reproduction},
      {"DOT export", dot_export},
      {"convergence oracle", convergence_oracle},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.passed ? 0 : 1;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << o.detail
              << ")\n";
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
