#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "topo/deduction.hpp"
#include "topo/dsl.hpp"
#include "topo/enumerate.hpp"
#include "topo/errors.hpp"
#include "topo/generated.hpp"
#include "topo/properties.hpp"
#include "topo/verify.hpp"

namespace topoctl {

namespace {

using json = nlohmann::ordered_json;

// Thrown for bad arguments that CLI11 cannot see (unknown ids, bounds).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      const bool same = std::tolower(static_cast<unsigned char>(a[i - 1])) ==
                        std::tolower(static_cast<unsigned char>(b[j - 1]));
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (same ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

[[noreturn]] void unknown_id(const std::string& kind, const std::string& id, const std::vector<std::string>& known) {
  std::string msg = "unknown " + kind + " '" + id + "'";
  const auto close = suggestions(id, known);
  if (!close.empty()) {
    msg += "; did you mean";
    for (std::size_t i = 0; i < close.size(); ++i) msg += (i == 0 ? " " : ", ") + close[i];
    msg += "?";
  }
  msg += "\nknown " + kind + " ids:";
  for (const std::string& k : known) msg += " " + k;
  throw UsageError(msg);
}

std::size_t census_bound() {
  const char* env = std::getenv("TOPOCTL_MAX_POINTS");
  if (env == nullptr || *env == '\0') return topo::kDefaultCensusBound;
  const std::string text(env);
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 3) {
    throw UsageError("TOPOCTL_MAX_POINTS must be a non-negative integer, got '" + text + "'");
  }
  const std::size_t v = std::stoul(text);
  if (v > topo::kCensusHardLimit) {
    throw UsageError("TOPOCTL_MAX_POINTS=" + text + " is refused; the hard limit is " +
                     std::to_string(topo::kCensusHardLimit));
  }
  return v;
}

void require_within_bound(std::size_t n, std::size_t bound) {
  if (n > bound) {
    throw UsageError(std::to_string(n) + " points exceeds the census bound of " + std::to_string(bound) +
                     (bound < topo::kCensusHardLimit ? " (raise it with TOPOCTL_MAX_POINTS, at most 5)" : ""));
  }
}

json neighbourhoods_json(const topo::FinSpace& x) {
  json out = json::array();
  for (topo::PointSet nb : x.neighbourhoods()) {
    json row = json::array();
    for (topo::Point p : nb) row.push_back(p);
    out.push_back(row);
  }
  return out;
}

json opens_json(const topo::FinSpace& x) {
  json out = json::array();
  for (topo::PointSet u : x.opens()) {
    json row = json::array();
    for (topo::Point p : u) row.push_back(p);
    out.push_back(row);
  }
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// SET is "diagram", "grid", "all" or a comma-separated id list.
std::vector<std::string> resolve_props(const topo::KnowledgeBase& kb, const std::string& set) {
  std::vector<std::string> ids;
  if (set == "diagram") {
    ids = topo::diagram_properties();
  } else if (set == "grid") {
    ids = topo::convergence_grid_properties();
  } else if (set == "all") {
    for (const topo::Property& p : kb.properties()) ids.push_back(p.id);
  } else {
    ids = split_commas(set);
  }
  if (ids.empty()) throw UsageError("--props names no properties");
  std::vector<std::string> known;
  for (const topo::Property& p : kb.properties()) known.push_back(p.id);
  for (const std::string& id : ids) {
    if (!kb.has_property(id)) unknown_id("property", id, known);
  }
  return ids;
}

void require_property(const topo::KnowledgeBase& kb, const std::string& id) {
  if (kb.has_property(id)) return;
  std::vector<std::string> known;
  for (const topo::Property& p : kb.properties()) known.push_back(p.id);
  unknown_id("property", id, known);
}

void print_chain(std::ostream& out, const std::string& title, const std::vector<std::string>& chain) {
  out << "  " << title << ":\n";
  for (const std::string& step : chain) out << "    " << step << "\n";
}

topo::SpaceDocument load_doc(const std::string& path) {
  try {
    return topo::load_document(path);
  } catch (const topo::ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

topo::KnowledgeBase load_kb(const std::string& path) {
  try {
    return topo::KnowledgeBase::load(path);
  } catch (const topo::ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string file;
  std::vector<std::string> properties;
  std::string space;
};

int cmd_check(const CheckArgs& a, bool as_json, std::ostream& out) {
  std::vector<const topo::FiniteCheck*> checks;
  if (a.properties.empty()) {
    for (const topo::FiniteCheck& c : topo::finite_checks()) checks.push_back(&c);
  } else {
    std::vector<std::string> known;
    for (const topo::FiniteCheck& c : topo::finite_checks()) known.push_back(c.id);
    for (const std::string& id : a.properties) {
      const topo::FiniteCheck* c = topo::find_check(id);
      if (c == nullptr) unknown_id("property", id, known);
      checks.push_back(c);
    }
  }
  const topo::SpaceDocument doc = load_doc(a.file);
  std::vector<const topo::NamedSpace*> spaces;
  if (!a.space.empty()) {
    const topo::NamedSpace* s = doc.find_space(a.space);
    if (s == nullptr) {
      std::vector<std::string> known;
      for (const auto& ns : doc.spaces) known.push_back(ns.name);
      unknown_id("space", a.space, known);
    }
    spaces.push_back(s);
  } else {
    for (const auto& ns : doc.spaces) spaces.push_back(&ns);
  }

  json report = json::array();
  for (const topo::NamedSpace* s : spaces) {
    if (!as_json) out << "space " << s->name << " (" << s->space.size() << " points)\n";
    json props = json::object();
    for (const topo::FiniteCheck* c : checks) {
      std::optional<bool> value;
      try {
        value = c->check(s->space);
      } catch (const topo::SpaceTooLarge&) {
        // too large for this checker's exhaustive search
      }
      if (as_json) {
        props[c->id] = value ? json(*value) : json(nullptr);
      } else {
        out << "  " << pad(c->id, 18) << (value ? (*value ? "true" : "false") : "n/a (too large)") << "\n";
      }
    }
    report.push_back({{"space", s->name}, {"points", s->space.size()}, {"properties", props}});
  }
  if (as_json) out << json{{"spaces", report}}.dump(2) << "\n";
  return kExitOk;
}

struct CoreflectArgs {
  std::string file;
  std::string class_name;
  std::string space;
};

int cmd_coreflect(const CoreflectArgs& a, bool as_json, std::ostream& out) {
  const topo::SpaceDocument doc = load_doc(a.file);
  std::optional<topo::TestClass> cls;
  try {
    cls = topo::resolve_class(doc, a.class_name);
  } catch (const topo::InvalidClass&) {
    std::vector<std::string> known{"P", "A", "Sfin"};
    for (const topo::ClassDecl& c : doc.classes) known.push_back(c.name);
    unknown_id("class", a.class_name, known);
  }
  json report = json::array();
  bool first = true;
  for (const topo::NamedSpace& s : doc.spaces) {
    if (!a.space.empty() && s.name != a.space) continue;
    const topo::FinSpace coreflected = topo::coreflection(s.space, *cls);
    const bool generated = coreflected == s.space;
    if (as_json) {
      report.push_back({{"space", s.name},
                        {"class", a.class_name},
                        {"generated", generated},
                        {"opens", opens_json(coreflected)}});
    } else {
      if (!first) out << "\n";
      out << "# coreflection of " << s.name << " onto class " << a.class_name
          << (generated ? " (unchanged, already generated)" : "") << "\n";
      out << topo::format_space(s.name, coreflected);
    }
    first = false;
  }
  if (first && !a.space.empty()) {
    std::vector<std::string> known;
    for (const auto& ns : doc.spaces) known.push_back(ns.name);
    unknown_id("space", a.space, known);
  }
  if (as_json) out << json{{"coreflections", report}}.dump(2) << "\n";
  return kExitOk;
}

struct CensusArgs {
  std::size_t n = 0;
  bool count_only = false;
  bool up_to_homeomorphism = false;
};

int cmd_census(const CensusArgs& a, bool as_json, std::ostream& out) {
  const std::size_t bound = census_bound();
  require_within_bound(a.n, bound);
  std::vector<topo::FinSpace> spaces = topo::enumerate_topologies(a.n, bound);
  if (a.up_to_homeomorphism) spaces = topo::homeomorphism_classes(spaces);
  if (as_json) {
    json report{{"points", a.n}, {"up_to_homeomorphism", a.up_to_homeomorphism}, {"count", spaces.size()}};
    if (!a.count_only) {
      json list = json::array();
      for (const topo::FinSpace& s : spaces) list.push_back(neighbourhoods_json(s));
      report["neighbourhoods"] = list;
    }
    out << report.dump(2) << "\n";
    return kExitOk;
  }
  if (a.count_only) {
    out << spaces.size() << "\n";
    return kExitOk;
  }
  out << "# " << spaces.size() << (a.up_to_homeomorphism ? " homeomorphism classes of" : "") << " topologies on "
      << a.n << " points\n";
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    out << "\n" << topo::format_space("t" + std::to_string(a.n) + "_" + std::to_string(i), spaces[i]);
  }
  return kExitOk;
}

struct VerifyArgs {
  std::size_t max_points = topo::VerifyOptions::kDefaultVerifyPoints;
  std::size_t threads = 1;
  std::uint64_t seed = 1;
  std::string kb;
  std::vector<std::string> suites;
};

int cmd_verify(const VerifyArgs& a, bool as_json, std::ostream& out) {
  require_within_bound(a.max_points, std::max(census_bound(), topo::VerifyOptions::kDefaultVerifyPoints));
  const auto names = topo::verification_suite_names();
  for (const std::string& s : a.suites) {
    if (std::find(names.begin(), names.end(), s) == names.end()) unknown_id("suite", s, names);
  }
  std::optional<topo::KnowledgeBase> kb;
  if (!a.kb.empty()) kb = load_kb(a.kb);
  topo::VerifyOptions options;
  options.max_points = a.max_points;
  options.threads = std::max<std::size_t>(1, a.threads);
  options.seed = a.seed;
  options.kb = kb ? &*kb : nullptr;
  const auto results = topo::run_verification(options, a.suites);

  std::size_t failed = 0;
  json list = json::array();
  for (const topo::SuiteResult& r : results) {
    if (!r.passed) ++failed;
    if (as_json) {
      list.push_back({{"suite", r.name},
                      {"passed", r.passed},
                      {"cases", r.cases},
                      {"violations", r.violations},
                      {"detail", r.detail}});
    } else {
      out << (r.passed ? "PASS  " : "FAIL  ") << pad(r.name, 36) << std::setw(6) << r.cases << " cases  "
          << r.violations << " violations\n";
      if (!r.passed) out << "      first: " << r.detail << "\n";
    }
  }
  if (as_json) {
    out << json{{"max_points", a.max_points}, {"suites", list}, {"failed", failed}}.dump(2) << "\n";
  } else {
    out << results.size() << " suites, " << failed << " failed (census up to " << a.max_points << " points)\n";
  }
  return failed == 0 ? kExitOk : kExitFailure;
}

struct KbArgs {
  std::string file;
  std::string p;
  std::string q;
  std::string props;
  std::string output;
  bool paper_only = false;
};

topo::KnowledgeBase load_kb(const KbArgs& a) {
  topo::KnowledgeBase kb = load_kb(a.file);
  return a.paper_only ? kb.paper_only() : kb;
}

int cmd_kb_status(const KbArgs& a, bool as_json, std::ostream& out) {
  const topo::KnowledgeBase kb = load_kb(a);
  require_property(kb, a.p);
  require_property(kb, a.q);
  const topo::ClosedKnowledgeBase closed = topo::derive(kb);
  const topo::ImplicationStatus st = topo::status(closed, a.p, a.q);
  using Kind = topo::ImplicationStatus::Kind;
  if (as_json) {
    json report{{"p", a.p}, {"q", a.q}, {"status", topo::to_string(st.kind)}};
    if (st.kind == Kind::Implies) report["chain"] = st.chain;
    if (st.kind == Kind::NotImplies) {
      report["witness"] = st.witness;
      report["positive_chain"] = st.positive_chain;
      report["negative_chain"] = st.negative_chain;
    }
    out << report.dump(2) << "\n";
    return kExitOk;
  }
  switch (st.kind) {
    case Kind::Implies:
      out << "IMPLIES\n";
      if (!st.chain.empty()) print_chain(out, "chain", st.chain);
      break;
    case Kind::NotImplies:
      out << "NOT IMPLIES (witness: " << st.witness << ")\n";
      print_chain(out, a.p + " holds", st.positive_chain);
      print_chain(out, a.q + " fails", st.negative_chain);
      break;
    case Kind::Unknown:
      out << "UNKNOWN\n";
      break;
  }
  return kExitOk;
}

int cmd_kb_report(const KbArgs& a, bool as_json, std::ostream& out) {
  const topo::KnowledgeBase kb = load_kb(a);
  const std::vector<std::string> props = resolve_props(kb, a.props);
  const topo::ClosedKnowledgeBase closed = topo::derive(kb);
  using Kind = topo::ImplicationStatus::Kind;

  std::map<std::pair<std::string, std::string>, topo::ImplicationStatus> table;
  for (const std::string& p : props) {
    for (const std::string& q : props) table.emplace(std::pair{p, q}, topo::status(closed, p, q));
  }
  const auto unknown = topo::completeness_report(closed, props);

  if (as_json) {
    json rows = json::array();
    for (const std::string& p : props) {
      for (const std::string& q : props) {
        if (p == q) continue;
        const auto& st = table.at({p, q});
        json row{{"p", p}, {"q", q}, {"status", topo::to_string(st.kind)}};
        if (st.kind == Kind::NotImplies) row["witness"] = st.witness;
        rows.push_back(row);
      }
    }
    json missing = json::array();
    for (const auto& [p, q] : unknown) missing.push_back({p, q});
    out << json{{"properties", props},
                {"paper_only", a.paper_only},
                {"records", closed.records().size()},
                {"pairs", rows},
                {"unknown", missing}}
               .dump(2)
        << "\n";
    return kExitOk;
  }

  std::size_t width = 4;
  for (const std::string& p : props) width = std::max(width, p.size() + 1);
  out << "records: " << closed.records().size() << (a.paper_only ? " (paper only)" : "") << "\n";
  out << "row implies column: => yes, -/> counterexample, ? unknown\n\n";
  out << pad("", width);
  for (const std::string& q : props) out << pad(q, width);
  out << "\n";
  for (const std::string& p : props) {
    out << pad(p, width);
    for (const std::string& q : props) {
      const Kind k = table.at({p, q}).kind;
      out << pad(k == Kind::Implies ? "=>" : k == Kind::NotImplies ? "-/>" : "?", width);
    }
    out << "\n";
  }
  out << "\nunknown pairs: " << unknown.size() << "\n";
  for (const auto& [p, q] : unknown) out << "  " << p << " => " << q << " ?\n";
  return kExitOk;
}

int cmd_kb_dot(const KbArgs& a, bool as_json, std::ostream& out) {
  const topo::KnowledgeBase kb = load_kb(a);
  const std::vector<std::string> props = resolve_props(kb, a.props);
  const std::string dot = topo::export_dot(kb, props);
  std::size_t edges = 0;
  for (std::size_t pos = dot.find(" -> "); pos != std::string::npos; pos = dot.find(" -> ", pos + 1)) ++edges;
  if (a.output == "-") {
    out << dot;
    return kExitOk;
  }
  std::ofstream file(a.output);
  if (!file) throw topo::Error("cannot write '" + a.output + "'");
  file << dot;
  if (as_json) {
    out << json{{"output", a.output}, {"nodes", props.size()}, {"edges", edges}}.dump(2) << "\n";
  } else {
    out << "wrote " << a.output << " (" << props.size() << " nodes, " << edges << " edges)\n";
  }
  return kExitOk;
}

}  // namespace

std::vector<std::string> suggestions(const std::string& unknown, const std::vector<std::string>& known) {
  std::vector<std::pair<std::size_t, std::string>> scored;
  const std::size_t limit = std::max<std::size_t>(2, unknown.size() / 2);
  for (const std::string& k : known) {
    const std::size_t d = edit_distance(unknown, k);
    if (d <= limit) scored.emplace_back(d, k);
  }
  std::stable_sort(scored.begin(), scored.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < scored.size() && i < 3; ++i) out.push_back(scored[i].second);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite topological spaces, test-class coreflections and an implication knowledge base.", "topoctl"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "Run property checkers on every space in a DSL file");
  c_check->add_option("file", check.file, "Space file")->required();
  c_check->add_option("--property", check.properties, "Property id (repeatable); default all");
  c_check->add_option("--space", check.space, "Only this space");

  CoreflectArgs coreflect;
  auto* c_coreflect = app.add_subcommand("coreflect", "Print the coreflection onto a test class");
  c_coreflect->add_option("file", coreflect.file, "Space file")->required();
  c_coreflect->add_option("--class", coreflect.class_name, "P, A, Sfin or a class declared in the file")->required();
  c_coreflect->add_option("--space", coreflect.space, "Only this space");

  CensusArgs census;
  auto* c_census = app.add_subcommand("census", "List or count the topologies on N points");
  c_census->add_option("n", census.n, "Number of points")->required();
  c_census->add_flag("--count-only", census.count_only, "Print only the count");
  c_census->add_flag("--up-to-homeomorphism", census.up_to_homeomorphism, "One space per homeomorphism class");

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Run the verification suites over the census");
  c_verify->add_option("--max-points", verify.max_points, "Largest census size")->capture_default_str();
  c_verify->add_option("--threads", verify.threads, "Worker threads")->capture_default_str();
  c_verify->add_option("--seed", verify.seed, "Seed for sampled relabelings and classes")->capture_default_str();
  c_verify->add_option("--kb", verify.kb, "Knowledge base for the kb.* suites (default: shipped)");
  c_verify->add_option("--suite", verify.suites, "Only this suite (repeatable)");

  KbArgs kb;
  auto* c_status = app.add_subcommand("kb-status", "Does P imply Q?");
  c_status->add_option("kb", kb.file, "Knowledge base JSON")->required();
  c_status->add_option("p", kb.p, "Property id")->required();
  c_status->add_option("q", kb.q, "Property id")->required();
  c_status->add_flag("--paper-only", kb.paper_only, "Ignore external records");

  auto* c_report = app.add_subcommand("kb-report", "Status matrix and unresolved pairs");
  c_report->add_option("kb", kb.file, "Knowledge base JSON")->required();
  c_report->add_option("--props", kb.props, "diagram, grid, all, or comma-separated ids")->required();
  c_report->add_flag("--paper-only", kb.paper_only, "Ignore external records");

  auto* c_dot = app.add_subcommand("kb-dot", "Graphviz export of the reduced implication graph");
  c_dot->add_option("kb", kb.file, "Knowledge base JSON")->required();
  c_dot->add_option("--props", kb.props, "diagram, grid, all, or comma-separated ids")->required();
  c_dot->add_option("-o,--output", kb.output, "Output file, '-' for stdout")->required();
  c_dot->add_flag("--paper-only", kb.paper_only, "Ignore external records");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_check->parsed()) return cmd_check(check, as_json, out);
    if (c_coreflect->parsed()) return cmd_coreflect(coreflect, as_json, out);
    if (c_census->parsed()) return cmd_census(census, as_json, out);
    if (c_verify->parsed()) return cmd_verify(verify, as_json, out);
    if (c_status->parsed()) return cmd_kb_status(kb, as_json, out);
    if (c_report->parsed()) return cmd_kb_report(kb, as_json, out);
    if (c_dot->parsed()) return cmd_kb_dot(kb, as_json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const topo::UnknownProperty& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const topo::Contradiction& e) {
    err << "contradiction: " << e.what() << "\n";
    for (const std::string& s : e.positive_chain()) err << "  + " << s << "\n";
    for (const std::string& s : e.negative_chain()) err << "  - " << s << "\n";
    return kExitFailure;
  } catch (const topo::Error& e) {
    // Parse, schema, class and size errors: all caused by the input.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace topoctl
