#include "topo/deduction.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "topo/enumerate.hpp"
#include "topo/errors.hpp"
#include "topo/properties.hpp"

namespace topo {

Contradiction::Contradiction(std::string space, std::string property, std::vector<std::string> positive_chain,
                             std::vector<std::string> negative_chain)
    : Error("contradiction in '" + space + "': " + property + " derived both true and false"),
      space_(std::move(space)),
      property_(std::move(property)),
      positive_(std::move(positive_chain)),
      negative_(std::move(negative_chain)) {}

std::string to_string(ImplicationStatus::Kind kind) {
  switch (kind) {
    case ImplicationStatus::Kind::Implies: return "IMPLIES";
    case ImplicationStatus::Kind::NotImplies: return "NOT IMPLIES";
    case ImplicationStatus::Kind::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string to_string(Source source) { return source == Source::Paper ? "paper" : "external"; }

const std::vector<std::string>& diagram_properties() {
  static const std::vector<std::string> ids{"T2",  "lH",  "sH",  "RC",  "UR", "k1H", "KC",
                                            "wH",  "k2H", "UOK", "UCR", "US", "T1"};
  return ids;
}

const std::vector<std::string>& convergence_grid_properties() {
  static const std::vector<std::string> ids{"FU",     "sequential",      "C-radial",
                                            "radial", "pseudo-C-radial", "pseudoradial"};
  return ids;
}

// ---------------------------------------------------------------------------
// KnowledgeBase

KnowledgeBase::KnowledgeBase(std::vector<Property> properties, std::vector<Implication> implications,
                             std::vector<SpaceRecord> spaces)
    : properties_(std::move(properties)), implications_(std::move(implications)), spaces_(std::move(spaces)) {
  std::set<std::string> ids;
  for (const Property& p : properties_) {
    if (p.id.empty()) throw MalformedKnowledgeBase("property with empty id");
    if (!ids.insert(p.id).second) throw MalformedKnowledgeBase("duplicate property id '" + p.id + "'");
  }
  auto known = [&](const std::string& id, const std::string& where) {
    if (!ids.count(id)) throw MalformedKnowledgeBase(where + " refers to unknown property '" + id + "'");
  };
  for (const Implication& imp : implications_) {
    if (imp.hypotheses.empty()) throw MalformedKnowledgeBase("implication of " + imp.conclusion + " has no hypotheses");
    known(imp.conclusion, "implication");
    for (const std::string& h : imp.hypotheses) {
      known(h, "implication");
      if (h == imp.conclusion) {
        throw MalformedKnowledgeBase("implication of " + imp.conclusion + " lists its conclusion as a hypothesis");
      }
    }
  }
  std::set<std::string> names;
  for (const SpaceRecord& s : spaces_) {
    if (!names.insert(s.name).second) throw MalformedKnowledgeBase("duplicate space '" + s.name + "'");
    std::map<std::string, bool> seen;
    for (const Trait& t : s.traits) {
      known(t.property, "space '" + s.name + "'");
      auto [it, fresh] = seen.emplace(t.property, t.value);
      if (!fresh && it->second != t.value) {
        throw MalformedKnowledgeBase("space '" + s.name + "' asserts " + t.property + " both true and false");
      }
    }
  }
}

bool KnowledgeBase::has_property(std::string_view id) const {
  return std::any_of(properties_.begin(), properties_.end(), [&](const Property& p) { return p.id == id; });
}

const Property& KnowledgeBase::property(std::string_view id) const {
  for (const Property& p : properties_) {
    if (p.id == id) return p;
  }
  throw UnknownProperty(std::string(id));
}

KnowledgeBase KnowledgeBase::paper_only() const {
  std::vector<SpaceRecord> kept;
  for (const SpaceRecord& s : spaces_) {
    if (s.source == Source::Paper) kept.push_back(s);
  }
  return with_spaces(std::move(kept));
}

KnowledgeBase KnowledgeBase::with_spaces(std::vector<SpaceRecord> spaces) const {
  return KnowledgeBase(properties_, implications_, std::move(spaces));
}

namespace {

using nlohmann::json;

std::string text_field(const json& obj, const char* key, bool required) {
  if (!obj.contains(key)) {
    if (required) throw MalformedKnowledgeBase(std::string("missing field '") + key + "'");
    return {};
  }
  if (!obj.at(key).is_string()) throw MalformedKnowledgeBase(std::string("field '") + key + "' must be a string");
  return obj.at(key).get<std::string>();
}

const json& array_field(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_array()) {
    throw MalformedKnowledgeBase(std::string("missing array '") + key + "'");
  }
  return obj.at(key);
}

}  // namespace

KnowledgeBase KnowledgeBase::parse(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character.
    const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, json_text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (json_text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (const auto cut = what.find("syntax error "); cut != std::string::npos) what = what.substr(cut);
    throw ParseError(line, column, "invalid JSON: " + what);
  }
  if (!doc.is_object()) throw MalformedKnowledgeBase("top level must be an object");

  std::vector<Property> properties;
  for (const json& p : array_field(doc, "properties")) {
    properties.push_back({text_field(p, "id", true), text_field(p, "name", false), text_field(p, "pibase", false)});
    if (properties.back().name.empty()) properties.back().name = properties.back().id;
  }

  std::vector<Implication> implications;
  for (const json& i : array_field(doc, "implications")) {
    Implication imp;
    for (const json& h : array_field(i, "if")) {
      if (!h.is_string()) throw MalformedKnowledgeBase("implication hypotheses must be strings");
      imp.hypotheses.push_back(h.get<std::string>());
    }
    imp.conclusion = text_field(i, "then", true);
    imp.ref = text_field(i, "ref", true);
    implications.push_back(std::move(imp));
  }

  std::vector<SpaceRecord> spaces;
  for (const json& s : array_field(doc, "spaces")) {
    SpaceRecord rec;
    rec.name = text_field(s, "name", true);
    rec.pibase = text_field(s, "pibase", false);
    rec.description = text_field(s, "description", false);
    const std::string source = text_field(s, "source", true);
    if (source == "paper") {
      rec.source = Source::Paper;
    } else if (source == "external") {
      rec.source = Source::External;
    } else {
      throw MalformedKnowledgeBase("space '" + rec.name + "' has unknown source '" + source + "'");
    }
    for (const json& t : array_field(s, "traits")) {
      if (!t.contains("value") || !t.at("value").is_boolean()) {
        throw MalformedKnowledgeBase("trait in space '" + rec.name + "' needs a boolean 'value'");
      }
      rec.traits.push_back({text_field(t, "prop", true), t.at("value").get<bool>(), text_field(t, "ref", true)});
    }
    spaces.push_back(std::move(rec));
  }
  return KnowledgeBase(std::move(properties), std::move(implications), std::move(spaces));
}

KnowledgeBase KnowledgeBase::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedKnowledgeBase("cannot open knowledge base '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string KnowledgeBase::to_json_text() const {
  json doc;
  doc["properties"] = json::array();
  for (const Property& p : properties_) {
    json o{{"id", p.id}, {"name", p.name}};
    if (!p.pibase.empty()) o["pibase"] = p.pibase;
    doc["properties"].push_back(o);
  }
  doc["implications"] = json::array();
  for (const Implication& i : implications_) {
    doc["implications"].push_back({{"if", i.hypotheses}, {"then", i.conclusion}, {"ref", i.ref}});
  }
  doc["spaces"] = json::array();
  for (const SpaceRecord& s : spaces_) {
    json o{{"name", s.name}, {"source", to_string(s.source)}, {"traits", json::array()}};
    if (!s.pibase.empty()) o["pibase"] = s.pibase;
    if (!s.description.empty()) o["description"] = s.description;
    for (const Trait& t : s.traits) o["traits"].push_back({{"prop", t.property}, {"value", t.value}, {"ref", t.ref}});
    doc["spaces"].push_back(o);
  }
  return doc.dump(2);
}

const KnowledgeBase& paper_kb() {
  static const KnowledgeBase kb = KnowledgeBase::parse(paper_kb_json());
  return kb;
}

// ---------------------------------------------------------------------------
// Derivation

std::optional<bool> ClosedRecord::value(const std::string& property) const {
  auto it = traits.find(property);
  if (it == traits.end()) return std::nullopt;
  return it->second.value;
}

const ClosedRecord* ClosedKnowledgeBase::find(std::string_view name) const {
  for (const ClosedRecord& r : records_) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

KnowledgeBase ClosedKnowledgeBase::as_asserted() const {
  std::vector<SpaceRecord> spaces;
  for (const SpaceRecord& s : base_.spaces()) {
    SpaceRecord rec{s.name, s.pibase, s.source, s.description, {}};
    for (const auto& [prop, trait] : find(s.name)->traits) {
      rec.traits.push_back({prop, trait.value, trait.chain.empty() ? std::string{} : trait.chain.back()});
    }
    spaces.push_back(std::move(rec));
  }
  return base_.with_spaces(std::move(spaces));
}

namespace {

void append_unique(std::vector<std::string>& out, const std::vector<std::string>& steps) {
  for (const std::string& s : steps) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string describe(const Implication& imp) {
  return join(imp.hypotheses, " & ") + " => " + imp.conclusion + " [" + imp.ref + "]";
}

ClosedRecord close_record(const KnowledgeBase& kb, const SpaceRecord& space) {
  ClosedRecord rec{space.name, space.source, {}};
  for (const Trait& t : space.traits) {
    const std::string step = space.name + ": " + (t.value ? "" : "not ") + t.property + " [" + t.ref + "]";
    rec.traits.emplace(t.property, DerivedTrait{t.value, true, {step}});
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (const Implication& imp : kb.implications()) {
      std::size_t true_count = 0;
      std::size_t false_count = 0;
      const std::string* unknown = nullptr;
      for (const std::string& h : imp.hypotheses) {
        auto v = rec.value(h);
        if (!v) {
          unknown = &h;
        } else if (*v) {
          ++true_count;
        } else {
          ++false_count;
        }
      }
      const auto conclusion = rec.value(imp.conclusion);

      if (true_count == imp.hypotheses.size()) {
        if (conclusion && *conclusion) continue;
        std::vector<std::string> chain;
        for (const std::string& h : imp.hypotheses) append_unique(chain, rec.traits.at(h).chain);
        chain.push_back(describe(imp));
        if (conclusion) {
          throw Contradiction(space.name, imp.conclusion, chain, rec.traits.at(imp.conclusion).chain);
        }
        rec.traits.emplace(imp.conclusion, DerivedTrait{true, false, std::move(chain)});
        changed = true;
      } else if (conclusion && !*conclusion && false_count == 0 && true_count + 1 == imp.hypotheses.size()) {
        std::vector<std::string> chain;
        append_unique(chain, rec.traits.at(imp.conclusion).chain);
        for (const std::string& h : imp.hypotheses) {
          if (&h != unknown) append_unique(chain, rec.traits.at(h).chain);
        }
        chain.push_back("not " + imp.conclusion + " gives not " + *unknown + " via " + describe(imp));
        rec.traits.emplace(*unknown, DerivedTrait{false, false, std::move(chain)});
        changed = true;
      }
    }
  }
  return rec;
}

}  // namespace

ClosedKnowledgeBase derive(const KnowledgeBase& kb) {
  std::vector<ClosedRecord> records;
  records.reserve(kb.spaces().size());
  for (const SpaceRecord& s : kb.spaces()) records.push_back(close_record(kb, s));
  return ClosedKnowledgeBase(kb, std::move(records));
}

// ---------------------------------------------------------------------------
// Queries

ImplicationStatus status(const ClosedKnowledgeBase& kb, const std::string& p, const std::string& q) {
  const KnowledgeBase& base = kb.base();
  base.property(p);
  base.property(q);

  ImplicationStatus out;

  // Forward reachability from {P}; a conjunctive edge fires once all of its
  // hypotheses are reached.
  std::vector<std::string> order{p};
  std::map<std::string, std::size_t> via;
  auto reached = [&](const std::string& id) { return std::find(order.begin(), order.end(), id) != order.end(); };
  bool changed = true;
  while (changed && !reached(q)) {
    changed = false;
    const auto imps = base.implications();
    for (std::size_t i = 0; i < imps.size(); ++i) {
      if (reached(imps[i].conclusion)) continue;
      if (std::all_of(imps[i].hypotheses.begin(), imps[i].hypotheses.end(), reached)) {
        order.push_back(imps[i].conclusion);
        via[imps[i].conclusion] = i;
        changed = true;
      }
    }
  }
  const bool implies = reached(q);
  if (implies) {
    std::set<std::size_t> used;
    std::vector<std::string> pending{q};
    while (!pending.empty()) {
      const std::string id = pending.back();
      pending.pop_back();
      if (id == p) continue;
      const std::size_t i = via.at(id);
      if (!used.insert(i).second) continue;
      for (const std::string& h : base.implications()[i].hypotheses) pending.push_back(h);
    }
    std::vector<std::size_t> steps(used.begin(), used.end());
    auto rank = [&](std::size_t i) {
      return std::find(order.begin(), order.end(), base.implications()[i].conclusion) - order.begin();
    };
    std::sort(steps.begin(), steps.end(), [&](std::size_t a, std::size_t b) { return rank(a) < rank(b); });
    for (std::size_t i : steps) out.chain.push_back(describe(base.implications()[i]));
    out.kind = ImplicationStatus::Kind::Implies;
  }

  for (const ClosedRecord& r : kb.records()) {
    const auto vp = r.value(p);
    const auto vq = r.value(q);
    if (vp && *vp && vq && !*vq) {
      if (implies) {
        throw Contradiction(r.name, q, out.chain, r.traits.at(q).chain);
      }
      out.kind = ImplicationStatus::Kind::NotImplies;
      out.witness = r.name;
      out.positive_chain = r.traits.at(p).chain;
      out.negative_chain = r.traits.at(q).chain;
      break;
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> completeness_report(const ClosedKnowledgeBase& kb,
                                                                     std::span<const std::string> props) {
  std::vector<std::pair<std::string, std::string>> unknown;
  for (const std::string& a : props) kb.base().property(a);
  for (const std::string& a : props) {
    for (const std::string& b : props) {
      if (a == b) continue;
      if (status(kb, a, b).kind == ImplicationStatus::Kind::Unknown) unknown.emplace_back(a, b);
    }
  }
  return unknown;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const KnowledgeBase& kb, std::span<const std::string> props) {
  for (const std::string& id : props) kb.property(id);

  // Reachability along single-hypothesis edges over the whole theory.
  std::map<std::string, std::set<std::string>> reach;
  for (const Property& start : kb.properties()) {
    std::set<std::string>& seen = reach[start.id];
    std::vector<std::string> stack{start.id};
    while (!stack.empty()) {
      const std::string id = stack.back();
      stack.pop_back();
      for (const Implication& imp : kb.implications()) {
        if (imp.single() && imp.hypotheses.front() == id && seen.insert(imp.conclusion).second) {
          stack.push_back(imp.conclusion);
        }
      }
    }
  }
  auto reaches = [&](const std::string& a, const std::string& b) { return a == b || reach[a].count(b) > 0; };

  std::ostringstream out;
  out << "digraph implications {\n";
  for (const std::string& id : props) {
    out << "  " << dot_quote(id) << " [label=" << dot_quote(kb.property(id).name) << "];\n";
  }
  for (const std::string& u : props) {
    for (const std::string& v : props) {
      if (u == v || !reaches(u, v)) continue;
      const bool bypassed = std::any_of(props.begin(), props.end(), [&](const std::string& w) {
        return w != u && w != v && reaches(u, w) && reaches(w, v) && !reaches(w, u) && !reaches(v, w);
      });
      if (!bypassed) out << "  " << dot_quote(u) << " -> " << dot_quote(v) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

CensusConsistencyReport check_census_consistency(const KnowledgeBase& kb, std::size_t max_n) {
  CensusConsistencyReport report;
  std::vector<const FiniteCheck*> checks;
  for (const FiniteCheck& c : finite_checks()) {
    if (kb.has_property(c.id)) {
      checks.push_back(&c);
      report.checked_properties.push_back(c.id);
    }
  }

  const std::vector<FinSpace> spaces = census(max_n, std::max(max_n, kDefaultCensusBound));
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    const FinSpace& x = spaces[i];
    std::string name = "census#" + std::to_string(i) + " n=" + std::to_string(x.size()) + " nbhds";
    for (PointSet nb : x.neighbourhoods()) name += " " + nb.to_string();
    SpaceRecord rec{name, {}, Source::External, {}, {}};
    for (const FiniteCheck* c : checks) rec.traits.push_back({c->id, c->check(x), "finite checker"});
    try {
      derive(kb.with_spaces({rec}));
    } catch (const Contradiction& e) {
      report.contradictions.push_back(e.what());
    }
    ++report.spaces_checked;
  }
  return report;
}

}  // namespace topo
