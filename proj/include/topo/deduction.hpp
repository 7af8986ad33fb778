#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace topo {

struct Property {
  std::string id;
  std::string name;
  /// Community database id such as "P99"; empty when none is recorded.
  std::string pibase;
};

/// hypotheses (all of them) imply conclusion.
struct Implication {
  std::vector<std::string> hypotheses;
  std::string conclusion;
  std::string ref;

  bool single() const { return hypotheses.size() == 1; }
};

enum class Source { Paper, External };

struct Trait {
  std::string property;
  bool value = false;
  std::string ref;
};

struct SpaceRecord {
  std::string name;
  std::string pibase;
  Source source = Source::Paper;
  std::string description;
  std::vector<Trait> traits;
};

/// Properties, implications between them, and spaces with asserted traits.
/// Construction validates references and rejects a record asserting a
/// property both ways.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;
  KnowledgeBase(std::vector<Property> properties, std::vector<Implication> implications,
                std::vector<SpaceRecord> spaces);

  /// Reads the JSON exchange format. Throws ParseError on bad JSON and
  /// MalformedKnowledgeBase on a bad schema.
  static KnowledgeBase parse(std::string_view json_text);
  static KnowledgeBase load(const std::string& path);
  std::string to_json_text() const;

  std::span<const Property> properties() const { return properties_; }
  std::span<const Implication> implications() const { return implications_; }
  std::span<const SpaceRecord> spaces() const { return spaces_; }

  bool has_property(std::string_view id) const;
  /// Throws UnknownProperty.
  const Property& property(std::string_view id) const;

  /// Same theory, only records whose source is Paper.
  KnowledgeBase paper_only() const;
  /// Same theory, spaces replaced.
  KnowledgeBase with_spaces(std::vector<SpaceRecord> spaces) const;

 private:
  std::vector<Property> properties_;
  std::vector<Implication> implications_;
  std::vector<SpaceRecord> spaces_;
};

/// The knowledge base shipped with the library.
const KnowledgeBase& paper_kb();
std::string_view paper_kb_json();

struct DerivedTrait {
  bool value = false;
  bool asserted = false;
  /// Provenance steps, ending with the step that produced this trait.
  std::vector<std::string> chain;
};

struct ClosedRecord {
  std::string name;
  Source source = Source::Paper;
  std::map<std::string, DerivedTrait> traits;

  std::optional<bool> value(const std::string& property) const;
};

/// A knowledge base with every record closed under its implications.
class ClosedKnowledgeBase {
 public:
  ClosedKnowledgeBase(KnowledgeBase base, std::vector<ClosedRecord> records)
      : base_(std::move(base)), records_(std::move(records)) {}

  const KnowledgeBase& base() const { return base_; }
  std::span<const ClosedRecord> records() const { return records_; }
  const ClosedRecord* find(std::string_view name) const;

  /// Re-asserts every derived trait, e.g. to check that closing again
  /// changes nothing.
  KnowledgeBase as_asserted() const;

 private:
  KnowledgeBase base_;
  std::vector<ClosedRecord> records_;
};

/// Forward chaining to a fixpoint: all hypotheses true forces the
/// conclusion; a false conclusion with all hypotheses but one true forces
/// the remaining one false. Throws Contradiction.
ClosedKnowledgeBase derive(const KnowledgeBase& kb);

struct ImplicationStatus {
  enum class Kind { Implies, NotImplies, Unknown };

  Kind kind = Kind::Unknown;
  /// Implies: implication steps from P to Q.
  std::vector<std::string> chain;
  /// NotImplies: the first record (in file order) with P true and Q false,
  /// and the provenance of both traits.
  std::string witness;
  std::vector<std::string> positive_chain;
  std::vector<std::string> negative_chain;
};

/// Throws UnknownProperty, or Contradiction when P provably implies Q while
/// a record has P and not Q.
ImplicationStatus status(const ClosedKnowledgeBase& kb, const std::string& p, const std::string& q);

/// Ordered pairs (P, Q), P != Q, whose status is Unknown.
std::vector<std::pair<std::string, std::string>> completeness_report(const ClosedKnowledgeBase& kb,
                                                                     std::span<const std::string> props);

/// Graphviz digraph of the transitive reduction of single-hypothesis
/// implications among props, nodes and edges in props order.
std::string export_dot(const KnowledgeBase& kb, std::span<const std::string> props);

struct CensusConsistencyReport {
  std::size_t spaces_checked = 0;
  std::vector<std::string> checked_properties;
  std::vector<std::string> contradictions;

  bool ok() const { return contradictions.empty(); }
};

/// Adds each census space (traits from the finite checkers) to the theory
/// of kb and records every contradiction raised by derive.
CensusConsistencyReport check_census_consistency(const KnowledgeBase& kb, std::size_t max_n);

/// The thirteen weakenings of T2 in the full implication diagram.
const std::vector<std::string>& diagram_properties();
/// Frechet-Urysohn, sequential and the four (pseudo-)(C-)radial variants.
const std::vector<std::string>& convergence_grid_properties();

std::string to_string(ImplicationStatus::Kind kind);
std::string to_string(Source source);

}  // namespace topo
