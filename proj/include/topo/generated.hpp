#pragma once

#include <span>
#include <string>
#include <vector>

#include "topo/space.hpp"

namespace topo {

/// Explicit members are capped at this many points unless overridden
/// (map search into X² grows as |X|^(2|Z|)).
inline constexpr std::size_t kDefaultMemberBound = 4;

/// A class of test spaces C used to refine topologies.
///
/// P (the indiscrete pair) and A (the Sierpinski space) are explicit
/// one-member classes under a fixed name. Sfin stands for the convergent
/// sequence omega+1; since that space is infinite, its maps into a finite X
/// are handled through cofinal profiles. For finite targets sequentially,
/// C-radially and radially closed sets coincide, so Sfin also realises the
/// classes CR and R.
class TestClass {
 public:
  enum class Kind { Explicit, P, A, Sfin };

  /// Throws InvalidClass if members is empty or a member exceeds bound.
  static TestClass explicit_class(std::string name, std::vector<FinSpace> members,
                                  std::size_t bound = kDefaultMemberBound);
  static TestClass P();
  static TestClass A();
  static TestClass Sfin();

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  /// Finite members; empty for Sfin.
  std::span<const FinSpace> members() const { return members_; }
  bool uses_profiles() const { return kind_ == Kind::Sfin; }

 private:
  TestClass(std::string name, Kind kind, std::vector<FinSpace> members)
      : name_(std::move(name)), kind_(kind), members_(std::move(members)) {}

  std::string name_;
  Kind kind_;
  std::vector<FinSpace> members_;
};

/// Every preimage of A under a continuous map from a member is closed.
bool c_closed(const FinSpace& x, const TestClass& c, PointSet a);
bool c_open(const FinSpace& x, const TestClass& c, PointSet u);

/// Same points, topology of all C-open sets.
FinSpace coreflection(const FinSpace& x, const TestClass& c);
bool is_c_generated(const FinSpace& x, const TestClass& c);

/// The diagonal of X² is C-closed.
bool is_c_hausdorff(const FinSpace& x, const TestClass& c);

enum class CompactVariant { K1, K2 };

// Every finite space is sequential, sequential spaces are k1- and
// k2-spaces, and every space is H-generated. The finite members of K1, K2,
// H would give wrong answers here (finite Hausdorff spaces are discrete),
// so these run the sequential check instead of a coreflection.
bool is_h_generated(const FinSpace& x);
bool is_k_generated(const FinSpace& x, CompactVariant variant);

}  // namespace topo
