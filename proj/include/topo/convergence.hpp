#pragma once

#include "topo/space.hpp"

namespace topo {

/// The set of values a (transfinite) sequence into a finite space takes
/// cofinally often.
///
/// For a finite codomain this set decides convergence completely: x is a
/// limit iff every cofinal value lies in the minimal neighbourhood of x.
/// Conversely any nonempty set is realised by an omega-sequence cycling
/// through it, and omega-sequences are continuous, so one profile stands for
/// ordinary, transfinite and continuous transfinite sequences alike.
class CofinalProfile {
 public:
  /// Throws EmptyProfile on an empty set.
  explicit CofinalProfile(PointSet values);

  PointSet values() const { return values_; }

 private:
  PointSet values_;
};

/// Points x with S ⊆ min_nbhd(x). Throws EmptyProfile / Error on bad input.
PointSet limits(const FinSpace& x, const CofinalProfile& s);
PointSet limits(const FinSpace& x, PointSet s);

/// Unique limits for sequences, transfinite sequences, and continuous
/// transfinite sequences. The three coincide on finite spaces; they stay
/// separate entry points so each lines up with its own property node.
bool is_us(const FinSpace& x);
bool is_ur(const FinSpace& x);
bool is_ucr(const FinSpace& x);

/// Every convergent sequence is eventually constant. Constant sequences
/// are allowed extra limits.
bool is_sequentially_discrete(const FinSpace& x);

enum class RadialMode { FrechetUrysohn, CRadial, Radial };
enum class SequentialMode { Sequential, PseudoCRadial, Pseudoradial };

/// For all A and p in cl(A), some profile inside A converges to p.
bool is_radial_style(const FinSpace& x, RadialMode mode);
inline bool is_frechet_urysohn(const FinSpace& x) { return is_radial_style(x, RadialMode::FrechetUrysohn); }

/// Every set closed under limits of profiles drawn from it is closed.
bool is_sequential_style(const FinSpace& x, SequentialMode mode);

/// A is closed under limits of every nonempty profile inside it.
bool is_limit_closed(const FinSpace& x, PointSet a);

}  // namespace topo
