#pragma once

#include <vector>

#include "topo/space.hpp"

namespace topo {

// Separation axioms and related properties, each computed from its
// definition. k1H and wH have no checker: on a finite space every subspace
// is compact, so both reduce to "discrete" and carry no extra information.

bool is_t0(const FinSpace& x);
bool is_t1(const FinSpace& x);
bool is_t2(const FinSpace& x);
bool is_discrete(const FinSpace& x);

/// Subsets for which a finite subcover of the open family was found.
std::vector<PointSet> compact_subsets(const FinSpace& x);
bool is_compact_subset(const FinSpace& x, PointSet k);
/// Kompacts are closed.
bool is_kc(const FinSpace& x);
/// Compact subsets are finite.
bool is_anticompact(const FinSpace& x);

/// Locally Hausdorff: every point has a neighbourhood that is T2 as a subspace.
bool is_lh(const FinSpace& x);

/// Opens equal to the interior of their closure.
std::vector<PointSet> regular_opens(const FinSpace& x);
/// Semi-Hausdorff: distinct x, y are split by a regular open containing x.
bool is_sh(const FinSpace& x);

inline constexpr std::size_t kDefaultRetractBound = 5;

/// Every retract is closed. Retractions are found by exhaustive map search,
/// so spaces above bound are refused with SpaceTooLarge.
bool is_rc(const FinSpace& x, std::size_t bound = kDefaultRetractBound);

bool is_hyperconnected(const FinSpace& x);
/// Has a basis partitioning the space.
bool is_partition_topology(const FinSpace& x);
/// Opens closed under arbitrary intersection; audited on the open family.
bool is_alexandrov(const FinSpace& x);

}  // namespace topo
