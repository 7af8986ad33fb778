#include "topo/convergence.hpp"

#include "topo/errors.hpp"

namespace topo {

namespace {

// Subset sweeps below are exponential in the point count.
constexpr std::size_t kMaxSweepPoints = 24;

void require_sweepable(const FinSpace& x) {
  if (x.size() > kMaxSweepPoints) {
    throw SpaceTooLarge("convergence checks enumerate all subsets; " + std::to_string(x.size()) +
                        " points exceeds the limit of " + std::to_string(kMaxSweepPoints));
  }
}

bool unique_limits(const FinSpace& x) {
  require_sweepable(x);
  return all_subsets(x.points(), [&](PointSet s) { return s.empty() || limits(x, s).size() <= 1; });
}

}  // namespace

CofinalProfile::CofinalProfile(PointSet values) : values_(values) {
  if (values.empty()) throw EmptyProfile();
}

PointSet limits(const FinSpace& x, const CofinalProfile& s) {
  if (!s.values().subset_of(x.points())) {
    throw Error("profile " + s.values().to_string() + " is not a subset of the space");
  }
  PointSet out;
  for (Point p = 0; p < x.size(); ++p) {
    if (s.values().subset_of(x.min_nbhd(p))) out.insert(p);
  }
  return out;
}

PointSet limits(const FinSpace& x, PointSet s) { return limits(x, CofinalProfile(s)); }

bool is_us(const FinSpace& x) { return unique_limits(x); }
bool is_ur(const FinSpace& x) { return unique_limits(x); }
bool is_ucr(const FinSpace& x) { return unique_limits(x); }

bool is_sequentially_discrete(const FinSpace& x) {
  require_sweepable(x);
  return all_subsets(x.points(), [&](PointSet s) { return s.size() < 2 || limits(x, s).empty(); });
}

bool is_radial_style(const FinSpace& x, RadialMode) {
  require_sweepable(x);
  return all_subsets(x.points(), [&](PointSet a) {
    for (Point p : closure(x, a)) {
      const bool reached = !all_subsets(a, [&](PointSet s) { return s.empty() || !limits(x, s).contains(p); });
      if (!reached) return false;
    }
    return true;
  });
}

bool is_limit_closed(const FinSpace& x, PointSet a) {
  return all_subsets(a, [&](PointSet s) { return s.empty() || limits(x, s).subset_of(a); });
}

bool is_sequential_style(const FinSpace& x, SequentialMode) {
  require_sweepable(x);
  return all_subsets(x.points(), [&](PointSet a) { return !is_limit_closed(x, a) || x.is_closed(a); });
}

}  // namespace topo
