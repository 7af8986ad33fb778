#include "topo/axioms.hpp"

#include <algorithm>

#include "topo/errors.hpp"

namespace topo {

namespace {

constexpr std::size_t kMaxSweepPoints = 24;

void require_sweepable(const FinSpace& x, const char* what) {
  if (x.size() > kMaxSweepPoints) {
    throw SpaceTooLarge(std::string(what) + " enumerates subsets; " + std::to_string(x.size()) +
                        " points exceeds the limit of " + std::to_string(kMaxSweepPoints));
  }
}

}  // namespace

bool is_t0(const FinSpace& x) {
  for (Point a = 0; a < x.size(); ++a) {
    for (Point b = a + 1; b < x.size(); ++b) {
      if (x.specializes(a, b) && x.specializes(b, a)) return false;
    }
  }
  return true;
}

bool is_t1(const FinSpace& x) {
  for (Point a = 0; a < x.size(); ++a) {
    if (closure(x, PointSet::singleton(a)) != PointSet::singleton(a)) return false;
  }
  return true;
}

bool is_t2(const FinSpace& x) {
  // Minimal neighbourhoods are the smallest candidates, so disjoint opens
  // exist iff they are disjoint.
  for (Point a = 0; a < x.size(); ++a) {
    for (Point b = a + 1; b < x.size(); ++b) {
      if (x.min_nbhd(a).intersects(x.min_nbhd(b))) return false;
    }
  }
  return true;
}

bool is_discrete(const FinSpace& x) {
  for (Point a = 0; a < x.size(); ++a) {
    if (!x.is_open(PointSet::singleton(a))) return false;
  }
  return true;
}

bool is_compact_subset(const FinSpace& x, PointSet k) {
  // Subcover extraction from the cover by all open sets: keep one member
  // per point of k, preferring members that cover the most of what is left.
  const std::vector<PointSet> cover = x.opens();
  PointSet left = k;
  std::size_t picked = 0;
  while (!left.empty()) {
    const PointSet* best = nullptr;
    for (const PointSet& u : cover) {
      if (!u.intersects(left)) continue;
      if (!best || (u & left).size() > (*best & left).size()) best = &u;
    }
    if (!best) return false;
    left -= *best;
    ++picked;
  }
  return picked <= k.size();
}

std::vector<PointSet> compact_subsets(const FinSpace& x) {
  require_sweepable(x, "compactness check");
  std::vector<PointSet> out;
  for_each_subset(x.points(), [&](PointSet k) {
    if (is_compact_subset(x, k)) out.push_back(k);
  });
  return out;
}

bool is_kc(const FinSpace& x) {
  for (PointSet k : compact_subsets(x)) {
    if (!x.is_closed(k)) return false;
  }
  return true;
}

bool is_anticompact(const FinSpace& x) {
  for (PointSet k : compact_subsets(x)) {
    if (k.size() > x.size()) return false;
  }
  return true;
}

bool is_lh(const FinSpace& x) {
  require_sweepable(x, "local Hausdorff check");
  for (Point p = 0; p < x.size(); ++p) {
    const PointSet core = x.min_nbhd(p);
    // N is a neighbourhood of p iff p ∈ int N iff min_nbhd(p) ⊆ N.
    const bool found = !all_subsets(x.points() - core, [&](PointSet extra) {
      return !is_t2(subspace(x, core | extra).space);
    });
    if (!found) return false;
  }
  return true;
}

std::vector<PointSet> regular_opens(const FinSpace& x) {
  std::vector<PointSet> out;
  for (PointSet u : x.opens()) {
    if (interior(x, closure(x, u)) == u) out.push_back(u);
  }
  return out;
}

bool is_sh(const FinSpace& x) {
  const std::vector<PointSet> reg = regular_opens(x);
  for (Point a = 0; a < x.size(); ++a) {
    for (Point b = 0; b < x.size(); ++b) {
      if (a == b) continue;
      const bool split = std::any_of(reg.begin(), reg.end(), [&](PointSet u) { return u.contains(a) && !u.contains(b); });
      if (!split) return false;
    }
  }
  return true;
}

bool is_rc(const FinSpace& x, std::size_t bound) {
  if (x.size() > bound) {
    throw SpaceTooLarge("retract search on " + std::to_string(x.size()) + " points exceeds the bound of " +
                        std::to_string(bound));
  }
  return all_subsets(x.points(), [&](PointSet a) {
    if (a.empty() || x.is_closed(a)) return true;
    const Subspace sub = subspace(x, a);
    bool retract_found = false;
    for_each_continuous_map(x, sub.space, [&](const std::vector<Point>& r) {
      for (Point i = 0; i < sub.members.size(); ++i) {
        if (r[sub.members[i]] != i) return true;
      }
      retract_found = true;
      return false;
    });
    return !retract_found;
  });
}

bool is_hyperconnected(const FinSpace& x) {
  const std::vector<PointSet> opens = x.opens();
  for (PointSet u : opens) {
    for (PointSet v : opens) {
      if (!u.empty() && !v.empty() && !u.intersects(v)) return false;
    }
  }
  return true;
}

bool is_partition_topology(const FinSpace& x) {
  for (Point a = 0; a < x.size(); ++a) {
    for (Point b = 0; b < x.size(); ++b) {
      if (x.specializes(a, b) != x.specializes(b, a)) return false;
    }
  }
  return true;
}

bool is_alexandrov(const FinSpace& x) {
  // A finite family is closed under arbitrary intersection iff it holds the
  // empty intersection (the whole space) and is closed under pairwise meets.
  const std::vector<PointSet> opens = x.opens();
  auto has = [&](PointSet u) { return std::binary_search(opens.begin(), opens.end(), u); };
  if (!has(x.points())) return false;
  for (PointSet u : opens) {
    for (PointSet v : opens) {
      if (!has(u & v)) return false;
    }
  }
  return true;
}

}  // namespace topo
