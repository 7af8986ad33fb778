#include "topo/enumerate.hpp"

#include "topo/errors.hpp"

namespace topo {

namespace {

void check_bound(std::size_t n, std::size_t bound) {
  if (bound > kCensusHardLimit) {
    throw CensusTooLarge("census bound " + std::to_string(bound) + " exceeds the hard limit of " +
                         std::to_string(kCensusHardLimit));
  }
  if (n > bound) {
    throw CensusTooLarge("census of " + std::to_string(n) + "-point spaces exceeds the bound of " +
                         std::to_string(bound));
  }
}

// Rows are minimal neighbourhoods chosen in point order. Two completed rows
// are compatible iff membership in one forces containment of the other,
// so checking the new row against every finished row keeps the partial
// relation transitive.
struct RowSearch {
  std::size_t n;
  const std::function<void(const FinSpace&)>& visit;
  std::vector<PointSet> rows;

  bool compatible(Point y) const {
    for (Point x = 0; x < y; ++x) {
      if (rows[y].contains(x) && !rows[x].subset_of(rows[y])) return false;
      if (rows[x].contains(y) && !rows[y].subset_of(rows[x])) return false;
    }
    return true;
  }

  void descend(Point y) {
    if (y == n) {
      visit(FinSpace::from_neighbourhoods(rows));
      return;
    }
    const PointSet others = PointSet::full(n) - PointSet::singleton(y);
    for_each_subset(others, [&](PointSet s) {
      rows[y] = s | PointSet::singleton(y);
      if (compatible(y)) descend(y + 1);
    });
  }
};

}  // namespace

void for_each_topology(std::size_t n, const std::function<void(const FinSpace&)>& visit, Shard shard,
                       std::size_t bound) {
  check_bound(n, bound);
  if (shard.count == 0 || shard.index >= shard.count) throw Error("invalid census shard");
  if (n == 0) {
    if (shard.index == 0) visit(FinSpace{});
    return;
  }
  RowSearch search{n, visit, std::vector<PointSet>(n)};
  // Shards split on the choice made for the first row.
  std::size_t choice = 0;
  for_each_subset(PointSet::full(n) - PointSet::singleton(0), [&](PointSet s) {
    if (choice++ % shard.count != shard.index) return;
    search.rows[0] = s | PointSet::singleton(0);
    search.descend(1);
  });
}

std::vector<FinSpace> enumerate_topologies(std::size_t n, std::size_t bound) {
  std::vector<FinSpace> out;
  for_each_topology(n, [&](const FinSpace& s) { out.push_back(s); }, Shard{}, bound);
  return out;
}

std::vector<FinSpace> census(std::size_t max_n, std::size_t bound) {
  check_bound(max_n, bound);
  std::vector<FinSpace> out;
  for (std::size_t n = 0; n <= max_n; ++n) {
    for_each_topology(n, [&](const FinSpace& s) { out.push_back(s); }, Shard{}, bound);
  }
  return out;
}

std::vector<FinSpace> homeomorphism_classes(std::span<const FinSpace> spaces) {
  std::vector<FinSpace> reps;
  for (const FinSpace& s : spaces) {
    bool seen = false;
    for (const FinSpace& r : reps) {
      if (is_homeomorphic(r, s)) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(s);
  }
  return reps;
}

}  // namespace topo
