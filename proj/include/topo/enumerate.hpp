#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "topo/space.hpp"

namespace topo {

/// Census sizes above this are refused outright.
inline constexpr std::size_t kCensusHardLimit = 5;
inline constexpr std::size_t kDefaultCensusBound = 4;

/// One slice of an enumeration. Shards with the same count and distinct
/// indices visit disjoint sets of spaces whose union is everything.
struct Shard {
  std::size_t index = 0;
  std::size_t count = 1;
};

/// Visits every topology on {0..n-1} exactly once in a fixed order.
/// Throws CensusTooLarge if n exceeds bound or bound exceeds the hard limit.
void for_each_topology(std::size_t n, const std::function<void(const FinSpace&)>& visit, Shard shard = {},
                       std::size_t bound = kDefaultCensusBound);

std::vector<FinSpace> enumerate_topologies(std::size_t n, std::size_t bound = kDefaultCensusBound);

/// All labeled spaces with 0..max_n points, smallest first.
std::vector<FinSpace> census(std::size_t max_n, std::size_t bound = kDefaultCensusBound);

/// One representative per homeomorphism class, first occurrence kept.
std::vector<FinSpace> homeomorphism_classes(std::span<const FinSpace> spaces);

}  // namespace topo
