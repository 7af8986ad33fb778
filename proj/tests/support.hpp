#pragma once

#include <vector>

#include "oracles.hpp"
#include "topo/space.hpp"

// Bridges between library values and the mask families the oracles use.

inline oracle::Family family_of(const topo::FinSpace& x) {
  oracle::Family out;
  for (topo::PointSet u : x.opens()) out.push_back(u.bits());
  return out;
}

inline topo::FinSpace space_of(std::size_t n, const oracle::Family& f) {
  std::vector<topo::PointSet> opens;
  for (oracle::Mask m : f) opens.emplace_back(m);
  return topo::FinSpace::make(n, opens);
}

inline std::vector<topo::Point> points_of(const std::vector<unsigned>& f) { return {f.begin(), f.end()}; }

inline topo::PointSet set_of(oracle::Mask m) { return topo::PointSet(m); }
