#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "topo/space.hpp"

namespace topo {

/// A property with an executable finite-space checker. Ids match the
/// knowledge-base property ids where such a node exists.
struct FiniteCheck {
  std::string id;
  std::string description;
  std::function<bool(const FinSpace&)> check;
};

/// Registry in display order.
const std::vector<FiniteCheck>& finite_checks();
const FiniteCheck* find_check(std::string_view id);

}  // namespace topo
