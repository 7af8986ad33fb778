#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "topo/deduction.hpp"

namespace topo {

struct VerifyOptions {
  /// Largest census size the suites range over (0..5).
  std::size_t max_points = kDefaultVerifyPoints;
  std::size_t threads = 1;
  /// Drives the sampled relabelings and random test classes only; the
  /// pass/fail outcome does not depend on it.
  std::uint64_t seed = 1;
  /// Theory for the kb.* suites; the shipped one when null.
  const KnowledgeBase* kb = nullptr;

  static constexpr std::size_t kDefaultVerifyPoints = 4;
};

struct SuiteResult {
  /// Stable identifier such as "gen.idempotence".
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::size_t violations = 0;
  /// First violation in census order, empty on success.
  std::string detail;
};

std::vector<std::string> verification_suite_names();

/// Runs every suite, or only those whose names are listed in only.
std::vector<SuiteResult> run_verification(const VerifyOptions& options, const std::vector<std::string>& only = {});

}  // namespace topo
