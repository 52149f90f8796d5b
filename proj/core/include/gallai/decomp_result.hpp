#pragma once

// Shared result carrier for the decomposition heuristics. A failure never
// voids the partial cover: `paths` stays valid for the edges it does cover.

#include <optional>
#include <string>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

struct DecompFailure {
  std::string stage;
  std::string detail;
};

struct DecompResult {
  std::string method;
  Decomposition paths;
  std::optional<DecompFailure> failure;

  // Per-peel drop in non-isolated vertex count (tree/graph peeling).
  std::vector<int> peel_drops;
  // Per-peel flag: true when the peeled path was peripheral, false when the
  // relaxed fallback fired.
  std::vector<bool> peel_peripheral;
  // Seeded reshuffles consumed before success (spanning-tree and
  // incremental routes).
  int retries_used = 0;

  bool ok() const { return !failure.has_value(); }
};

}  // namespace gallai
