#pragma once

// Exact minimum path decomposition by exhaustive branch-and-bound, plus the
// cross-method comparison driver. Ground truth for everything else.

#include <cstdint>

#include "gallai/decomp_result.hpp"
#include "gallai/graph.hpp"

namespace gallai {

class EdgeLimitError : public std::runtime_error {
 public:
  EdgeLimitError(int edges, int limit)
      : std::runtime_error("graph has " + std::to_string(edges) +
                           " edges, oracle limit is " + std::to_string(limit)) {}
};

inline constexpr int kDefaultOracleEdgeLimit = 15;

struct OracleResult {
  int minimum = 0;
  Decomposition witness;
  std::uint64_t nodes_explored = 0;
};

// Branches on the smallest uncovered edge over every simple path through it;
// prunes with the incumbent and with max(odd_degree_vertices/2, 1) on the
// uncovered subgraph. Deterministic witness.
OracleResult min_path_decomposition(const Graph& g,
                                    int max_edges = kDefaultOracleEdgeLimit);

struct GallaiCheck {
  int minimum = 0;
  int bound = 0;
  bool holds = false;
};

GallaiCheck check_gallai(const Graph& g, int max_edges = kDefaultOracleEdgeLimit);

struct MethodRecord {
  std::string method;
  int path_count = 0;
  bool valid = false;
  bool within_bound = false;
  std::optional<DecompFailure> failure;
  std::optional<int> gap_to_minimum;
};

// Runs the five decomposers (and the oracle when it fits in max_edges);
// every reported decomposition is re-verified.
std::vector<MethodRecord> compare_methods(const Graph& g,
                                          int max_edges = kDefaultOracleEdgeLimit);

}  // namespace gallai
