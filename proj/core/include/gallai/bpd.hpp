#pragma once

// Spanning-tree route: decompose a spanning tree into 1- and 2-paths (the
// basic path decomposition, exactly gallai_bound(n) of them), grow each
// basic path into a tree by attaching chords, weight edges by occurrence
// count, then pick one path per tree so every edge is used exactly once.

#include <cstdint>
#include <map>

#include "gallai/decomp_result.hpp"
#include "gallai/graph.hpp"

namespace gallai {

// BFS tree from label 1, neighbors ascending. Throws on disconnected input.
Graph spanning_tree(const Graph& g);

struct BasicPathDecomposition {
  std::vector<Path> paths;  // each of edge-length 1 or 2
  int two_path_count = 0;
  int one_path_count = 0;
};

// n=2k: (k-1) 2-paths and one 1-path; n=2k-1: (k-2) 2-paths and two
// 1-paths. Built by post-order pairing of incident tree edges; for odd n
// the perfect pairing is followed by splitting one 2-path (`split_index`,
// default the last).
BasicPathDecomposition basic_path_decomposition(const Graph& tree,
                                                int split_index = -1);

struct ExtensionTree {
  int basic_index = 0;
  EdgeList edges;  // the basic path's edges plus attached chords
};

struct ExtendResult {
  std::vector<ExtensionTree> trees;
  EdgeList unplaced_chords;  // chords that fit no tree (reported, not fatal)
};

// Canonical policy: per basic path, sweep chords in sorted order to a
// fixpoint, attaching whenever exactly one endpoint is already in the tree.
ExtendResult extend_to_trees(const Graph& g, const Graph& tree,
                             const BasicPathDecomposition& b);

// Retry policy: chords in a caller-chosen order, each placed into the first
// tree that accepts it.
ExtendResult extend_to_trees_first_fit(const Graph& g, const Graph& tree,
                                       const BasicPathDecomposition& b,
                                       const EdgeList& chord_order);

struct WeightMap {
  std::map<Edge, int> weight;
  int at(const Edge& e) const {
    auto it = weight.find(e);
    return it == weight.end() ? 0 : it->second;
  }
};

WeightMap edge_weights(const std::vector<ExtensionTree>& trees);

struct SelectFailure {
  int tree_index = 0;            // basic_index of the infeasible tree
  EdgeList uncoverable_critical; // weight-1 edges no single path covers
};

struct SelectResult {
  std::optional<Decomposition> decomposition;
  std::optional<SelectFailure> infeasible;
};

// Processes trees in `order`; per tree picks the longest simple path that
// covers every current weight-1 edge and avoids weight-0 (already used)
// edges. Used edges drop to 0, unused edges of the tree decrement by one.
SelectResult select_paths(const std::vector<ExtensionTree>& trees, WeightMap w,
                          const std::vector<int>& order);

// Full pipeline with seeded retries: attempt 0 is fully canonical; later
// attempts reshuffle the chord order (first-fit placement), the processing
// order, and the 2-path split choice.
DecompResult algorithm_4_1(const Graph& g, int retries = 16,
                           std::uint64_t seed = 0);

}  // namespace gallai
