#pragma once

// Maximally extended peripheral paths. A path is maximally extended when
// neither end vertex has a neighbor outside the path, and peripheral when
// deleting its edges (discarding isolated vertices) leaves a connected or
// empty graph. Trees are decomposed by repeatedly peeling such a path.

#include <optional>

#include "gallai/decomp_result.hpp"
#include "gallai/graph.hpp"

namespace gallai {

// Throws std::invalid_argument when p is not a simple path of g.
bool is_maximally_extended(const Graph& g, const Path& p);
bool is_peripheral(const Graph& g, const Path& p);

struct MeppCertificate {
  Path path;
  bool maximally_extended = false;
  bool peripheral = false;
  int remainder_components = 0;  // non-singleton components after removal
};

MeppCertificate certify_path(const Graph& g, const Path& p);

// Deterministic search: all leaf pairs for trees, all greedy maximal
// extensions per start vertex otherwise; lexicographically least qualifying
// candidate wins. Empty when no candidate passes both predicates.
std::optional<Path> find_mepp(const Graph& g);

// Peels maximally extended peripheral paths from a tree (Gallai bound holds
// empirically on exhaustive small corpora). Records per-peel vertex drops.
DecompResult decompose_tree_mepp(const Graph& g);

// Greedy peel for arbitrary connected graphs. When no peripheral candidate
// exists, the lexicographically least maximal path is peeled anyway and the
// remainder is handled per component; peel_peripheral records which case
// fired.
DecompResult decompose_graph_mepp(const Graph& g);

struct ConjectureStats {
  int edges = 0;
  int path_count = 0;
  int threshold = 0;  // floor((e+1) / gallai_bound(n))
  bool holds = false; // average peel length >= threshold
  double average_length() const {
    return path_count ? static_cast<double>(edges) / path_count : 0.0;
  }
};

// Average peeled-path length versus the floor((e+1)/floor((n+1)/2))
// threshold; every edge lies in exactly one path, so the average is
// e / path_count exactly.
ConjectureStats conjecture_2_1_stats(const Graph& g, const DecompResult& peel);

}  // namespace gallai
