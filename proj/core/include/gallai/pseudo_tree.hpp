#pragma once

// Rooted unordered pseudo tree: the BFS unrolling of a connected graph in
// which every graph edge appears exactly once as a tree edge and repeated
// labels are linked by pseudo edges. Walk pairs seeded at pseudo edges give
// a cover with at most floor((e+2)/2) paths after contraction.

#include <cstdint>
#include <optional>
#include <utility>

#include "gallai/decomp_result.hpp"
#include "gallai/graph.hpp"

namespace gallai {

struct Relabeling {
  std::vector<int> to_new;  // old label -> new label, 1-indexed (index 0 unused)
  std::vector<int> to_old;
};

// BFS relabeling: start becomes 1, labels grow in discovery order, neighbors
// taken in ascending original label.
Relabeling bfs_label(const Graph& g, int start);
Graph apply_relabeling(const Graph& g, const Relabeling& rel);

struct PseudoTree {
  struct Node {
    int label = 0;   // label in the relabeled graph (may repeat)
    int parent = -1; // node id, -1 for the root
  };
  std::vector<Node> nodes;              // node id = index, creation (BFS) order
  std::vector<std::pair<int, int>> pseudo_edges;  // (first occurrence, duplicate)
  int graph_n = 0;
  int graph_e = 0;

  int root() const { return 0; }
  // Graph edge realized by the node's parent link.
  Edge realized_edge(int node) const;
  bool is_duplicate(int node) const;
};

// Unrolls the relabeled graph. Node count is e+1 and each extra occurrence
// of a label is pseudo-linked to the first one, giving e+1-n pseudo edges.
PseudoTree build_pseudo_tree(const Graph& g, const Relabeling& rel);

struct PairResult {
  std::vector<std::pair<Path, Path>> path_pairs;  // both start at the shared label
  std::vector<Path> single_paths;
  int D() const { return static_cast<int>(path_pairs.size()); }
  int S() const { return static_cast<int>(single_paths.size()); }
};

// Walk formation seeded at pseudo edges (deepest duplicated label first):
// from each endpoint, follow unused tree edges toward the smallest node id,
// stopping on arrival at another pseudo-edge's first occurrence, before any
// duplicate node, and before any label repeat. Leftover edges become single
// paths, extracted longest-first and then end-merged. An optional seed
// shuffles the pseudo-edge processing order instead.
PairResult algorithm_3_1(const PseudoTree& t,
                         std::optional<std::uint64_t> shuffle_seed = {});

// Glues each pair at its shared end label when the result stays simple,
// otherwise keeps the two paths; singles pass through.
Decomposition contract(const PseudoTree& t, const PairResult& r);

// floor((e+2)/2): tree cover bound applied to the e+1 pseudo-tree nodes.
int theorem_3_1_bound(int e);

// D + S <= gallai_bound(n)?
bool conjecture_3_2_check(const PairResult& r, int n);

// Full pipeline: relabel from vertex 1, unroll, pair walks, contract, map
// back to original labels.
DecompResult decompose_pseudo_tree(const Graph& g,
                                   std::optional<std::uint64_t> shuffle_seed = {});

// One node per line "node_id label parent_id", then pseudo edges "a b".
std::string dump_pseudo_tree(const PseudoTree& t);

}  // namespace gallai
