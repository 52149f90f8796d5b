#pragma once

// Hamiltonian path tables for K_{2n}: n pairwise edge-disjoint Hamiltonian
// paths that together cover every edge. Any graph on at most 2n vertices
// embeds by breaking the table rows at its non-edges; the fragments form a
// cover that is then merged down.

#include <cstdint>

#include "gallai/decomp_result.hpp"
#include "gallai/graph.hpp"

namespace gallai {

struct PathTable {
  int order = 0;                       // 2n
  std::vector<std::vector<int>> rows;  // each a permutation of 1..2n
};

// Zigzag construction on residues mod 2n, rows rotated by 0..n-1.
PathTable build_table(int order);

// All table invariants: every row a Hamiltonian path, rows edge-disjoint,
// union covering all n(2n-1) edges, each label an end vertex exactly once.
bool verify_table(const PathTable& t);

struct Permutation {
  std::vector<int> images;  // 1-indexed, images[0] unused

  int order() const { return static_cast<int>(images.size()) - 1; }
  int operator()(int v) const { return images[v]; }
};

Permutation identity_permutation(int n);
Permutation random_permutation(int n, std::uint64_t seed);

// Entrywise image; a table survives any relabeling.
PathTable apply_permutation(const PathTable& t, const Permutation& s);

struct PseudoPathTable {
  PathTable base;
  int real_n = 0;  // labels above real_n are phantom (graph embedded as 1..real_n)
  // per row: positions p with no graph edge between entries p and p+1
  std::vector<std::vector<int>> breaks;
  std::vector<int> subpath_counts;  // per row: breaks + 1
};

// Breaks sit exactly at the non-edges of g; phantom labels break on both
// sides. Requires g.n() <= t.order.
PseudoPathTable pseudo_table(const PathTable& t, const Graph& g);

// Rows cut at their breaks; fragments with fewer than two real vertices are
// discarded. The fragment edges are exactly g's edges, once each.
std::vector<Path> split_subpaths(const PseudoPathTable& pt);

// Table of the smallest even order >= n, embed, split, then merge: endpoint
// merging first, then a bounded split-and-reattach rearrangement while the
// count exceeds gallai_bound(n).
DecompResult algorithm_5_1(const Graph& g);

}  // namespace gallai
