#pragma once

// Graph corpora for empirical checks: complete graphs, seeded random trees
// and connected graphs, and exhaustive enumerations of labeled trees
// (Pruefer sequences) and labeled connected graphs (edge-subset filtering).

#include <cstdint>
#include <functional>

#include "gallai/graph.hpp"

namespace gallai {

Graph complete_graph(int n);

// Uniform labeled tree via a uniform Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);

// Random spanning tree plus uniform extra edges without replacement.
// Requires n-1 <= e <= n(n-1)/2.
Graph random_connected_graph(int n, int e, std::uint64_t seed);

// Decodes a Pruefer sequence (values in 1..n, length n-2) to its tree.
Graph tree_from_pruefer(const std::vector<int>& seq, int n);

// All n^(n-2) labeled trees, n <= 8. Deterministic order.
void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& fn);
std::vector<Graph> all_labeled_trees(int n);

// All labeled connected graphs, n <= 6. Deterministic order.
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn);
std::vector<Graph> all_connected_graphs(int n);

}  // namespace gallai
