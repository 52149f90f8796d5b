#include "gallai/generators.hpp"

#include <algorithm>
#include <numeric>

#include "gallai/rng.hpp"

namespace gallai {

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph needs n >= 1");
  EdgeList edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph tree_from_pruefer(const std::vector<int>& seq, int n) {
  if (n < 1) throw std::invalid_argument("tree needs n >= 1");
  if (static_cast<int>(seq.size()) != std::max(n - 2, 0))
    throw std::invalid_argument("Pruefer sequence length must be n-2");
  if (n == 1) return Graph(1, {});
  std::vector<int> deg(n + 1, 1);
  for (int x : seq) {
    if (x < 1 || x > n) throw std::invalid_argument("Pruefer value out of range");
    ++deg[x];
  }
  EdgeList edges;
  std::vector<bool> used(n + 1, false);
  for (int x : seq) {
    int leaf = 0;
    for (int v = 1; v <= n; ++v)
      if (deg[v] == 1 && !used[v]) {
        leaf = v;
        break;
      }
    used[leaf] = true;
    edges.push_back(make_edge(leaf, x));
    --deg[x];
  }
  int a = 0, b = 0;
  for (int v = 1; v <= n; ++v)
    if (deg[v] == 1 && !used[v]) (a == 0 ? a : b) = v;
  edges.push_back(make_edge(a, b));
  return Graph(n, std::move(edges));
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tree needs n >= 1");
  SplitMix64 rng(mix_seed(seed, 0x7265655f73656564ULL));
  std::vector<int> seq(std::max(n - 2, 0));
  for (auto& x : seq) x = 1 + static_cast<int>(rng_below(rng, n));
  return tree_from_pruefer(seq, n);
}

Graph random_connected_graph(int n, int e, std::uint64_t seed) {
  long long max_e = static_cast<long long>(n) * (n - 1) / 2;
  if (n < 1 || e < n - 1 || e > max_e)
    throw std::invalid_argument("need n-1 <= e <= n(n-1)/2");
  Graph tree = random_tree(n, mix_seed(seed, 1));
  std::vector<bool> in_tree_lookup;
  EdgeList edges = tree.edges();
  EdgeList candidates;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (!tree.has_edge(u, v)) candidates.push_back({u, v});
  SplitMix64 rng(mix_seed(seed, 2));
  int extra = e - (n - 1);
  // partial Fisher-Yates: the first `extra` slots become the sample
  for (int i = 0; i < extra; ++i) {
    std::size_t j = i + static_cast<std::size_t>(
                            rng_below(rng, candidates.size() - i));
    std::swap(candidates[i], candidates[j]);
    edges.push_back(candidates[i]);
  }
  return Graph(n, std::move(edges));
}

void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("tree enumeration limited to 1 <= n <= 8");
  if (n <= 2) {
    fn(tree_from_pruefer({}, n));
    return;
  }
  std::vector<int> seq(n - 2, 1);
  while (true) {
    fn(tree_from_pruefer(seq, n));
    int i = n - 3;
    while (i >= 0 && seq[i] == n) seq[i--] = 1;
    if (i < 0) break;
    ++seq[i];
  }
}

std::vector<Graph> all_labeled_trees(int n) {
  std::vector<Graph> out;
  for_each_labeled_tree(n, [&out](const Graph& g) { out.push_back(g); });
  return out;
}

void for_each_connected_graph(int n,
                              const std::function<void(const Graph&)>& fn) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("connected enumeration limited to 1 <= n <= 6");
  EdgeList all;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) all.push_back({u, v});
  const int m = static_cast<int>(all.size());
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    EdgeList edges;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) edges.push_back(all[i]);
    Graph g(n, std::move(edges));
    if (g.is_connected()) fn(g);
  }
}

std::vector<Graph> all_connected_graphs(int n) {
  std::vector<Graph> out;
  for_each_connected_graph(n, [&out](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace gallai
