#include "gallai/bpd.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "gallai/rng.hpp"

namespace gallai {

Graph spanning_tree(const Graph& g) {
  if (!g.is_connected()) throw std::invalid_argument("graph is disconnected");
  EdgeList edges;
  std::vector<bool> seen(g.n() + 1, false);
  std::deque<int> queue{1};
  seen[1] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      edges.push_back(make_edge(v, w));
      queue.push_back(w);
    }
  }
  return Graph(g.n(), std::move(edges));
}

BasicPathDecomposition basic_path_decomposition(const Graph& tree,
                                                int split_index) {
  if (!tree.is_tree() || tree.n() < 2)
    throw std::invalid_argument("basic path decomposition needs a tree, n >= 2");

  // root at 1; iterative post-order
  std::vector<int> parent(tree.n() + 1, 0), order;
  parent[1] = 1;
  std::vector<int> stack{1};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : tree.neighbors(v))
      if (!parent[w]) {
        parent[w] = v;
        stack.push_back(w);
      }
  }
  std::reverse(order.begin(), order.end());

  std::set<Edge> matched;
  std::vector<Path> two_paths;
  std::optional<Edge> leftover;
  for (int v : order) {
    std::vector<int> unmatched_children;
    for (int w : tree.neighbors(v)) {
      if (w == parent[v] && v != 1) continue;
      if (parent[w] == v && !matched.count(make_edge(v, w)))
        unmatched_children.push_back(w);
    }
    size_t i = 0;
    for (; i + 1 < unmatched_children.size(); i += 2) {
      int a = unmatched_children[i], b = unmatched_children[i + 1];
      matched.insert(make_edge(v, a));
      matched.insert(make_edge(v, b));
      two_paths.push_back(Path{{a, v, b}});
    }
    if (i < unmatched_children.size()) {
      int a = unmatched_children[i];
      if (v == 1) {
        matched.insert(make_edge(v, a));
        leftover = make_edge(v, a);
      } else {
        matched.insert(make_edge(v, a));
        matched.insert(make_edge(parent[v], v));
        two_paths.push_back(Path{{a, v, parent[v]}});
      }
    }
  }

  BasicPathDecomposition b;
  if (tree.n() % 2 == 0) {
    // odd edge count: pairing leaves exactly one 1-path
    b.paths = two_paths;
    b.paths.push_back(Path{{leftover->u, leftover->v}});
    b.two_path_count = static_cast<int>(two_paths.size());
    b.one_path_count = 1;
  } else {
    // even edge count: perfect pairing, then split one 2-path
    int split = split_index;
    if (split < 0 || split >= static_cast<int>(two_paths.size()))
      split = static_cast<int>(two_paths.size()) - 1;
    for (int i = 0; i < static_cast<int>(two_paths.size()); ++i) {
      if (i == split) continue;
      b.paths.push_back(two_paths[i]);
    }
    const auto& s = two_paths[split].vertices;
    b.paths.push_back(Path{{s[0], s[1]}});
    b.paths.push_back(Path{{s[1], s[2]}});
    b.two_path_count = static_cast<int>(two_paths.size()) - 1;
    b.one_path_count = 2;
  }
  return b;
}

namespace {

EdgeList chords_of(const Graph& g, const Graph& tree) {
  EdgeList chords;
  for (const auto& e : g.edges())
    if (!tree.has_edge(e.u, e.v)) chords.push_back(e);
  return chords;
}

struct GrowingTree {
  ExtensionTree tree;
  std::set<int> vertices;

  explicit GrowingTree(int index, const Path& basic) {
    tree.basic_index = index;
    tree.edges = basic.edges();
    vertices.insert(basic.vertices.begin(), basic.vertices.end());
  }

  // attachable iff exactly one endpoint is present (stays a tree)
  bool try_attach(const Edge& c) {
    bool has_u = vertices.count(c.u), has_v = vertices.count(c.v);
    if (has_u == has_v) return false;
    tree.edges.push_back(c);
    vertices.insert(has_u ? c.v : c.u);
    return true;
  }
};

ExtendResult finish(std::vector<GrowingTree>& growing, const EdgeList& chords) {
  ExtendResult out;
  std::set<Edge> placed;
  for (auto& g : growing) {
    std::sort(g.tree.edges.begin(), g.tree.edges.end());
    for (const auto& e : g.tree.edges) placed.insert(e);
    out.trees.push_back(std::move(g.tree));
  }
  for (const auto& c : chords)
    if (!placed.count(c)) out.unplaced_chords.push_back(c);
  return out;
}

}  // namespace

ExtendResult extend_to_trees(const Graph& g, const Graph& tree,
                             const BasicPathDecomposition& b) {
  EdgeList chords = chords_of(g, tree);
  std::vector<GrowingTree> growing;
  for (int i = 0; i < static_cast<int>(b.paths.size()); ++i)
    growing.emplace_back(i, b.paths[i]);
  for (auto& gt : growing) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& c : chords)
        if (gt.try_attach(c)) grew = true;
    }
  }
  return finish(growing, chords);
}

ExtendResult extend_to_trees_first_fit(const Graph& g, const Graph& tree,
                                       const BasicPathDecomposition& b,
                                       const EdgeList& chord_order) {
  std::vector<GrowingTree> growing;
  for (int i = 0; i < static_cast<int>(b.paths.size()); ++i)
    growing.emplace_back(i, b.paths[i]);
  EdgeList chords = chord_order;
  bool grew = true;
  std::set<Edge> placed;
  while (grew) {
    grew = false;
    for (const auto& c : chords) {
      if (placed.count(c)) continue;
      for (auto& gt : growing)
        if (gt.try_attach(c)) {
          placed.insert(c);
          grew = true;
          break;
        }
    }
  }
  return finish(growing, chords_of(g, tree));
}

WeightMap edge_weights(const std::vector<ExtensionTree>& trees) {
  WeightMap w;
  for (const auto& t : trees)
    for (const auto& e : t.edges) ++w.weight[e];
  return w;
}

namespace {

// Longest simple path in `tree` covering all of `critical` and avoiding
// `banned` edges; ties broken by lexicographically least canonical form.
std::optional<Path> pick_tree_path(const ExtensionTree& tree,
                                   const std::set<Edge>& critical,
                                   const std::set<Edge>& banned) {
  std::set<int> vertex_set;
  std::map<int, std::vector<int>> adj;
  for (const auto& e : tree.edges) {
    if (banned.count(e)) continue;
    vertex_set.insert(e.u);
    vertex_set.insert(e.v);
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());
  std::vector<int> vertices(vertex_set.begin(), vertex_set.end());

  auto path_between = [&](int from, int to) -> std::vector<int> {
    std::map<int, int> parent;
    std::vector<int> stack{from};
    parent[from] = from;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (v == to) break;
      for (int w : adj[v])
        if (!parent.count(w)) {
          parent[w] = v;
          stack.push_back(w);
        }
    }
    if (!parent.count(to)) return {};
    std::vector<int> nodes;
    for (int v = to; v != from; v = parent[v]) nodes.push_back(v);
    nodes.push_back(from);
    return nodes;
  };

  std::optional<Path> best;
  std::vector<int> best_key;
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      auto nodes = path_between(vertices[i], vertices[j]);
      if (nodes.size() < 2) continue;
      Path p{nodes};
      std::set<Edge> on_path;
      for (const auto& e : p.edges()) on_path.insert(e);
      bool covers = std::all_of(critical.begin(), critical.end(),
                                [&](const Edge& e) { return on_path.count(e); });
      if (!covers) continue;
      auto key = p.canonical().vertices;
      if (!best || p.length() > best->length() ||
          (p.length() == best->length() && key < best_key)) {
        best = p;
        best_key = std::move(key);
      }
    }
  return best;
}

}  // namespace

SelectResult select_paths(const std::vector<ExtensionTree>& trees, WeightMap w,
                          const std::vector<int>& order) {
  SelectResult out;
  Decomposition d;
  d.paths.resize(trees.size());
  for (int idx : order) {
    const auto& tree = trees[idx];
    std::set<Edge> critical, banned;
    for (const auto& e : tree.edges) {
      int weight = w.at(e);
      if (weight == 1) critical.insert(e);
      if (weight == 0) banned.insert(e);
    }
    auto path = pick_tree_path(tree, critical, banned);
    if (!path) {
      SelectFailure f;
      f.tree_index = tree.basic_index;
      f.uncoverable_critical.assign(critical.begin(), critical.end());
      out.infeasible = f;
      return out;
    }
    std::set<Edge> used;
    for (const auto& e : path->edges()) used.insert(e);
    for (const auto& e : tree.edges) {
      if (used.count(e))
        w.weight[e] = 0;
      else if (w.at(e) > 0)
        --w.weight[e];
    }
    d.paths[idx] = *path;
  }
  out.decomposition = std::move(d);
  return out;
}

DecompResult algorithm_4_1(const Graph& g, int retries, std::uint64_t seed) {
  if (!g.is_connected()) throw std::invalid_argument("graph must be connected");
  DecompResult result;
  result.method = "bpd-extend";
  if (g.n() == 1) return result;  // nothing to cover

  Graph tree = spanning_tree(g);
  const int bound = gallai_bound(g.n());
  std::optional<DecompFailure> last_failure;

  for (int attempt = 0; attempt <= retries; ++attempt) {
    SplitMix64 rng(mix_seed(seed, 0xb9d0 + static_cast<std::uint64_t>(attempt)));

    int split = -1;
    BasicPathDecomposition basic = basic_path_decomposition(tree);
    if (attempt > 0 && g.n() % 2 == 1) {
      int two_paths = basic.two_path_count + 1;  // before splitting
      split = static_cast<int>(rng_below(rng, two_paths));
      basic = basic_path_decomposition(tree, split);
    }

    ExtendResult ext;
    if (attempt == 0) {
      ext = extend_to_trees(g, tree, basic);
    } else {
      EdgeList chords;
      for (const auto& e : g.edges())
        if (!tree.has_edge(e.u, e.v)) chords.push_back(e);
      shuffle(chords, rng);
      ext = extend_to_trees_first_fit(g, tree, basic, chords);
    }
    if (!ext.unplaced_chords.empty()) {
      std::string detail = "chord fits no tree:";
      for (const auto& c : ext.unplaced_chords)
        detail += " " + std::to_string(c.u) + "-" + std::to_string(c.v);
      last_failure = DecompFailure{"extend_to_trees", detail};
      continue;
    }

    std::vector<int> order(ext.trees.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    if (attempt > 0) shuffle(order, rng);

    auto sel = select_paths(ext.trees, edge_weights(ext.trees), order);
    if (sel.infeasible) {
      std::string detail =
          "tree " + std::to_string(sel.infeasible->tree_index) +
          " has no single path covering critical edges:";
      for (const auto& c : sel.infeasible->uncoverable_critical)
        detail += " " + std::to_string(c.u) + "-" + std::to_string(c.v);
      last_failure = DecompFailure{"select_paths", detail};
      continue;
    }

    auto report = verify_decomposition(g, *sel.decomposition);
    if (!report.valid || report.path_count != bound) {
      last_failure = DecompFailure{"select_paths", "selection left edges unused"};
      continue;
    }
    result.paths = std::move(*sel.decomposition);
    result.retries_used = attempt;
    return result;
  }
  result.retries_used = retries;
  result.failure = last_failure.value_or(
      DecompFailure{"algorithm_4_1", "no attempt succeeded"});
  return result;
}

}  // namespace gallai
