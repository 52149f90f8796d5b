#include "gallai/pseudo_tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "gallai/rng.hpp"

namespace gallai {

Relabeling bfs_label(const Graph& g, int start) {
  if (start < 1 || start > g.n())
    throw std::invalid_argument("start label out of range");
  if (!g.is_connected()) throw std::invalid_argument("graph must be connected");
  Relabeling rel;
  rel.to_new.assign(g.n() + 1, 0);
  rel.to_old.assign(g.n() + 1, 0);
  std::deque<int> queue{start};
  int next = 1;
  rel.to_new[start] = next;
  rel.to_old[next] = start;
  ++next;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (rel.to_new[w]) continue;
      rel.to_new[w] = next;
      rel.to_old[next] = w;
      ++next;
      queue.push_back(w);
    }
  }
  return rel;
}

Graph apply_relabeling(const Graph& g, const Relabeling& rel) {
  EdgeList edges;
  for (const auto& e : g.edges())
    edges.push_back(make_edge(rel.to_new[e.u], rel.to_new[e.v]));
  return Graph(g.n(), std::move(edges));
}

Edge PseudoTree::realized_edge(int node) const {
  int parent = nodes[node].parent;
  if (parent < 0) throw std::invalid_argument("root realizes no edge");
  return make_edge(nodes[parent].label, nodes[node].label);
}

bool PseudoTree::is_duplicate(int node) const {
  for (auto [first, dup] : pseudo_edges)
    if (dup == node) return true;
  return false;
}

PseudoTree build_pseudo_tree(const Graph& g, const Relabeling& rel) {
  Graph relabeled = apply_relabeling(g, rel);
  PseudoTree t;
  t.graph_n = g.n();
  t.graph_e = g.e();

  std::vector<int> primary(g.n() + 1, -1);
  std::set<Edge> realized;
  t.nodes.push_back({1, -1});
  primary[1] = 0;
  for (int label = 1; label <= g.n(); ++label) {
    int at = primary[label];
    if (at < 0) continue;  // unreachable under a bad relabeling; pre-checked
    for (int nbr : relabeled.neighbors(label)) {
      Edge e = make_edge(label, nbr);
      if (realized.count(e)) continue;
      realized.insert(e);
      int id = static_cast<int>(t.nodes.size());
      t.nodes.push_back({nbr, at});
      if (primary[nbr] < 0)
        primary[nbr] = id;
      else
        t.pseudo_edges.push_back({primary[nbr], id});
    }
  }
  return t;
}

namespace {

struct WalkContext {
  const PseudoTree& t;
  std::vector<std::vector<int>> adjacency;  // node -> tree neighbors, ascending
  std::vector<bool> edge_used;              // indexed by child node id
  std::set<int> stop_nodes;                 // first occurrences of duplicated labels
  std::vector<bool> duplicate;

  explicit WalkContext(const PseudoTree& tree) : t(tree) {
    adjacency.assign(t.nodes.size(), {});
    edge_used.assign(t.nodes.size(), false);
    duplicate.assign(t.nodes.size(), false);
    for (size_t v = 1; v < t.nodes.size(); ++v) {
      adjacency[v].push_back(t.nodes[v].parent);
      adjacency[t.nodes[v].parent].push_back(static_cast<int>(v));
    }
    for (auto& a : adjacency) std::sort(a.begin(), a.end());
    for (auto [first, dup] : t.pseudo_edges) {
      stop_nodes.insert(first);
      duplicate[dup] = true;
    }
  }

  int edge_child(int a, int b) const {  // child node id of tree edge {a,b}
    return t.nodes[a].parent == b ? a : b;
  }

  // Follows unused tree edges from `start`, smallest node id first. Stops on
  // arrival at another pseudo edge's first-occurrence node; never enters a
  // duplicate node or repeats a label.
  std::vector<int> walk(int start) {
    std::vector<int> nodes{start};
    std::set<int> labels{t.nodes[start].label};
    int cur = start;
    while (true) {
      int next = -1;
      for (int nbr : adjacency[cur]) {
        if (edge_used[edge_child(cur, nbr)]) continue;
        if (duplicate[nbr]) continue;
        if (labels.count(t.nodes[nbr].label)) continue;
        next = nbr;
        break;
      }
      if (next < 0) break;
      edge_used[edge_child(cur, next)] = true;
      nodes.push_back(next);
      labels.insert(t.nodes[next].label);
      cur = next;
      if (stop_nodes.count(cur)) break;
    }
    return nodes;
  }

  Path to_path(const std::vector<int>& nodes) const {
    Path p;
    for (int v : nodes) p.vertices.push_back(t.nodes[v].label);
    return p;
  }
};

// Longest label-simple path inside the leftover forest component containing
// `nodes`; unique tree paths per node pair.
std::optional<std::vector<int>> best_leftover_path(const WalkContext& ctx,
                                                   const std::vector<int>& comp,
                                                   const std::vector<bool>& live) {
  auto path_between = [&](int from, int to) -> std::vector<int> {
    std::map<int, int> parent;
    std::vector<int> stack{from};
    parent[from] = from;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (v == to) break;
      for (int w : ctx.adjacency[v]) {
        if (!live[ctx.edge_child(v, w)]) continue;
        if (parent.count(w)) continue;
        parent[w] = v;
        stack.push_back(w);
      }
    }
    if (!parent.count(to)) return {};
    std::vector<int> nodes;
    for (int v = to; v != from; v = parent[v]) nodes.push_back(v);
    nodes.push_back(from);
    std::reverse(nodes.begin(), nodes.end());
    return nodes;
  };

  std::optional<std::vector<int>> best;
  std::vector<int> best_key;
  for (size_t i = 0; i < comp.size(); ++i) {
    for (size_t j = i + 1; j < comp.size(); ++j) {
      auto nodes = path_between(comp[i], comp[j]);
      if (nodes.size() < 2) continue;
      std::set<int> labels;
      bool simple = true;
      for (int v : nodes)
        if (!labels.insert(ctx.t.nodes[v].label).second) {
          simple = false;
          break;
        }
      if (!simple) continue;
      auto key = ctx.to_path(nodes).canonical().vertices;
      if (!best || nodes.size() > best->size() ||
          (nodes.size() == best->size() && key < best_key)) {
        best = nodes;
        best_key = std::move(key);
      }
    }
  }
  return best;
}

}  // namespace

PairResult algorithm_3_1(const PseudoTree& t,
                         std::optional<std::uint64_t> shuffle_seed) {
  WalkContext ctx(t);
  PairResult result;

  // deepest duplicated label first; ties by duplicate node id
  std::vector<size_t> order(t.pseudo_edges.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    int la = t.nodes[t.pseudo_edges[a].first].label;
    int lb = t.nodes[t.pseudo_edges[b].first].label;
    if (la != lb) return la > lb;
    return t.pseudo_edges[a].second < t.pseudo_edges[b].second;
  });
  if (shuffle_seed) {
    SplitMix64 rng(mix_seed(*shuffle_seed, 0x33a1));
    shuffle(order, rng);
  }

  for (size_t idx : order) {
    auto [first, dup] = t.pseudo_edges[idx];
    Path a = ctx.to_path(ctx.walk(first));
    Path b = ctx.to_path(ctx.walk(dup));
    bool a_real = a.length() >= 1, b_real = b.length() >= 1;
    if (a_real && b_real)
      result.path_pairs.push_back({a, b});
    else if (a_real)
      result.single_paths.push_back(a);
    else if (b_real)
      result.single_paths.push_back(b);
  }

  // leftover edges: greedy longest-first label-simple paths per component
  std::vector<bool> live(t.nodes.size(), false);
  int leftover = 0;
  for (size_t v = 1; v < t.nodes.size(); ++v)
    if (!ctx.edge_used[v]) {
      live[v] = true;
      ++leftover;
    }
  std::vector<Path> singles;
  while (leftover > 0) {
    // components of the live forest
    std::set<int> in_any;
    std::vector<std::vector<int>> comps;
    for (size_t v = 1; v < t.nodes.size(); ++v) {
      if (!live[v] || in_any.count(static_cast<int>(v))) continue;
      std::vector<int> comp, stack{static_cast<int>(v)};
      std::set<int> seen{static_cast<int>(v)};
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        comp.push_back(x);
        for (int w : ctx.adjacency[x]) {
          if (!live[ctx.edge_child(x, w)] || seen.count(w)) continue;
          seen.insert(w);
          stack.push_back(w);
        }
      }
      std::sort(comp.begin(), comp.end());
      for (int x : comp) in_any.insert(x);
      comps.push_back(std::move(comp));
    }
    std::optional<std::vector<int>> best;
    std::vector<int> best_key;
    for (const auto& comp : comps) {
      auto cand = best_leftover_path(ctx, comp, live);
      if (!cand) continue;
      auto key = ctx.to_path(*cand).canonical().vertices;
      if (!best || cand->size() > best->size() ||
          (cand->size() == best->size() && key < best_key)) {
        best = *cand;
        best_key = std::move(key);
      }
    }
    if (!best) {
      // isolated leftover edges whose endpoints share labels with everything
      // nearby cannot happen: a single live edge is always label-simple
      break;
    }
    for (size_t i = 0; i + 1 < best->size(); ++i)
      live[ctx.edge_child((*best)[i], (*best)[i + 1])] = false;
    leftover -= static_cast<int>(best->size()) - 1;
    singles.push_back(ctx.to_path(*best));
  }
  // merge singles that meet at an end label (keeps the count down; they stay
  // plain single paths of the underlying graph)
  bool joined = true;
  while (joined) {
    joined = false;
    for (size_t i = 0; i < singles.size() && !joined; ++i)
      for (size_t j = i + 1; j < singles.size() && !joined; ++j)
        if (auto m = join_at_shared_end(singles[i], singles[j])) {
          singles[i] = *m;
          singles.erase(singles.begin() + static_cast<long>(j));
          joined = true;
        }
  }
  for (auto& p : singles) result.single_paths.push_back(p);
  return result;
}

Decomposition contract(const PseudoTree&, const PairResult& r) {
  Decomposition d;
  for (const auto& [a, b] : r.path_pairs) {
    std::set<int> ia(a.vertices.begin() + 1, a.vertices.end());
    bool disjoint = true;
    for (size_t i = 1; i < b.vertices.size(); ++i)
      if (ia.count(b.vertices[i])) {
        disjoint = false;
        break;
      }
    if (disjoint) {
      Path glued = a.reversed();
      glued.vertices.insert(glued.vertices.end(), b.vertices.begin() + 1,
                            b.vertices.end());
      d.paths.push_back(glued);
    } else {
      d.paths.push_back(a);
      d.paths.push_back(b);
    }
  }
  for (const auto& p : r.single_paths) d.paths.push_back(p);
  return d;
}

int theorem_3_1_bound(int e) {
  if (e < 0) throw std::invalid_argument("negative edge count");
  return (e + 2) / 2;
}

bool conjecture_3_2_check(const PairResult& r, int n) {
  return r.D() + r.S() <= gallai_bound(n);
}

DecompResult decompose_pseudo_tree(const Graph& g,
                                   std::optional<std::uint64_t> shuffle_seed) {
  if (!g.is_connected()) throw std::invalid_argument("graph must be connected");
  DecompResult result;
  result.method = "pseudo-tree";
  Relabeling rel = bfs_label(g, 1);
  PseudoTree t = build_pseudo_tree(g, rel);
  PairResult pairs = algorithm_3_1(t, shuffle_seed);
  Decomposition d = contract(t, pairs);
  for (auto& p : d.paths)
    for (auto& v : p.vertices) v = rel.to_old[v];
  result.paths = std::move(d);
  return result;
}

std::string dump_pseudo_tree(const PseudoTree& t) {
  std::ostringstream os;
  for (size_t v = 0; v < t.nodes.size(); ++v)
    os << v << ' ' << t.nodes[v].label << ' ' << t.nodes[v].parent << '\n';
  for (auto [a, b] : t.pseudo_edges) os << a << ' ' << b << '\n';
  return os.str();
}

}  // namespace gallai
