#include "gallai/mepp.hpp"

#include <algorithm>
#include <set>

namespace gallai {

namespace {

void require_path_of(const Graph& g, const Path& p) {
  if (!p.is_simple()) throw std::invalid_argument("not a simple path");
  for (int v : p.vertices)
    if (v < 1 || v > g.n()) throw std::invalid_argument("path label out of range");
  for (size_t i = 0; i + 1 < p.vertices.size(); ++i)
    if (!g.has_edge(p.vertices[i], p.vertices[i + 1]))
      throw std::invalid_argument("path uses a non-edge");
}

int nonsingleton_components(const Graph& g) {
  int c = 0;
  for (const auto& comp : g.components())
    if (comp.size() > 1) ++c;
  return c;
}

// Unique tree path between two vertices (ignores isolated vertices).
Path tree_path(const Graph& g, int from, int to) {
  std::vector<int> parent(g.n() + 1, 0);
  std::vector<int> stack{from};
  parent[from] = from;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == to) break;
    for (int w : g.neighbors(v))
      if (!parent[w]) {
        parent[w] = v;
        stack.push_back(w);
      }
  }
  Path p;
  for (int v = to; v != from; v = parent[v]) p.vertices.push_back(v);
  p.vertices.push_back(from);
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

// Greedy maximal path: grow at the back, then at the front, always toward
// the smallest unvisited neighbor.
Path greedy_maximal_path(const Graph& g, int start) {
  Path p;
  p.vertices.push_back(start);
  std::set<int> in_path{start};
  auto extend = [&](bool at_back) {
    while (true) {
      int end = at_back ? p.vertices.back() : p.vertices.front();
      int next = 0;
      for (int w : g.neighbors(end))
        if (!in_path.count(w)) {
          next = w;
          break;
        }
      if (!next) break;
      in_path.insert(next);
      if (at_back)
        p.vertices.push_back(next);
      else
        p.vertices.insert(p.vertices.begin(), next);
    }
  };
  extend(true);
  extend(false);
  return p;
}

std::vector<Path> mepp_candidates(const Graph& g) {
  std::vector<Path> cands;
  if (g.is_tree_ignoring_isolated()) {
    std::vector<int> leaves;
    for (int v = 1; v <= g.n(); ++v)
      if (g.degree(v) == 1) leaves.push_back(v);
    for (size_t i = 0; i < leaves.size(); ++i)
      for (size_t j = i + 1; j < leaves.size(); ++j)
        cands.push_back(tree_path(g, leaves[i], leaves[j]));
  } else {
    for (int v = 1; v <= g.n(); ++v) {
      if (g.degree(v) == 0) continue;
      Path p = greedy_maximal_path(g, v);
      if (p.length() >= 1) cands.push_back(p);
    }
  }
  return cands;
}

const Path* lex_least(const std::vector<Path>& paths) {
  const Path* best = nullptr;
  std::vector<int> best_key;
  for (const auto& p : paths) {
    auto key = p.canonical().vertices;
    if (!best || key < best_key) {
      best = &p;
      best_key = std::move(key);
    }
  }
  return best;
}

}  // namespace

bool is_maximally_extended(const Graph& g, const Path& p) {
  require_path_of(g, p);
  std::set<int> in_path(p.vertices.begin(), p.vertices.end());
  for (int end : {p.front(), p.back()})
    for (int w : g.neighbors(end))
      if (!in_path.count(w)) return false;
  return true;
}

bool is_peripheral(const Graph& g, const Path& p) {
  require_path_of(g, p);
  return nonsingleton_components(remove_path_edges(g, p)) <= 1;
}

MeppCertificate certify_path(const Graph& g, const Path& p) {
  MeppCertificate c;
  c.path = p;
  c.maximally_extended = is_maximally_extended(g, p);
  c.remainder_components = nonsingleton_components(remove_path_edges(g, p));
  c.peripheral = c.remainder_components <= 1;
  return c;
}

std::optional<Path> find_mepp(const Graph& g) {
  std::vector<Path> qualifying;
  for (const auto& p : mepp_candidates(g))
    if (is_maximally_extended(g, p) && is_peripheral(g, p))
      qualifying.push_back(p);
  if (qualifying.empty()) return std::nullopt;
  return lex_least(qualifying)->canonical();
}

DecompResult decompose_tree_mepp(const Graph& g) {
  if (!g.is_tree()) throw std::invalid_argument("decompose_tree_mepp needs a tree");
  DecompResult r;
  r.method = "mepp";
  Graph cur = g;
  while (cur.e() > 0) {
    auto p = find_mepp(cur);
    if (!p) {
      r.failure = DecompFailure{"find_mepp",
                                "no maximally extended peripheral path found"};
      return r;
    }
    Graph next = remove_path_edges(cur, *p);
    r.peel_drops.push_back(cur.non_isolated_count() - next.non_isolated_count());
    r.peel_peripheral.push_back(true);
    r.paths.paths.push_back(*p);
    cur = std::move(next);
  }
  return r;
}

DecompResult decompose_graph_mepp(const Graph& g) {
  if (!g.is_connected()) throw std::invalid_argument("graph must be connected");
  DecompResult r;
  r.method = "mepp";
  Graph cur = g;
  while (cur.e() > 0) {
    // smallest-labeled component with edges first
    std::vector<int> comp_vertices;
    for (const auto& comp : cur.components())
      if (comp.size() > 1) {
        comp_vertices = comp;
        break;
      }
    std::set<int> in_comp(comp_vertices.begin(), comp_vertices.end());
    EdgeList comp_edges;
    for (const auto& e : cur.edges())
      if (in_comp.count(e.u)) comp_edges.push_back(e);
    Graph comp(cur.n(), comp_edges);

    Path peel;
    bool peripheral = true;
    if (auto p = find_mepp(comp)) {
      peel = *p;
    } else {
      peripheral = false;
      auto cands = mepp_candidates(comp);
      peel = lex_least(cands)->canonical();
    }
    Graph next = remove_path_edges(cur, peel);
    r.peel_drops.push_back(cur.non_isolated_count() - next.non_isolated_count());
    r.peel_peripheral.push_back(peripheral);
    r.paths.paths.push_back(peel);
    cur = std::move(next);
  }
  return r;
}

ConjectureStats conjecture_2_1_stats(const Graph& g, const DecompResult& peel) {
  if (!peel.ok()) throw std::invalid_argument("peel did not succeed");
  ConjectureStats s;
  s.edges = g.e();
  s.path_count = peel.paths.count();
  s.threshold = (g.e() + 1) / gallai_bound(g.n());
  // l >= threshold  <=>  e >= threshold * path_count (exact arithmetic)
  s.holds = s.edges >= s.threshold * s.path_count;
  return s;
}

}  // namespace gallai
