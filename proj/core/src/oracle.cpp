#include "gallai/oracle.hpp"

#include <algorithm>
#include <bit>

#include "gallai/bpd.hpp"
#include "gallai/ham_table.hpp"
#include "gallai/incremental.hpp"
#include "gallai/mepp.hpp"
#include "gallai/pseudo_tree.hpp"

namespace gallai {

namespace {

struct Search {
  const Graph& g;
  std::vector<Edge> edges;                      // sorted, index = bit position
  std::vector<std::vector<std::pair<int, int>>> incident;  // v -> (nbr, edge idx)
  std::uint32_t full_mask = 0;

  int best = 0;
  std::vector<Path> best_paths;
  std::vector<Path> current;
  std::uint64_t nodes = 0;

  explicit Search(const Graph& graph) : g(graph), edges(graph.edges()) {
    incident.assign(g.n() + 1, {});
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      incident[edges[i].u].push_back({edges[i].v, i});
      incident[edges[i].v].push_back({edges[i].u, i});
      full_mask |= 1u << i;
    }
  }

  int lower_bound(std::uint32_t mask) const {
    int odd = 0;
    for (int v = 1; v <= g.n(); ++v) {
      int d = 0;
      for (auto [w, idx] : incident[v])
        if (mask & (1u << idx)) ++d;
      if (d % 2) ++odd;
    }
    return std::max(odd / 2, 1);
  }

  // Enumerates simple paths through the seed edge: all left arms from u
  // (smaller endpoint first, neighbors ascending), then right arms from v.
  // `verts` holds the current path front..back; recursion extends the front
  // while growing the left arm, then the back.
  template <typename Fn>
  void arms(std::vector<int>& verts, std::uint32_t used, bool left_done,
            std::uint32_t mask, const Fn& visit) {
    if (left_done) visit(verts, used);
    if (!left_done) {
      arms(verts, used, true, mask, visit);  // stop growing the left arm
      int front = verts.front();
      for (auto [w, idx] : incident[front]) {
        if (!(mask & (1u << idx)) || (used & (1u << idx))) continue;
        if (std::find(verts.begin(), verts.end(), w) != verts.end()) continue;
        verts.insert(verts.begin(), w);
        arms(verts, used | (1u << idx), false, mask, visit);
        verts.erase(verts.begin());
      }
    } else {
      int back = verts.back();
      for (auto [w, idx] : incident[back]) {
        if (!(mask & (1u << idx)) || (used & (1u << idx))) continue;
        if (std::find(verts.begin(), verts.end(), w) != verts.end()) continue;
        verts.push_back(w);
        arms(verts, used | (1u << idx), true, mask, visit);
        verts.pop_back();
      }
    }
  }

  void recurse(std::uint32_t mask) {
    ++nodes;
    if (mask == 0) {
      if (static_cast<int>(current.size()) < best) {
        best = static_cast<int>(current.size());
        best_paths = current;
      }
      return;
    }
    if (static_cast<int>(current.size()) + lower_bound(mask) >= best) return;
    int seed = std::countr_zero(mask);
    std::vector<int> verts{edges[seed].u, edges[seed].v};
    arms(verts, 1u << seed, false, mask, [&](const std::vector<int>& vs,
                                             std::uint32_t used) {
      current.push_back(Path{vs});
      recurse(mask & ~used);
      current.pop_back();
    });
  }
};

}  // namespace

OracleResult min_path_decomposition(const Graph& g, int max_edges) {
  if (max_edges > 31) throw std::invalid_argument("oracle limit capped at 31 edges");
  if (g.e() > max_edges) throw EdgeLimitError(g.e(), max_edges);
  OracleResult out;
  if (g.e() == 0) return out;

  Search s(g);
  // trivial incumbent: one path per edge
  s.best = g.e() + 1;
  s.recurse(s.full_mask);
  out.minimum = s.best;
  out.witness.paths = s.best_paths;
  out.nodes_explored = s.nodes;
  return out;
}

GallaiCheck check_gallai(const Graph& g, int max_edges) {
  auto r = min_path_decomposition(g, max_edges);
  GallaiCheck c;
  c.minimum = r.minimum;
  c.bound = gallai_bound(g.n());
  c.holds = c.minimum <= c.bound;
  return c;
}

std::vector<MethodRecord> compare_methods(const Graph& g, int max_edges) {
  std::optional<int> minimum;
  if (g.e() <= max_edges) minimum = min_path_decomposition(g, max_edges).minimum;

  std::vector<std::pair<std::string, DecompResult>> runs;
  runs.emplace_back("mepp", decompose_graph_mepp(g));
  runs.emplace_back("pseudo-tree", decompose_pseudo_tree(g));
  runs.emplace_back("bpd-extend", algorithm_4_1(g));
  runs.emplace_back("ham-table", algorithm_5_1(g));
  runs.emplace_back("incremental", decompose_incremental(g));

  std::vector<MethodRecord> records;
  for (auto& [name, result] : runs) {
    MethodRecord rec;
    rec.method = name;
    rec.failure = result.failure;
    if (result.ok()) {
      auto report = verify_decomposition(g, result.paths);
      rec.path_count = report.path_count;
      rec.valid = report.valid;
      rec.within_bound = report.within_bound;
      if (minimum && report.valid) rec.gap_to_minimum = rec.path_count - *minimum;
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace gallai
