#include "gallai/incremental.hpp"

#include <algorithm>

#include "gallai/bpd.hpp"
#include "gallai/mepp.hpp"
#include "gallai/rng.hpp"

namespace gallai {

std::string to_string(InsertTrace::Action a) {
  switch (a) {
    case InsertTrace::Action::new_path: return "new_path";
    case InsertTrace::Action::appended_at_u: return "appended_at_u";
    case InsertTrace::Action::appended_at_v: return "appended_at_v";
    case InsertTrace::Action::reshuffled_then_appended:
      return "reshuffled_then_appended";
    case InsertTrace::Action::failed: return "failed";
  }
  return "?";
}

std::optional<int> lemma_2_3_search(const Decomposition& d, int u, int v) {
  for (int i = 0; i < d.count(); ++i) {
    const Path& p = d.paths[i];
    bool ends_u = p.front() == u || p.back() == u;
    bool ends_v = p.front() == v || p.back() == v;
    if (ends_u && !p.contains(v)) return i;
    if (ends_v && !p.contains(u)) return i;
  }
  return std::nullopt;
}

namespace {

// Appends the free endpoint of uv to path index i; which end hosts is found
// again here (the search only guarantees one exists).
InsertTrace::Action append_edge(Decomposition& d, int i, Edge uv) {
  Path& p = d.paths[i];
  auto extend = [&p](int at, int add) {
    if (p.back() == at)
      p.vertices.push_back(add);
    else
      p.vertices.insert(p.vertices.begin(), add);
  };
  bool ends_u = (p.front() == uv.u || p.back() == uv.u) && !p.contains(uv.v);
  if (ends_u) {
    extend(uv.u, uv.v);
    return InsertTrace::Action::appended_at_u;
  }
  extend(uv.v, uv.u);
  return InsertTrace::Action::appended_at_v;
}

}  // namespace

std::pair<Decomposition, InsertTrace> insert_edge(const Graph& g_next,
                                                  const Decomposition& d,
                                                  Edge uv) {
  InsertTrace trace;
  trace.edge = make_edge(uv.u, uv.v);
  Decomposition out = d;

  if (out.count() < gallai_bound(g_next.n())) {
    out.paths.push_back(Path{{uv.u, uv.v}});
    trace.action = InsertTrace::Action::new_path;
    trace.path_index = out.count() - 1;
    return {out, trace};
  }
  if (auto i = lemma_2_3_search(out, uv.u, uv.v)) {
    trace.action = append_edge(out, *i, trace.edge);
    trace.path_index = *i;
    return {out, trace};
  }
  Decomposition merged = endpoint_merge(g_next, out);
  if (auto i = lemma_2_3_search(merged, uv.u, uv.v)) {
    append_edge(merged, *i, trace.edge);
    trace.action = InsertTrace::Action::reshuffled_then_appended;
    trace.path_index = *i;
    return {merged, trace};
  }
  trace.action = InsertTrace::Action::failed;
  return {d, trace};
}

namespace {

struct InsertionRun {
  Decomposition cover;
  std::vector<InsertTrace> traces;
  EdgeList failed_edges;
};

InsertionRun run_insertions(const Graph& g, const Decomposition& tree_cover,
                            const EdgeList& chords) {
  InsertionRun run;
  run.cover = tree_cover;
  Graph tree = spanning_tree(g);
  EdgeList present = tree.edges();
  for (const auto& c : chords) {
    present.push_back(c);
    Graph g_next(g.n(), present);
    auto [next, trace] = insert_edge(g_next, run.cover, c);
    run.traces.push_back(trace);
    if (trace.action == InsertTrace::Action::failed) {
      run.failed_edges.push_back(c);
      present.pop_back();  // edge stays uncovered
    } else {
      run.cover = std::move(next);
    }
  }
  return run;
}

}  // namespace

DecompResult decompose_incremental(const Graph& g, int retries,
                                   std::uint64_t seed,
                                   std::vector<InsertTrace>* traces) {
  if (!g.is_connected()) throw std::invalid_argument("graph must be connected");
  DecompResult result;
  result.method = "incremental";

  Graph tree = spanning_tree(g);
  DecompResult tree_peel = decompose_tree_mepp(tree);
  if (!tree_peel.ok()) {
    result.failure = tree_peel.failure;
    return result;
  }
  EdgeList chords;
  for (const auto& e : g.edges())
    if (!tree.has_edge(e.u, e.v)) chords.push_back(e);

  InsertionRun best;
  bool have_best = false;
  for (int attempt = 0; attempt <= retries; ++attempt) {
    EdgeList order = chords;
    if (attempt > 0) {
      SplitMix64 rng(mix_seed(seed, 0x1c2e + static_cast<std::uint64_t>(attempt)));
      shuffle(order, rng);
    }
    InsertionRun run = run_insertions(g, tree_peel.paths, order);
    if (!have_best || run.failed_edges.size() < best.failed_edges.size()) {
      best = run;
      have_best = true;
      result.retries_used = attempt;
    }
    if (best.failed_edges.empty()) break;
  }

  result.paths = best.cover;
  if (traces) *traces = best.traces;
  if (!best.failed_edges.empty()) {
    std::string detail = "edges not inserted:";
    for (const auto& e : best.failed_edges)
      detail += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
    result.failure = DecompFailure{"insert_edge", detail};
  }
  return result;
}

}  // namespace gallai
