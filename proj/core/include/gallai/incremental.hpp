#pragma once

// Edge-induction decomposer: start from the spanning tree's peel cover and
// insert the remaining edges one at a time. An edge uv either opens a new
// 1-path (when the count is under the bound), extends a path that ends at u
// or v without containing the other, or, after one endpoint-merge reshuffle,
// fails — failure is data, not an exception.

#include <cstdint>

#include "gallai/decomp_result.hpp"
#include "gallai/graph.hpp"

namespace gallai {

struct InsertTrace {
  enum class Action {
    new_path,
    appended_at_u,
    appended_at_v,
    reshuffled_then_appended,
    failed,
  };

  Edge edge;
  Action action = Action::failed;
  std::optional<int> path_index;
};

std::string to_string(InsertTrace::Action a);

// Lowest-index path ending at u and not containing v, or ending at v and
// not containing u.
std::optional<int> lemma_2_3_search(const Decomposition& d, int u, int v);

// d must be valid for g_next minus uv. On failure the decomposition is
// returned unchanged.
std::pair<Decomposition, InsertTrace> insert_edge(const Graph& g_next,
                                                  const Decomposition& d,
                                                  Edge uv);

// Spanning tree -> tree peel -> insert chords in canonical order; on any
// failed insertion the whole pass is retried with seeded chord shuffles.
// A failed result still carries the valid partial cover and names the
// edges that could not be placed.
DecompResult decompose_incremental(const Graph& g, int retries = 16,
                                   std::uint64_t seed = 0,
                                   std::vector<InsertTrace>* traces = nullptr);

}  // namespace gallai
