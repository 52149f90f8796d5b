#include <set>

#include "doctest.h"
#include "gallai/bpd.hpp"
#include "gallai/generators.hpp"
#include "test_helpers.hpp"

using namespace gallai;
using namespace gallai::testing;

namespace {

Graph path_graph(int n) {
  EdgeList e;
  for (int v = 1; v < n; ++v) e.push_back({v, v + 1});
  return Graph(n, std::move(e));
}

}  // namespace

TEST_CASE("spanning_tree fixtures") {
  Graph t = random_tree(9, 2);
  CHECK(spanning_tree(t) == t);

  Graph k3 = graph(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(spanning_tree(k3) == graph(3, {{1, 2}, {1, 3}}));

  CHECK(spanning_tree(complete_graph(4)) ==
        graph(4, {{1, 2}, {1, 3}, {1, 4}}));  // star at 1

  CHECK_THROWS_AS(spanning_tree(graph(4, {{1, 2}, {3, 4}})),
                  std::invalid_argument);
}

TEST_CASE("basic path decomposition composition by parity") {
  auto p6 = basic_path_decomposition(path_graph(6));
  CHECK(p6.two_path_count == 2);
  CHECK(p6.one_path_count == 1);

  auto p5 = basic_path_decomposition(path_graph(5));
  CHECK(p5.two_path_count == 1);
  CHECK(p5.one_path_count == 2);

  auto star = basic_path_decomposition(graph(4, {{1, 2}, {2, 3}, {2, 4}}));
  CHECK(star.two_path_count == 1);
  CHECK(star.one_path_count == 1);

  CHECK_THROWS_AS(basic_path_decomposition(complete_graph(3)),
                  std::invalid_argument);
}

TEST_CASE("basic paths partition the tree with exactly the bound") {
  for (int n = 2; n <= 7; ++n) {
    for_each_labeled_tree(n, [n](const Graph& t) {
      auto b = basic_path_decomposition(t);
      int k = (n + 1) / 2;
      if (n % 2 == 0) {
        CHECK(b.two_path_count == k - 1);
        CHECK(b.one_path_count == 1);
      } else {
        CHECK(b.two_path_count == k - 2);
        CHECK(b.one_path_count == 2);
      }
      CHECK(static_cast<int>(b.paths.size()) == gallai_bound(n));
      Decomposition d{b.paths};
      auto report = verify_decomposition(t, d);
      CHECK(report.valid);
      for (const auto& p : b.paths) CHECK(p.length() <= 2);
    });
  }
}

TEST_CASE("extend_to_trees on a tree leaves each basic path alone") {
  Graph t = random_tree(8, 5);
  auto b = basic_path_decomposition(t);
  auto ext = extend_to_trees(t, t, b);
  CHECK(ext.unplaced_chords.empty());
  REQUIRE(ext.trees.size() == b.paths.size());
  for (size_t i = 0; i < ext.trees.size(); ++i) {
    EdgeList expected = b.paths[i].edges();
    std::sort(expected.begin(), expected.end());
    CHECK(ext.trees[i].edges == expected);
  }
}

TEST_CASE("a chord both of whose endpoints already sit in every tree is reported") {
  // force the degenerate single-2-path cover of the triangle's spanning star
  Graph k3 = graph(3, {{1, 2}, {2, 3}, {1, 3}});
  Graph star = graph(3, {{1, 2}, {1, 3}});
  BasicPathDecomposition b;
  b.paths = {path({2, 1, 3})};
  b.two_path_count = 1;
  auto ext = extend_to_trees(k3, star, b);
  REQUIRE(ext.unplaced_chords.size() == 1);
  CHECK(ext.unplaced_chords[0] == make_edge(2, 3));
}

TEST_CASE("canonical chord sweeps on the showcase graph strand edge 4-5") {
  // documents why algorithm_4_1 carries a retry policy
  Graph g = showcase_graph();
  Graph t = spanning_tree(g);
  auto ext = extend_to_trees(g, t, basic_path_decomposition(t));
  CHECK(ext.unplaced_chords == EdgeList{make_edge(4, 5)});
}

TEST_CASE("edge_weights counts occurrences") {
  std::vector<ExtensionTree> trees(2);
  trees[0].basic_index = 0;
  trees[0].edges = {make_edge(1, 2), make_edge(2, 3)};
  trees[1].basic_index = 1;
  trees[1].edges = {make_edge(2, 3), make_edge(3, 4)};
  auto w = edge_weights(trees);
  CHECK(w.at(make_edge(2, 3)) == 2);
  CHECK(w.at(make_edge(1, 2)) == 1);
  CHECK(w.at(make_edge(5, 6)) == 0);
  CHECK(edge_weights({}).weight.empty());
}

TEST_CASE("select_paths on a hand-built feasible tree set") {
  std::vector<ExtensionTree> trees(3);
  trees[0] = {0, {make_edge(1, 2), make_edge(2, 5), make_edge(3, 5), make_edge(3, 4)}};
  trees[1] = {1, {make_edge(1, 3), make_edge(2, 3), make_edge(2, 4)}};
  trees[2] = {2, {make_edge(1, 4), make_edge(4, 5)}};
  auto sel = select_paths(trees, edge_weights(trees), {0, 1, 2});
  REQUIRE(sel.decomposition.has_value());
  CHECK(*sel.decomposition == decomp({{1, 2, 5, 3, 4}, {1, 3, 2, 4}, {1, 4, 5}}));
}

TEST_CASE("select_paths reports an uncoverable critical star") {
  std::vector<ExtensionTree> trees(1);
  trees[0] = {0, {make_edge(1, 2), make_edge(1, 3), make_edge(1, 4)}};
  auto sel = select_paths(trees, edge_weights(trees), {0});
  REQUIRE(sel.infeasible.has_value());
  CHECK(sel.infeasible->tree_index == 0);
  CHECK(sel.infeasible->uncoverable_critical.size() == 3);
}

TEST_CASE("algorithm_4_1 covers the showcase graph in exactly three paths") {
  Graph g = showcase_graph();
  auto r = algorithm_4_1(g);
  REQUIRE(r.ok());
  auto report = verify_decomposition(g, r.paths);
  CHECK(report.valid);
  CHECK(report.path_count == 3);
}

TEST_CASE("algorithm_4_1 on trees returns the basic paths") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Graph t = random_tree(9, seed);
    auto r = algorithm_4_1(t);
    REQUIRE(r.ok());
    CHECK(r.retries_used == 0);
    CHECK(r.paths.count() == gallai_bound(9));
    CHECK(verify_decomposition(t, r.paths).valid);
    for (const auto& p : r.paths.paths) CHECK(p.length() <= 2);
  }
}

TEST_CASE("algorithm_4_1 on the triangle succeeds without retries") {
  Graph k3 = graph(3, {{1, 2}, {2, 3}, {1, 3}});
  auto r = algorithm_4_1(k3);
  REQUIRE(r.ok());
  CHECK(r.retries_used == 0);
  CHECK(r.paths == decomp({{1, 2, 3}, {1, 3}}));
}

TEST_CASE("algorithm_4_1 success means valid and exactly the bound") {
  int successes = 0;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    int n = 4 + static_cast<int>(seed % 6);
    int max_e = n * (n - 1) / 2;
    int e = n - 1 + static_cast<int>((seed * 3) % (max_e - n + 2));
    Graph g = random_connected_graph(n, e, seed);
    auto r = algorithm_4_1(g, 16, seed);
    if (r.ok()) {
      ++successes;
      auto report = verify_decomposition(g, r.paths);
      CHECK(report.valid);
      CHECK(report.path_count == gallai_bound(n));
    } else {
      CHECK((r.failure->stage == "extend_to_trees" ||
             r.failure->stage == "select_paths"));
      CHECK_FALSE(r.failure->detail.empty());
    }
  }
  CHECK(successes > 0);
}

TEST_CASE("each chord closes exactly one fundamental cycle") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = random_connected_graph(8, 13, seed);
    Graph t = spanning_tree(g);
    for (const auto& e : g.edges()) {
      if (t.has_edge(e.u, e.v)) continue;
      EdgeList with_chord = t.edges();
      with_chord.push_back(e);
      Graph h(g.n(), with_chord);
      // cycle space dimension e - n + components
      int dim = h.e() - h.n() + static_cast<int>(h.components().size());
      CHECK(dim == 1);
    }
  }
}
