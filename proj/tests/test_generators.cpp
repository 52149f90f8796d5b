#include <set>

#include "doctest.h"
#include "gallai/generators.hpp"
#include "test_helpers.hpp"

using namespace gallai;
using namespace gallai::testing;

TEST_CASE("complete_graph") {
  CHECK(complete_graph(4).e() == 6);
  CHECK(complete_graph(1).e() == 0);
  Graph k5 = complete_graph(5);
  for (int u = 1; u <= 5; ++u) CHECK(k5.degree(u) == 4);
}

TEST_CASE("tree_from_pruefer decodes the all-ones sequence to a star") {
  Graph star = tree_from_pruefer({1, 1}, 4);
  CHECK(star == graph(4, {{1, 2}, {1, 3}, {1, 4}}));
  CHECK(tree_from_pruefer({}, 2) == graph(2, {{1, 2}}));
  CHECK(tree_from_pruefer({}, 1).e() == 0);
  CHECK_THROWS_AS(tree_from_pruefer({5}, 3), std::invalid_argument);
  CHECK_THROWS_AS(tree_from_pruefer({1, 1}, 3), std::invalid_argument);
}

TEST_CASE("labeled tree enumeration hits Cayley's counts") {
  CHECK(all_labeled_trees(1).size() == 1);
  CHECK(all_labeled_trees(2).size() == 1);
  CHECK(all_labeled_trees(3).size() == 3);
  CHECK(all_labeled_trees(4).size() == 16);  // 4^2
  CHECK(all_labeled_trees(5).size() == 125);

  std::set<std::string> distinct;
  for (const auto& t : all_labeled_trees(5)) {
    CHECK(t.is_tree());
    distinct.insert(serialize_graph(t));
  }
  CHECK(distinct.size() == 125);
  CHECK_THROWS_AS(all_labeled_trees(9), std::invalid_argument);
}

TEST_CASE("connected graph enumeration matches known counts") {
  CHECK(all_connected_graphs(1).size() == 1);
  CHECK(all_connected_graphs(2).size() == 1);
  CHECK(all_connected_graphs(3).size() == 4);
  CHECK(all_connected_graphs(4).size() == 38);
  for (const auto& g : all_connected_graphs(4)) CHECK(g.is_connected());
  CHECK_THROWS_AS(all_connected_graphs(7), std::invalid_argument);
}

TEST_CASE("random_tree is a deterministic uniform-Pruefer tree") {
  Graph a = random_tree(30, 7);
  Graph b = random_tree(30, 7);
  CHECK(a == b);
  CHECK(a.is_tree());
  CHECK_FALSE(a == random_tree(30, 8));
  CHECK_THROWS_AS(random_tree(0, 1), std::invalid_argument);
}

TEST_CASE("random_connected_graph respects e and stays connected") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = random_connected_graph(9, 17, seed);
    CHECK(g.n() == 9);
    CHECK(g.e() == 17);
    CHECK(g.is_connected());
    CHECK(g == random_connected_graph(9, 17, seed));
  }
  CHECK_THROWS_AS(random_connected_graph(4, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(random_connected_graph(4, 7, 0), std::invalid_argument);
  CHECK(random_connected_graph(4, 6, 3) == complete_graph(4));
}
