#include "doctest.h"
#include "gallai/generators.hpp"
#include "gallai/oracle.hpp"
#include "test_helpers.hpp"

using namespace gallai;
using namespace gallai::testing;

TEST_CASE("oracle minima on small fixtures") {
  CHECK(min_path_decomposition(graph(4, {{1, 2}, {2, 3}, {3, 4}})).minimum == 1);
  CHECK(min_path_decomposition(graph(3, {{1, 2}, {2, 3}, {1, 3}})).minimum == 2);
  CHECK(min_path_decomposition(graph(4, {{1, 2}, {1, 3}, {1, 4}})).minimum == 2);
  CHECK(min_path_decomposition(complete_graph(4)).minimum == 2);
  CHECK(min_path_decomposition(complete_graph(5)).minimum == 3);
  CHECK(min_path_decomposition(complete_graph(6)).minimum == 3);
  CHECK(min_path_decomposition(showcase_graph()).minimum == 3);
}

TEST_CASE("oracle witness is a valid minimum cover") {
  for (const Graph& g :
       {complete_graph(5), showcase_graph(), unrolling_example_graph()}) {
    auto r = min_path_decomposition(g);
    auto report = verify_decomposition(g, r.witness);
    CHECK(report.valid);
    CHECK(report.path_count == r.minimum);
    CHECK(r.nodes_explored > 0);
  }
}

TEST_CASE("oracle is deterministic") {
  auto a = min_path_decomposition(complete_graph(5));
  auto b = min_path_decomposition(complete_graph(5));
  CHECK(a.minimum == b.minimum);
  CHECK(a.witness == b.witness);
  CHECK(a.nodes_explored == b.nodes_explored);
}

TEST_CASE("oracle edge limit") {
  CHECK_THROWS_AS(min_path_decomposition(complete_graph(6), 10), EdgeLimitError);
  CHECK_NOTHROW(min_path_decomposition(complete_graph(6), 15));
  CHECK_NOTHROW(min_path_decomposition(complete_graph(7), 21));
}

TEST_CASE("oracle minimum dominates the degree and parity lower bounds") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Graph g = random_connected_graph(6, 10, seed);
    auto r = min_path_decomposition(g);
    CHECK(r.minimum >= degree_lower_bound(g));
    int odd = 0;
    for (int v = 1; v <= g.n(); ++v)
      if (g.degree(v) % 2) ++odd;
    CHECK(r.minimum >= std::max(odd / 2, 1));
  }
}

TEST_CASE("check_gallai") {
  auto c = check_gallai(complete_graph(5));
  CHECK(c.minimum == 3);
  CHECK(c.bound == 3);
  CHECK(c.holds);
  for (const auto& g : all_connected_graphs(4)) CHECK(check_gallai(g).holds);
}

TEST_CASE("compare_methods re-verifies every decomposition") {
  for (const Graph& g : {showcase_graph(), complete_graph(6)}) {
    auto records = compare_methods(g);
    CHECK(records.size() == 5);
    for (const auto& rec : records) {
      if (!rec.failure) {
        CHECK(rec.valid);
        CHECK(rec.gap_to_minimum.has_value());
        CHECK(*rec.gap_to_minimum >= 0);
      }
    }
  }
  auto k6 = compare_methods(complete_graph(6));
  for (const auto& rec : k6)
    if (rec.method == "ham-table") {
      CHECK(rec.valid);
      CHECK(rec.path_count == 3);
      CHECK(rec.gap_to_minimum == 0);
    }
}

TEST_CASE("compare_methods on a random tree stays within the bound") {
  Graph t = random_tree(50, 11);
  auto records = compare_methods(t);
  for (const auto& rec : records)
    if (rec.method == "mepp") {
      CHECK(rec.valid);
      CHECK(rec.path_count <= 25);
    }
}
