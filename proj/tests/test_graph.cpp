#include <set>

#include "doctest.h"
#include "gallai/generators.hpp"
#include "gallai/graph.hpp"
#include "test_helpers.hpp"

using namespace gallai;
using namespace gallai::testing;

TEST_CASE("parse_graph reads a triangle") {
  Graph g = parse_graph("3 3\n1 2\n2 3\n1 3");
  CHECK(g.n() == 3);
  CHECK(g.e() == 3);
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(3, 2));
}

TEST_CASE("parse_graph reads the five-vertex showcase graph") {
  Graph g = parse_graph("5 9\n1 3\n1 2\n2 4\n1 4\n4 5\n2 5\n2 3\n3 4\n3 5");
  CHECK(g == showcase_graph());
  CHECK(g.e() == 9);
  CHECK_FALSE(g.has_edge(1, 5));
}

TEST_CASE("parse_graph accepts comments and arbitrary edge order") {
  Graph g = parse_graph("# a triangle\n3 3\n2 3\n# middle comment\n1 3\n1 2\n");
  CHECK(g == graph(3, {{1, 2}, {1, 3}, {2, 3}}));
}

TEST_CASE("parse_graph rejects malformed input with line numbers") {
  CHECK_THROWS_WITH_AS(parse_graph("2 2\n1 2\n1 2"),
                       doctest::Contains("duplicate edge"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("x y\n"), doctest::Contains("header"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("3 1\n1 4"), doctest::Contains("out of range"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("3 1\n2 2"), doctest::Contains("self-loop"),
                       ParseError);
  CHECK_THROWS_AS(parse_graph("3 2\n1 2"), ParseError);   // too few lines
  CHECK_THROWS_AS(parse_graph("3 1\n1 2\n2 3"), ParseError);  // extra line

  try {
    parse_graph("3 3\n1 2\n2 3\n2 3");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("serialize round-trips and is canonical") {
  Graph g = parse_graph("# comment\n4 3\n3 4\n1 2\n2 3");
  std::string s = serialize_graph(g);
  CHECK(s == "4 3\n1 2\n2 3\n3 4\n");
  CHECK(parse_graph(s) == g);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph r = random_connected_graph(7, 12, seed);
    CHECK(parse_graph(serialize_graph(r)) == r);
  }
}

TEST_CASE("gallai_bound") {
  CHECK(gallai_bound(1) == 1);
  CHECK(gallai_bound(6) == 3);
  for (int n = 1; n <= 12; ++n) CHECK(gallai_bound(2 * n) == n);
  CHECK_THROWS_AS(gallai_bound(0), std::invalid_argument);
}

TEST_CASE("degree_lower_bound") {
  CHECK(degree_lower_bound(graph(4, {{1, 2}, {1, 3}, {1, 4}})) == 2);  // degree 3
  CHECK(degree_lower_bound(graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}})) == 2);
  CHECK(degree_lower_bound(graph(4, {{1, 2}, {2, 3}, {3, 4}})) == 1);

  // never exceeds the global bound on connected graphs
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = random_connected_graph(8, 14, seed);
    CHECK(degree_lower_bound(g) <= gallai_bound(g.n()));
  }
}

TEST_CASE("verify_decomposition accepts the showcase cover") {
  auto r = verify_decomposition(showcase_graph(),
                                decomp({{3, 1, 2, 4}, {1, 4, 5, 2, 3}, {4, 3, 5}}));
  CHECK(r.valid);
  CHECK(r.path_count == 3);
  CHECK(r.bound == 3);
  CHECK(r.within_bound);
  CHECK(r.offending_items.empty());
}

TEST_CASE("verify_decomposition on K3") {
  Graph k3 = graph(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(verify_decomposition(k3, decomp({{1, 2, 3}, {3, 1}})).valid);

  auto bad = verify_decomposition(k3, decomp({{1, 2, 3}, {1, 2}}));
  CHECK_FALSE(bad.valid);
  CHECK_FALSE(bad.edge_disjoint);       // 1-2 reused
  CHECK_FALSE(bad.covers_all_edges);    // 1-3 uncovered
  CHECK(bad.paths_simple);
  CHECK(bad.offending_items.size() == 2);
}

TEST_CASE("verify_decomposition diagnostics") {
  Graph k3 = graph(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK_FALSE(verify_decomposition(k3, decomp({{1, 2, 1}})).paths_simple);
  CHECK_FALSE(verify_decomposition(k3, decomp({{1}})).paths_simple);
  CHECK_FALSE(verify_decomposition(k3, decomp({{1, 2, 3, 4}})).paths_simple);
  // empty cover of an edgeless graph is valid
  CHECK(verify_decomposition(Graph(1, {}), Decomposition{}).valid);
}

TEST_CASE("paths compare up to reversal, decompositions up to reorder") {
  CHECK(path({1, 2, 3}) == path({3, 2, 1}));
  CHECK_FALSE(path({1, 2, 3}) == path({1, 3, 2}));
  CHECK(decomp({{1, 2}, {3, 4}}) == decomp({{4, 3}, {2, 1}}));
}

TEST_CASE("join_at_shared_end") {
  CHECK(*join_at_shared_end(path({1, 2}), path({2, 3})) == path({1, 2, 3}));
  CHECK(*join_at_shared_end(path({1, 2}), path({3, 2})) == path({1, 2, 3}));
  CHECK_FALSE(join_at_shared_end(path({1, 2}), path({3, 4})).has_value());
  // shared end but interiors collide
  CHECK_FALSE(join_at_shared_end(path({1, 2, 3}), path({3, 1})).has_value());
}

TEST_CASE("endpoint_merge on the four-cycle") {
  Graph c4 = graph(4, {{1, 2}, {2, 4}, {3, 4}, {1, 3}});
  auto merged = endpoint_merge(c4, decomp({{1, 2}, {3, 4}, {3, 1}, {4, 2}}));
  CHECK(merged.count() == 2);
  CHECK(verify_decomposition(c4, merged).valid);
  // lowest-index rule: 1-2 joins 3-1 first, then 3-4
  CHECK(merged == decomp({{2, 1, 3, 4}, {4, 2}}));
}

TEST_CASE("endpoint_merge leaves a single path unchanged") {
  Graph p3 = graph(3, {{1, 2}, {2, 3}});
  auto merged = endpoint_merge(p3, decomp({{1, 2, 3}}));
  CHECK(merged.count() == 1);
  CHECK(merged.paths[0] == path({1, 2, 3}));
}

TEST_CASE("endpoint_merge rebuilds a 3-path cover of K5 from split pieces") {
  Graph k5 = complete_graph(5);
  auto merged =
      endpoint_merge(k5, decomp({{1, 2, 3, 4, 5}, {3, 1}, {5, 2}, {5, 3}, {1, 4, 2}}));
  CHECK(merged.count() == 3);
  CHECK(verify_decomposition(k5, merged).valid);
}

TEST_CASE("endpoint_merge never increases count and preserves validity") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Graph g = random_connected_graph(7, 11, seed);
    // trivial cover: one path per edge
    Decomposition d;
    for (const auto& e : g.edges()) d.paths.push_back(path({e.u, e.v}));
    auto merged = endpoint_merge(g, d);
    CHECK(merged.count() <= d.count());
    CHECK(verify_decomposition(g, merged).valid);
    // fixpoint: no two output paths can still be joined
    for (size_t i = 0; i < merged.paths.size(); ++i)
      for (size_t j = i + 1; j < merged.paths.size(); ++j)
        CHECK_FALSE(join_at_shared_end(merged.paths[i], merged.paths[j]).has_value());
  }
}

TEST_CASE("remove_path_edges") {
  Graph k3 = graph(3, {{1, 2}, {2, 3}, {1, 3}});
  Graph rest = remove_path_edges(k3, path({1, 2, 3}));
  CHECK(rest.e() == 1);
  CHECK(rest.has_edge(1, 3));
  CHECK(rest.n() == 3);
}

TEST_CASE("parse_decomposition") {
  Decomposition d = parse_decomposition("3 1 2 4\n1 4 5 2 3\n4 3 5\n");
  CHECK(d.count() == 3);
  CHECK(d.paths[2] == path({4, 3, 5}));
  CHECK_THROWS_AS(parse_decomposition("1 2\n3 x\n"), ParseError);
  CHECK(serialize_decomposition(d) == "3 1 2 4\n1 4 5 2 3\n4 3 5\n");
}
