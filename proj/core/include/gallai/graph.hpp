#pragma once

// Core types for edge-disjoint path covers of simple undirected graphs:
// Graph, Path, Decomposition, validity checking, the ceil(n/2) path bound,
// and the endpoint-merge pass shared by the decomposition heuristics.

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gallai {

struct Edge {
  int u = 0;
  int v = 0;  // normalized: u < v
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

// Normalizes endpoint order; rejects self-loops.
Edge make_edge(int u, int v);

// Simple undirected graph on labels 1..n. Isolated vertices are allowed;
// self-loops and duplicate edges are not.
class Graph {
 public:
  Graph() = default;
  Graph(int n, EdgeList edges);  // throws std::invalid_argument on bad input

  int n() const { return n_; }
  int e() const { return static_cast<int>(edges_.size()); }
  const EdgeList& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;  // ascending
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  int max_degree() const;

  int non_isolated_count() const;
  // Vertex sets of connected components, smallest member first. Isolated
  // vertices form singleton components.
  std::vector<std::vector<int>> components() const;
  bool is_connected() const;  // all n vertices in one component
  bool is_connected_ignoring_isolated() const;
  bool is_tree() const;  // connected with e == n-1
  // Acyclic and connected on its non-isolated support (used on peeled
  // subgraphs, where untouched labels linger as isolated vertices).
  bool is_tree_ignoring_isolated() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  EdgeList edges_;                       // sorted, unique
  std::vector<std::vector<int>> adj_;    // 1-indexed, ascending
};

// Ordered simple vertex walk; a path and its reverse denote the same object.
struct Path {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }
  bool contains(int v) const;
  bool is_simple() const;  // >= 2 vertices, all distinct
  EdgeList edges() const;
  Path reversed() const;
  // Lexicographically smaller of the two orientations.
  Path canonical() const;

  friend bool operator==(const Path& a, const Path& b) {
    return a.canonical().vertices == b.canonical().vertices;
  }
};

struct Decomposition {
  std::vector<Path> paths;

  int count() const { return static_cast<int>(paths.size()); }
  // Reversal- and order-insensitive normal form.
  Decomposition canonical() const;

  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.canonical().paths == b.canonical().paths;
  }
};

struct VerifyReport {
  bool valid = false;  // covers_all_edges && edge_disjoint && paths_simple
  bool covers_all_edges = false;
  bool edge_disjoint = false;
  bool paths_simple = false;
  int path_count = 0;
  int bound = 0;  // gallai_bound(n)
  bool within_bound = false;
  std::vector<std::string> offending_items;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Edge-list document: optional '#' comment lines, a "n m" header, then m
// lines "u v". Stored canonically (sorted edges).
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

// One path per line, space-separated labels. Syntactic errors throw
// ParseError; semantic problems are left for verify_decomposition.
Decomposition parse_decomposition(std::string_view text);
std::string serialize_decomposition(const Decomposition& d);

// floor((n+1)/2) == ceil(n/2), the conjectured cover size for n vertices.
int gallai_bound(int n);

// floor((d_max+1)/2): paths forced through a maximum-degree vertex.
int degree_lower_bound(const Graph& g);

VerifyReport verify_decomposition(const Graph& g, const Decomposition& d);

// Joins a and b into one simple path when they share an end vertex and their
// interiors are disjoint; tries orientations in a fixed order.
std::optional<Path> join_at_shared_end(const Path& a, const Path& b);

// Repeatedly concatenates cover paths that share an end vertex, lowest index
// pair first, until no pair can be joined into a simple path. Never
// increases the path count and preserves validity.
Decomposition endpoint_merge(const Graph& g, Decomposition d);

// g with the path's edges deleted (vertex set unchanged).
Graph remove_path_edges(const Graph& g, const Path& p);

}  // namespace gallai
