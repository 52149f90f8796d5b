#include "gallai/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace gallai {

Edge make_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop " + std::to_string(u));
  if (u > v) std::swap(u, v);
  return Edge{u, v};
}

Graph::Graph(int n, EdgeList edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  for (auto& e : edges_) {
    if (e.u == e.v)
      throw std::invalid_argument("self-loop at " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > n_)
      throw std::invalid_argument("edge " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v) + " out of range 1.." +
                                  std::to_string(n_));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
  adj_.assign(n_ + 1, {});
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 1 || v > n_) throw std::out_of_range("vertex " + std::to_string(v));
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_ || u == v) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

int Graph::max_degree() const {
  int d = 0;
  for (int v = 1; v <= n_; ++v) d = std::max(d, static_cast<int>(adj_[v].size()));
  return d;
}

int Graph::non_isolated_count() const {
  int c = 0;
  for (int v = 1; v <= n_; ++v)
    if (!adj_[v].empty()) ++c;
  return c;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(n_ + 1, false);
  for (int s = 1; s <= n_; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : adj_[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool Graph::is_connected() const {
  if (n_ == 0) return false;
  return components().size() == 1;
}

bool Graph::is_connected_ignoring_isolated() const {
  int nontrivial = 0;
  for (const auto& c : components())
    if (c.size() > 1) ++nontrivial;
  return nontrivial <= 1;
}

bool Graph::is_tree() const { return is_connected() && e() == n_ - 1; }

bool Graph::is_tree_ignoring_isolated() const {
  int k = non_isolated_count();
  if (k == 0) return false;
  return e() == k - 1 && is_connected_ignoring_isolated();
}

bool Path::contains(int v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool Path::is_simple() const {
  if (vertices.size() < 2) return false;
  std::set<int> seen(vertices.begin(), vertices.end());
  return seen.size() == vertices.size();
}

EdgeList Path::edges() const {
  EdgeList out;
  for (size_t i = 0; i + 1 < vertices.size(); ++i)
    out.push_back(make_edge(vertices[i], vertices[i + 1]));
  return out;
}

Path Path::reversed() const {
  Path p = *this;
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

Path Path::canonical() const {
  Path r = reversed();
  return r.vertices < vertices ? r : *this;
}

Decomposition Decomposition::canonical() const {
  Decomposition d;
  for (const auto& p : paths) d.paths.push_back(p.canonical());
  std::sort(d.paths.begin(), d.paths.end(),
            [](const Path& a, const Path& b) { return a.vertices < b.vertices; });
  return d;
}

namespace {

bool read_int(std::string_view tok, int& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
      ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos
                                                ? std::string_view::npos
                                                : nl - pos);
    ++number;
    auto toks = split_ws(raw);
    if (!toks.empty() && !toks[0].starts_with('#'))
      lines.push_back({number, raw});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return lines;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing 'n m' header");
  auto header = split_ws(lines[0].text);
  int n = 0, m = 0;
  if (header.size() != 2 || !read_int(header[0], n) || !read_int(header[1], m) ||
      n < 0 || m < 0)
    throw ParseError(lines[0].number, "malformed header, expected 'n m'");
  if (static_cast<int>(lines.size()) - 1 < m)
    throw ParseError(lines.empty() ? 1 : lines.back().number,
                     "expected " + std::to_string(m) + " edge lines, got " +
                         std::to_string(lines.size() - 1));
  if (static_cast<int>(lines.size()) - 1 > m)
    throw ParseError(lines[m + 1].number, "unexpected extra line");

  EdgeList edges;
  std::set<Edge> seen;
  for (int i = 1; i <= m; ++i) {
    auto toks = split_ws(lines[i].text);
    int u = 0, v = 0;
    if (toks.size() != 2 || !read_int(toks[0], u) || !read_int(toks[1], v))
      throw ParseError(lines[i].number, "malformed edge, expected 'u v'");
    if (u == v) throw ParseError(lines[i].number, "self-loop " + std::to_string(u));
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(lines[i].number, "label out of range 1.." + std::to_string(n));
    Edge e = make_edge(u, v);
    if (!seen.insert(e).second)
      throw ParseError(lines[i].number, "duplicate edge " + std::to_string(e.u) +
                                            " " + std::to_string(e.v));
    edges.push_back(e);
  }
  return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.e() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Decomposition parse_decomposition(std::string_view text) {
  Decomposition d;
  for (const auto& line : content_lines(text)) {
    auto toks = split_ws(line.text);
    Path p;
    for (auto tok : toks) {
      int v = 0;
      if (!read_int(tok, v))
        throw ParseError(line.number, "expected integer label, got '" +
                                          std::string(tok) + "'");
      p.vertices.push_back(v);
    }
    d.paths.push_back(std::move(p));
  }
  return d;
}

std::string serialize_decomposition(const Decomposition& d) {
  std::ostringstream os;
  for (const auto& p : d.paths) {
    for (size_t i = 0; i < p.vertices.size(); ++i)
      os << (i ? " " : "") << p.vertices[i];
    os << '\n';
  }
  return os.str();
}

int gallai_bound(int n) {
  if (n < 1) throw std::invalid_argument("gallai_bound needs n >= 1");
  return (n + 1) / 2;
}

int degree_lower_bound(const Graph& g) {
  if (g.n() < 1) throw std::invalid_argument("empty graph");
  return (g.max_degree() + 1) / 2;
}

VerifyReport verify_decomposition(const Graph& g, const Decomposition& d) {
  VerifyReport r;
  r.paths_simple = true;
  r.edge_disjoint = true;
  r.covers_all_edges = true;
  r.path_count = d.count();
  r.bound = g.n() >= 1 ? gallai_bound(g.n()) : 0;

  auto note = [&r](const std::string& s) { r.offending_items.push_back(s); };

  std::set<Edge> used;
  for (int i = 0; i < d.count(); ++i) {
    const Path& p = d.paths[i];
    if (p.vertices.size() < 2) {
      r.paths_simple = false;
      note("path " + std::to_string(i) + " has fewer than 2 vertices");
      continue;
    }
    bool in_range = true;
    for (int v : p.vertices)
      if (v < 1 || v > g.n()) {
        in_range = false;
        r.paths_simple = false;
        note("path " + std::to_string(i) + " label " + std::to_string(v) +
             " out of range");
      }
    if (!p.is_simple()) {
      r.paths_simple = false;
      note("path " + std::to_string(i) + " repeats a vertex");
    }
    if (!in_range) continue;
    for (size_t k = 0; k + 1 < p.vertices.size(); ++k) {
      Edge e = make_edge(p.vertices[k], p.vertices[k + 1]);
      if (!g.has_edge(e.u, e.v)) {
        r.covers_all_edges = false;
        note("path " + std::to_string(i) + " uses non-edge " +
             std::to_string(e.u) + "-" + std::to_string(e.v));
        continue;
      }
      if (!used.insert(e).second) {
        r.edge_disjoint = false;
        note("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
             " covered more than once");
      }
    }
  }
  for (const auto& e : g.edges())
    if (!used.count(e)) {
      r.covers_all_edges = false;
      note("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
           " not covered");
    }

  r.valid = r.covers_all_edges && r.edge_disjoint && r.paths_simple;
  r.within_bound = r.path_count <= r.bound;
  return r;
}

std::optional<Path> join_at_shared_end(const Path& a, const Path& b) {
  struct Combo {
    bool rev_a, rev_b;
  };
  // (a.back,b.front), (a.back,b.back), (a.front,b.front), (a.front,b.back)
  static constexpr Combo combos[] = {
      {false, false}, {false, true}, {true, false}, {true, true}};
  for (auto [rev_a, rev_b] : combos) {
    int ea = rev_a ? a.front() : a.back();
    int eb = rev_b ? b.back() : b.front();
    if (ea != eb) continue;
    Path left = rev_a ? a.reversed() : a;
    Path right = rev_b ? b.reversed() : b;
    Path joined = left;
    joined.vertices.insert(joined.vertices.end(), right.vertices.begin() + 1,
                           right.vertices.end());
    if (joined.is_simple()) return joined;
  }
  return std::nullopt;
}

Decomposition endpoint_merge(const Graph&, Decomposition d) {
  bool merged = true;
  while (merged) {
    merged = false;
    for (size_t i = 0; i < d.paths.size() && !merged; ++i) {
      for (size_t j = i + 1; j < d.paths.size() && !merged; ++j) {
        if (auto joined = join_at_shared_end(d.paths[i], d.paths[j])) {
          d.paths[i] = *joined;
          d.paths.erase(d.paths.begin() + static_cast<long>(j));
          merged = true;
        }
      }
    }
  }
  return d;
}

Graph remove_path_edges(const Graph& g, const Path& p) {
  std::set<Edge> drop;
  for (const auto& e : p.edges()) drop.insert(e);
  EdgeList rest;
  for (const auto& e : g.edges())
    if (!drop.count(e)) rest.push_back(e);
  return Graph(g.n(), std::move(rest));
}

}  // namespace gallai
