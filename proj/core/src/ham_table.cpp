#include "gallai/ham_table.hpp"

#include <algorithm>
#include <set>

#include "gallai/rng.hpp"

namespace gallai {

PathTable build_table(int order) {
  if (order < 2 || order % 2 != 0)
    throw std::invalid_argument("table order must be even and >= 2");
  const int n = order / 2;
  // zigzag base walk on residues: 0, 1, 2n-1, 2, 2n-2, ...
  std::vector<int> walk(order);
  walk[0] = 0;
  for (int j = 1; j < order; ++j)
    walk[j] = (j % 2) ? (j + 1) / 2 : order - j / 2;
  PathTable t;
  t.order = order;
  for (int i = 0; i < n; ++i) {
    std::vector<int> row(order);
    for (int j = 0; j < order; ++j) row[j] = (walk[j] + i) % order + 1;
    t.rows.push_back(std::move(row));
  }
  return t;
}

bool verify_table(const PathTable& t) {
  const int order = t.order;
  if (order < 2 || order % 2 != 0) return false;
  if (static_cast<int>(t.rows.size()) != order / 2) return false;
  std::set<Edge> used;
  std::vector<int> end_count(order + 1, 0);
  for (const auto& row : t.rows) {
    if (static_cast<int>(row.size()) != order) return false;
    std::set<int> labels(row.begin(), row.end());
    if (static_cast<int>(labels.size()) != order) return false;
    if (*labels.begin() < 1 || *labels.rbegin() > order) return false;
    for (size_t j = 0; j + 1 < row.size(); ++j)
      if (!used.insert(make_edge(row[j], row[j + 1])).second) return false;
    ++end_count[row.front()];
    ++end_count[row.back()];
  }
  if (static_cast<int>(used.size()) != order * (order - 1) / 2) return false;
  for (int v = 1; v <= order; ++v)
    if (end_count[v] != 1) return false;
  return true;
}

Permutation identity_permutation(int n) {
  Permutation p;
  p.images.resize(n + 1);
  for (int i = 0; i <= n; ++i) p.images[i] = i;
  return p;
}

Permutation random_permutation(int n, std::uint64_t seed) {
  Permutation p = identity_permutation(n);
  SplitMix64 rng(mix_seed(seed, 0x5e7a));
  std::vector<int> tail(p.images.begin() + 1, p.images.end());
  shuffle(tail, rng);
  std::copy(tail.begin(), tail.end(), p.images.begin() + 1);
  return p;
}

PathTable apply_permutation(const PathTable& t, const Permutation& s) {
  if (s.order() != t.order)
    throw std::invalid_argument("permutation order does not match table");
  std::vector<bool> seen(s.order() + 1, false);
  for (int v = 1; v <= s.order(); ++v) {
    int w = s(v);
    if (w < 1 || w > s.order() || seen[w])
      throw std::invalid_argument("not a bijection on 1..order");
    seen[w] = true;
  }
  PathTable out;
  out.order = t.order;
  for (const auto& row : t.rows) {
    std::vector<int> mapped;
    for (int v : row) mapped.push_back(s(v));
    out.rows.push_back(std::move(mapped));
  }
  return out;
}

PseudoPathTable pseudo_table(const PathTable& t, const Graph& g) {
  if (g.n() > t.order)
    throw std::invalid_argument("graph does not fit in the table");
  PseudoPathTable pt;
  pt.base = t;
  pt.real_n = g.n();
  for (const auto& row : t.rows) {
    std::vector<int> breaks;
    for (size_t j = 0; j + 1 < row.size(); ++j) {
      int a = row[j], b = row[j + 1];
      bool adjacent = a <= g.n() && b <= g.n() && g.has_edge(a, b);
      if (!adjacent) breaks.push_back(static_cast<int>(j));
    }
    pt.subpath_counts.push_back(static_cast<int>(breaks.size()) + 1);
    pt.breaks.push_back(std::move(breaks));
  }
  return pt;
}

std::vector<Path> split_subpaths(const PseudoPathTable& pt) {
  std::vector<Path> out;
  for (size_t r = 0; r < pt.base.rows.size(); ++r) {
    const auto& row = pt.base.rows[r];
    std::set<int> cut(pt.breaks[r].begin(), pt.breaks[r].end());
    Path frag;
    auto flush = [&]() {
      int real = 0;
      for (int v : frag.vertices)
        if (v <= pt.real_n) ++real;
      if (real >= 2) out.push_back(frag);
      frag.vertices.clear();
    };
    for (size_t j = 0; j < row.size(); ++j) {
      frag.vertices.push_back(row[j]);
      if (cut.count(static_cast<int>(j))) flush();
    }
    flush();
  }
  return out;
}

namespace {

// Splitting a path at an interior vertex x yields two edge-disjoint pieces
// both containing x. Moving a piece onto another path's matching end can
// unlock endpoint merges that the whole paths block.
bool try_rearrange_step(const Graph& g, Decomposition& d, int target) {
  for (size_t i = 0; i < d.paths.size(); ++i) {
    const Path p = d.paths[i];
    for (size_t cut = 1; cut + 1 < p.vertices.size(); ++cut) {
      Path head{{p.vertices.begin(), p.vertices.begin() + cut + 1}};
      Path tail{{p.vertices.begin() + cut, p.vertices.end()}};
      for (int piece_is_head = 1; piece_is_head >= 0; --piece_is_head) {
        const Path& piece = piece_is_head ? head : tail;
        const Path& rest = piece_is_head ? tail : head;
        for (size_t j = 0; j < d.paths.size(); ++j) {
          if (j == i) continue;
          auto moved = join_at_shared_end(d.paths[j], piece);
          if (!moved) continue;
          Decomposition trial;
          for (size_t k = 0; k < d.paths.size(); ++k) {
            if (k == i)
              trial.paths.push_back(rest);
            else if (k == j)
              trial.paths.push_back(*moved);
            else
              trial.paths.push_back(d.paths[k]);
          }
          trial = endpoint_merge(g, std::move(trial));
          if (trial.count() < d.count()) {
            d = std::move(trial);
            return true;
          }
        }
      }
    }
  }
  return false;
}

Decomposition merge_with_rearrangement(const Graph& g, Decomposition d,
                                       int target) {
  d = endpoint_merge(g, std::move(d));
  while (d.count() > target && try_rearrange_step(g, d, target)) {
  }
  return d;
}

}  // namespace

DecompResult algorithm_5_1(const Graph& g) {
  if (!g.is_connected()) throw std::invalid_argument("graph must be connected");
  DecompResult result;
  result.method = "ham-table";
  if (g.e() == 0) return result;

  int order = g.n() % 2 == 0 ? g.n() : g.n() + 1;
  if (order < 2) order = 2;
  PathTable table = build_table(order);
  PseudoPathTable pt = pseudo_table(table, g);
  Decomposition d;
  d.paths = split_subpaths(pt);
  result.paths = merge_with_rearrangement(g, std::move(d), gallai_bound(g.n()));
  return result;
}

}  // namespace gallai
