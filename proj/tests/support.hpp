#pragma once

// Independent reference checks shared by the unit tests and the acceptance
// runner. Nothing here calls into the decomposition code.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "mutvis/graph.hpp"

namespace mutvis::testing {

inline Graph two_triangles() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

// Erdos-Renyi style graph; no structure assumed.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return Graph(n, e);
}

inline int component_count(const Graph& g, int skip = -1) {
  std::vector<char> seen(g.order(), 0);
  int count = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (s == skip || seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (w != skip && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

// Removal test: v is a cut vertex iff deleting it leaves more components.
inline std::vector<Vertex> cut_vertices_by_removal(const Graph& g) {
  const int base = component_count(g);
  std::vector<Vertex> cuts;
  for (int v = 0; v < g.order(); ++v) {
    // Deleting an isolated vertex lowers the count by one; that is not a cut.
    if (component_count(g, v) > base - (g.degree(v) == 0 ? 1 : 0)) cuts.push_back(v);
  }
  return cuts;
}

// A connected graph is a block graph iff it is chordal and diamond-free.
// Chordality via maximum cardinality search; a diamond is an edge uv whose
// common neighbourhood contains two non-adjacent vertices.
inline bool is_block_graph(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(n, 0), order;
  std::vector<char> done(n, 0);
  for (int i = 0; i < n; ++i) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!done[v] && (best < 0 || weight[v] > weight[best])) best = v;
    }
    done[best] = 1;
    order.push_back(best);
    for (int w : g.neighbors(best)) {
      if (!done[w]) ++weight[w];
    }
  }
  // Reverse of MCS order is a perfect elimination ordering iff chordal.
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int v = 0; v < n; ++v) {
    std::vector<int> earlier;
    for (int w : g.neighbors(v)) {
      if (pos[w] < pos[v]) earlier.push_back(w);
    }
    for (std::size_t i = 0; i < earlier.size(); ++i) {
      for (std::size_t j = i + 1; j < earlier.size(); ++j) {
        if (!g.adjacent(earlier[i], earlier[j])) return false;
      }
    }
  }
  for (auto [u, v] : g.edges()) {
    std::vector<int> common;
    std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(), g.neighbors(v).begin(),
                          g.neighbors(v).end(), std::back_inserter(common));
    for (std::size_t i = 0; i < common.size(); ++i) {
      for (std::size_t j = i + 1; j < common.size(); ++j) {
        if (!g.adjacent(common[i], common[j])) return false;
      }
    }
  }
  return true;
}

// Visibility by enumerating every geodesic (exponential; tiny graphs only).
inline bool pair_visible_by_paths(const Graph& g, const VertexSet& x, Vertex u, Vertex v) {
  std::vector<int> du = bfs_distances(g, u);
  bool found = false;
  // Walk back from v along strictly decreasing distance.
  auto dfs = [&](auto&& self, int w) -> void {
    if (found) return;
    if (w == u) {
      found = true;
      return;
    }
    if (w != v && x.contains(w)) return;
    for (int p : g.neighbors(w)) {
      if (du[p] == du[w] - 1) self(self, p);
    }
  };
  dfs(dfs, v);
  return found;
}

inline std::set<Edge> edge_set(const Graph& g) {
  auto e = g.edges();
  return {e.begin(), e.end()};
}

}  // namespace mutvis::testing
