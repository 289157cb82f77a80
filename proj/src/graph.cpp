#include "mutvis/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "mutvis/errors.hpp"

namespace mutvis {

VertexSet::VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw InputError("negative vertex count");
  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    edge_count_ += nbrs.size();
  }
  edge_count_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& a = adjacency_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (!g.contains(source)) {
    throw InputError("source " + std::to_string(source) + " is not a vertex");
  }
  std::vector<int> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(g.order(), -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (label[w] == -1) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  auto label = component_labels(g);
  int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<Vertex>> comps(count);
  for (Vertex v = 0; v < g.order(); ++v) comps[label[v]].push_back(v);
  return comps;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      int j = index[w];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  return Graph(static_cast<int>(vertices.size()), edges);
}

VertexSet cut_vertices(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next_edge(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<Vertex> stack;
  int timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    int root_children = 0;
    disc[root] = low[root] = timer++;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex u = stack.back();
      auto nbrs = g.neighbors(u);
      if (next_edge[u] < nbrs.size()) {
        Vertex w = nbrs[next_edge[u]++];
        if (disc[w] == -1) {
          parent[w] = u;
          disc[w] = low[w] = timer++;
          if (u == root) ++root_children;
          stack.push_back(w);
        } else if (w != parent[u]) {
          low[u] = std::min(low[u], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      Vertex p = parent[u];
      if (p != -1) {
        low[p] = std::min(low[p], low[u]);
        if (p != root && low[u] >= disc[p]) is_cut[p] = 1;
      }
    }
    if (root_children > 1) is_cut[root] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

namespace {

// BFS from `source` in which members of `blocked` other than the source are
// reached but never expanded. A vertex v is visible from the source iff its
// restricted distance equals its true distance.
std::vector<int> restricted_distances(const Graph& g, Vertex source,
                                      const std::vector<char>& blocked) {
  std::vector<int> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    if (u != source && blocked[u]) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

void check_members(const Graph& g, const VertexSet& x) {
  for (Vertex v : x) {
    if (!g.contains(v)) throw InputError("vertex " + std::to_string(v) + " is not in the graph");
  }
}

}  // namespace

bool pair_visible(const Graph& g, const VertexSet& x, Vertex u, Vertex v) {
  if (!g.contains(u) || !g.contains(v)) throw InputError("pair endpoint is not a vertex");
  if (u == v) throw InputError("pair_visible needs two distinct vertices");
  auto dist = bfs_distances(g, u);
  if (dist[v] == kUnreachable) {
    throw DisconnectedGraphError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                 " lie in different components");
  }
  std::vector<char> blocked(g.order(), 0);
  for (Vertex w : x) {
    if (g.contains(w)) blocked[w] = 1;
  }
  blocked[v] = 1;  // the target is an endpoint; it never needs expanding
  return restricted_distances(g, u, blocked)[v] == dist[v];
}

std::optional<Edge> first_invisible_pair(const Graph& g, const VertexSet& x) {
  check_members(g, x);
  std::vector<char> blocked(g.order(), 0);
  for (Vertex w : x) blocked[w] = 1;
  auto members = x.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    Vertex u = members[i];
    auto dist = bfs_distances(g, u);
    auto restricted = restricted_distances(g, u, blocked);
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      Vertex v = members[j];
      if (dist[v] == kUnreachable) {
        throw DisconnectedGraphError("set spans more than one component");
      }
      if (restricted[v] != dist[v]) return Edge{u, v};
    }
  }
  return std::nullopt;
}

bool is_mutual_visibility_set(const Graph& g, const VertexSet& x) {
  if (!is_connected(g)) throw DisconnectedGraphError("graph is not connected");
  return !first_invisible_pair(g, x).has_value();
}

}  // namespace mutvis
