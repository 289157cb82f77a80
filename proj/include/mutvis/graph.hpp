#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mutvis {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}
  explicit VertexSet(std::vector<Vertex> vs);

  std::span<const Vertex> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Normalizes the edge list: duplicates collapse, adjacency is sorted.
  /// Throws InputError on out-of-range endpoints or self-loops.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < order(); }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

Graph build_graph(int n, std::span<const Edge> edges);

/// Unweighted distances from `source`; kUnreachable for other components.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Component index per vertex, numbered by smallest member.
std::vector<int> component_labels(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Articulation vertices (iterative lowpoint DFS, per component).
VertexSet cut_vertices(const Graph& g);

/// True iff some shortest u,v-path has no internal vertex in `x`.
/// Throws DisconnectedGraphError when u and v lie in different components.
bool pair_visible(const Graph& g, const VertexSet& x, Vertex u, Vertex v);

/// Lexicographically first pair (u < v, both in x) that is not x-visible.
std::optional<Edge> first_invisible_pair(const Graph& g, const VertexSet& x);

/// Every pair of x is x-visible. Throws DisconnectedGraphError if g is not
/// connected.
bool is_mutual_visibility_set(const Graph& g, const VertexSet& x);

}  // namespace mutvis
