#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mutvis/graph.hpp"
#include "mutvis/visibility_oracle.hpp"

namespace mutvis {

enum class BagType { Clique, Star };  // K, S

/// Role of a marked vertex at its end of a marked edge.
enum class EndType { Clique, StarCenter, StarLeaf };  // K, S_c, S_p

const char* to_string(BagType type);
const char* to_string(EndType type);

struct Bag {
  int id = 0;
  BagType type = BagType::Clique;
  std::vector<int> members;  // decomposition vertex ids, sorted
  int center = -1;           // Star only

  friend bool operator==(const Bag&, const Bag&) = default;
};

struct MarkedEdge {
  int u;
  int v;

  friend bool operator==(const MarkedEdge&, const MarkedEdge&) = default;
};

/// A split decomposition whose bags are cliques or stars.
///
/// Vertices 0..n-1 are the unmarked vertices and coincide with the vertices
/// of the decomposed graph; ids >= n are marked. Unmarked edges are implied
/// by bag types: a clique bag is complete, a star bag joins its center to
/// every other member.
class MarkedGraph {
 public:
  MarkedGraph() = default;

  /// Assembles a decomposition from raw parts. Only checks that ids are in
  /// range and that every vertex lies in exactly one bag; canonicity is
  /// validate_canonical's job.
  MarkedGraph(int graph_order, int vertex_count, std::vector<Bag> bags,
              std::vector<MarkedEdge> marked_edges);

  int graph_order() const { return graph_order_; }
  int vertex_count() const { return static_cast<int>(bag_of_.size()); }
  bool is_marked(int v) const { return v >= graph_order_; }

  const std::vector<Bag>& bags() const { return bags_; }
  const Bag& bag(int id) const { return bags_[id]; }
  int bag_of(int v) const { return bag_of_[v]; }

  const std::vector<MarkedEdge>& marked_edges() const { return marked_edges_; }
  /// The other end of v's marked edge, or -1.
  int mate(int v) const { return mate_[v]; }
  /// Index into marked_edges() of v's marked edge, or -1.
  int marked_edge_of(int v) const { return edge_of_[v]; }

  EndType end_type(int v) const;
  bool is_center(int v) const;

  /// Intra-bag (unmarked) neighbours of v.
  std::vector<int> bag_neighbors(int v) const;
  bool unmarked_adjacent(int u, int v) const;

  friend bool operator==(const MarkedGraph&, const MarkedGraph&) = default;

 private:
  int graph_order_ = 0;
  std::vector<Bag> bags_;
  std::vector<MarkedEdge> marked_edges_;
  std::vector<int> bag_of_;
  std::vector<int> mate_;
  std::vector<int> edge_of_;
};

/// Canonical split decomposition of a connected distance-hereditary graph,
/// grown by replaying `seq` backwards. Each expansion is a local update:
/// the new vertex joins the anchor's bag or a new 3-vertex bag is split off.
/// Marked ids follow allocation order; bags are numbered by smallest member.
/// Throws InputError if the sequence does not generate g.
MarkedGraph canonical_decomposition(const Graph& g, const PruningSequence& seq);

/// Runs recognize_dh first; throws NotDistanceHereditaryError on rejection.
MarkedGraph canonical_decomposition(const Graph& g);

/// Canonicity violations; empty means the decomposition is canonical.
std::vector<std::string> validate_canonical(const MarkedGraph& d);

/// The accessibility graph: x ~ y iff an alternating path joins them.
Graph recompose(const MarkedGraph& d);

/// The alternating path between unmarked x and y (both endpoints included),
/// starting and ending with unmarked edges; nullopt if none exists.
std::optional<std::vector<int>> alternating_path(const MarkedGraph& d, int x, int y);

struct TreeEdge {
  int bag_a;
  int bag_b;
  int marked_edge;
};

/// Bags contracted to nodes, one tree edge per marked edge.
struct DecompositionTree {
  int node_count = 0;
  std::vector<TreeEdge> edges;
  std::vector<std::vector<int>> adjacency;  // neighbour bag ids, sorted

  const std::vector<int>& neighbour_bags(int bag) const { return adjacency[bag]; }
};

DecompositionTree decomposition_tree(const MarkedGraph& d);

}  // namespace mutvis
