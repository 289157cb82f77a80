#pragma once

#include <optional>
#include <vector>

#include "mutvis/graph.hpp"
#include "mutvis/split_decomposition.hpp"

namespace mutvis {

/// An oriented marked edge. The tail is always the (marked) center of an
/// S-bag; the head end is of type K or S_c.
struct Arrow {
  int tail;
  int head;
  int marked_edge;
  std::optional<int> opposite;  // index of the reverse arrow (S_c S_c edges)

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

enum class Side { Head, Tail };

/// What an alternating walk sees when it leaves a marked vertex through an
/// unmarked edge and never crosses back over that vertex's marked edge.
struct Reach {
  bool sigma = false;  // meets an unmarked S-bag center
  bool tail = false;   // meets the tail of an arrow as the end of an unmarked edge
  int count = 0;       // reachable unmarked vertices
  int min = -1;        // smallest reachable unmarked vertex, -1 if none
};

class DirectedDecomposition {
 public:
  explicit DirectedDecomposition(MarkedGraph base);

  const MarkedGraph& base() const { return base_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  /// Marked edges left unoriented (types K S_p and S_p S_p).
  const std::vector<int>& plain_marked_edges() const { return plain_; }
  /// Unmarked S-bag centers.
  const VertexSet& sigma() const { return sigma_; }
  bool is_sigma(int v) const { return !base_.is_marked(v) && base_.is_center(v); }

  /// Index of the arrow whose tail is v, or -1.
  int arrow_from(int v) const { return arrow_from_[v]; }

  /// Alternating reachability out of marked vertex v, away from its mate.
  /// Precomputed for every marked vertex in linear total time.
  const Reach& reach(int v) const { return reach_[v]; }

  /// Unmarked vertices on v's side of its marked edge.
  int side_unmarked_count(int v) const;

  /// Bag `bag` lies on v's side of v's marked edge.
  bool bag_on_side(int v, int bag) const;

  /// The decomposition-tree child bag of a marked edge (rooted at bag 0).
  int lower_bag(int marked_edge) const;

  DecompositionTree tree() const { return decomposition_tree(base_); }
  /// Bags in breadth-first order from the root bag 0.
  const std::vector<int>& bfs_order() const { return order_; }
  int parent_bag(int bag) const { return parent_bag_[bag]; }
  /// Marked vertex of `bag` whose mate lies in the parent bag; -1 at the root.
  int parent_link(int bag) const { return parent_link_[bag]; }

 private:
  void compute_reach();

  MarkedGraph base_;
  std::vector<Arrow> arrows_;
  std::vector<int> plain_;
  VertexSet sigma_;
  std::vector<int> arrow_from_;
  std::vector<Reach> reach_;
  // Rooted tree bookkeeping.
  std::vector<int> order_;
  std::vector<int> parent_bag_;
  std::vector<int> parent_link_;  // marked vertex of a bag joined to its parent
  std::vector<int> tin_, tout_;
  std::vector<int> subtree_unmarked_;
};

DirectedDecomposition orient(const MarkedGraph& d);

struct SideView {
  int arrow;
  Side side;
  std::vector<int> component_vertices;  // decomposition vertices, sorted
  VertexSet reachable_unmarked;
};

/// Explicit traversal of one side of an arrow; O(size of the side).
SideView side_view(const DirectedDecomposition& dd, int arrow, Side side);

enum class TArrowShape { NoTArrow, SingleOrTailConnected, HeadConnected, OppositePair };

const char* to_string(TArrowShape shape);

struct TArrowReport {
  std::vector<int> t_arrows;  // arrow indices, ascending
  TArrowShape shape = TArrowShape::NoTArrow;
  int head_bag = -1;  // HeadConnected only
};

/// Collects the t-arrows and classifies how they sit relative to each other.
/// Throws std::logic_error if the t-arrows fit none of the four shapes.
TArrowReport t_arrows(const DirectedDecomposition& dd);

/// Both t-arrow conditions: the head side reaches no sigma-vertex and no
/// arrow tail alternately.
bool is_t_arrow(const DirectedDecomposition& dd, int arrow);

struct SpecialCheck {
  bool is_special = false;
  int special_vertex = -1;
};

/// Is the given side of the arrow a special subgraph: one S-bag centred at
/// the arrow's endpoint with two leaves, either both unmarked, or one
/// unmarked and one marked leaf leading to a K-bag whose other members are
/// all unmarked. The special vertex is the smallest unmarked leaf.
SpecialCheck is_special_side(const DirectedDecomposition& dd, int arrow, Side side);

}  // namespace mutvis
