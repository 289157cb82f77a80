#pragma once

#include <vector>

#include "mutvis/directed_decomposition.hpp"
#include "mutvis/graph.hpp"

namespace mutvis {

enum class RemovalReason { PerTArrowHeadWitness, KBagUnmarked, SpecialVertex, GenericPair };

const char* to_string(RemovalReason reason);

struct Removal {
  Vertex vertex;
  RemovalReason reason;

  friend bool operator==(const Removal&, const Removal&) = default;
};

struct MuResult {
  int mu = 0;
  VertexSet set;
  VertexSet removed_sigma;
  std::vector<Removal> removed_extra;
  TArrowShape shape = TArrowShape::NoTArrow;

  friend bool operator==(const MuResult&, const MuResult&) = default;
};

/// Maximum mutual-visibility set of a connected distance-hereditary graph.
/// Throws DisconnectedGraphError or NotDistanceHereditaryError.
MuResult mu_set(const Graph& g);

/// The selection step alone, on an already oriented decomposition.
MuResult mu_set(const DirectedDecomposition& dd, const TArrowReport& report);

int mu_number(const Graph& g);

struct StageTimings {
  double decompose_ms = 0;  // recognition and canonical decomposition
  double orient_ms = 0;
  double t_arrows_ms = 0;
  double algorithm_ms = 0;

  double total_ms() const { return decompose_ms + orient_ms + t_arrows_ms + algorithm_ms; }
};

/// mu_set with wall-clock time per pipeline stage.
MuResult mu_set_timed(const Graph& g, StageTimings& timings);

struct VisibilityWitness {
  VertexSet sigma_on_path;
  std::vector<int> branching_arrows;  // arrow indices, in path order
};

/// Walks the bag path between x and y. Every star center crossed
/// leaf-to-leaf is either a sigma-vertex or the tail of an arrow leaving
/// the path.
VisibilityWitness visibility_witness(const DirectedDecomposition& dd, Vertex x, Vertex y);

/// Decomposition-side visibility test: no sigma-vertex of the path lies in x,
/// and each branching arrow has a head-side reachable vertex outside x.
bool pair_visible_decomp(const DirectedDecomposition& dd, const VertexSet& x, Vertex u, Vertex v);

}  // namespace mutvis
