#pragma once

#include <optional>
#include <vector>

#include "mutvis/graph.hpp"

namespace mutvis {

enum class PruningKind { Pendant, TrueTwin, FalseTwin };

const char* to_string(PruningKind kind);

struct PruningStep {
  PruningKind kind;
  Vertex removed;
  Vertex anchor;  // the unique neighbour (pendant) or the twin partner

  friend bool operator==(const PruningStep&, const PruningStep&) = default;
};

/// Removal order reducing a graph on `order` vertices to the single vertex
/// `root`. Replayed backwards from `root` it rebuilds the graph.
struct PruningSequence {
  int order = 1;
  Vertex root = 0;
  std::vector<PruningStep> steps;

  friend bool operator==(const PruningSequence&, const PruningSequence&) = default;
};

struct DhRecognition {
  std::optional<PruningSequence> sequence;  // set iff distance-hereditary
  std::vector<Vertex> remainder;            // irreducible vertices on rejection
  Graph remainder_graph;                    // induced on `remainder`, relabelled

  bool accepted() const { return sequence.has_value(); }
};

/// Prunes pendant vertices and twins. At every step the smallest vertex
/// admitting a pendant step goes first, then true twins, then false twins;
/// a twin is anchored at the most recently indexed member of its class.
/// Throws DisconnectedGraphError on disconnected input.
DhRecognition recognize_dh(const Graph& g);

inline constexpr int kDefaultMetricCap = 10;
inline constexpr int kDefaultMuCap = 16;
// Bitmask engines; caps above this are refused outright.
inline constexpr int kMaxOracleOrder = 63;

/// Exhaustive definition check: every connected induced subgraph is
/// isometric. Throws CapExceededError when g.order() > n_cap.
bool is_dh_metric(const Graph& g, int n_cap = kDefaultMetricCap);

struct BruteForceResult {
  int mu = 0;
  VertexSet witness;
};

/// Exact mu(g) by enumerating subsets in decreasing size, lexicographic within
/// a size. The witness is the lexicographically least maximum set.
/// `jobs` > 1 splits each size class across threads without changing the
/// result.
BruteForceResult mu_bruteforce(const Graph& g, int n_cap = kDefaultMuCap, int jobs = 1);

struct AvoidingResult {
  int size = 0;
  std::optional<VertexSet> witness;
};

/// Largest mutual-visibility set disjoint from `forbidden`.
AvoidingResult mu_set_avoiding(const Graph& g, const VertexSet& forbidden,
                               int n_cap = kDefaultMuCap);

}  // namespace mutvis
