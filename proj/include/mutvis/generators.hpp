#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mutvis/graph.hpp"
#include "mutvis/visibility_oracle.hpp"

namespace mutvis {

/// Rebuilds a graph from its pruning sequence, replaying the steps backwards
/// from the root. Throws InputError on a step that names a missing anchor or
/// re-adds a vertex.
Graph expand(const PruningSequence& seq);

struct ExpansionWeights {
  double pendant = 0.30;
  double true_twin = 0.35;
  double false_twin = 0.35;
};

/// Mostly pendant steps, so m stays close to proportional to n. The
/// benchmark default; the plain defaults give m growing like n^1.4.
inline constexpr ExpansionWeights kSparseWeights{0.6, 0.2, 0.2};

struct ExpansionSpec {
  std::uint64_t seed = 1;
  int n = 1;
  ExpansionWeights weights;
};

/// Random DH graph: vertex i (i >= 1) is attached to a uniformly chosen
/// anchor among 0..i-1 by a step drawn from `weights`.
///
/// Uses std::mt19937_64 seeded with `seed`. Anchors take `engine() % i` and
/// step kinds compare the top 53 bits of one draw, scaled to [0, 1), against
/// the cumulative weights; both mappings are fixed so output is identical
/// across platforms.
Graph random_dh(const ExpansionSpec& spec);

/// The pruning sequence random_dh replays (vertex i anchored below i).
PruningSequence random_expansion(const ExpansionSpec& spec);

enum class Family { Path, Star, Clique, CompleteBipartite, Cycle, BlockChain, Octahedron, TailGadget };

/// Parses "path", "star", "clique", "complete-bipartite", "cycle",
/// "block-chain", "octahedron", "tail-gadget". Throws InputError otherwise.
Family parse_family(const std::string& name);
const char* to_string(Family family);

/// Named graphs. Parameters: path n; star n (K_{1,n}); clique n;
/// complete-bipartite m n; cycle n (n = 4 only); block-chain b k;
/// octahedron and tail-gadget take none.
Graph family(Family f, const std::vector<int>& params = {});

inline constexpr int kDefaultEnumerationCap = 8;

/// Every labelled graph on 1..n_max vertices in which vertex i can be pruned
/// from the subgraph induced by 0..i (pendant or twin of an earlier vertex).
/// Distinct labelled edge sets are visited once; isomorphic copies recur.
/// Covers every distance-hereditary graph up to isomorphism.
void enumerate_small_dh(int n_max, const std::function<void(const Graph&)>& visit,
                        int cap = kDefaultEnumerationCap);

}  // namespace mutvis
