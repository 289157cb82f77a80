#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "checks.hpp"
#include "mutvis/errors.hpp"
#include "mutvis/generators.hpp"
#include "mutvis/mu_algorithm.hpp"
#include "mutvis/visibility_oracle.hpp"

using namespace mutvis;
namespace mt = mutvis::testing;

namespace {

DirectedDecomposition oriented(const Graph& g) { return orient(canonical_decomposition(g)); }

std::vector<Vertex> removed_vertices(const MuResult& r) {
  std::vector<Vertex> out;
  for (const Removal& e : r.removed_extra) out.push_back(e.vertex);
  return out;
}

}  // namespace

TEST(MuSet, P4) {
  MuResult r = mu_set(family(Family::Path, {4}));
  EXPECT_EQ(r.mu, 2);
  EXPECT_EQ(r.set, (VertexSet{0, 3}));
  EXPECT_EQ(r.removed_sigma, (VertexSet{1, 2}));
  EXPECT_TRUE(r.removed_extra.empty());
  EXPECT_EQ(r.shape, TArrowShape::NoTArrow);
}

TEST(MuSet, K23RemovesOneSpecialVertex) {
  MuResult r = mu_set(family(Family::CompleteBipartite, {2, 3}));
  EXPECT_EQ(r.mu, 4);
  EXPECT_EQ(r.shape, TArrowShape::OppositePair);
  ASSERT_EQ(r.removed_extra.size(), 1u);
  EXPECT_EQ(r.removed_extra[0], (Removal{0, RemovalReason::SpecialVertex}));
  EXPECT_EQ(r.set, (VertexSet{1, 2, 3, 4}));
}

TEST(MuSet, Octahedron) {
  MuResult r = mu_set(family(Family::Octahedron));
  EXPECT_EQ(r.mu, 5);
  EXPECT_EQ(r.shape, TArrowShape::HeadConnected);
  ASSERT_EQ(r.removed_extra.size(), 1u);
  EXPECT_EQ(r.removed_extra[0].reason, RemovalReason::SpecialVertex);
  EXPECT_EQ(mu_bruteforce(family(Family::Octahedron)).mu, 5);
}

TEST(MuSet, TailGadget) {
  Graph g = family(Family::TailGadget);
  MuResult r = mu_set(g);
  EXPECT_EQ(r.mu, 5);
  EXPECT_EQ(r.shape, TArrowShape::SingleOrTailConnected);
  auto gone = removed_vertices(r);
  ASSERT_EQ(gone.size(), 2u);
  // r1 = 1, s1 = 2, r2 = 3, s2 = 4
  EXPECT_TRUE(gone[0] == 1 || gone[0] == 2 || gone[1] == 1 || gone[1] == 2);
  EXPECT_TRUE(gone[0] == 3 || gone[0] == 4 || gone[1] == 3 || gone[1] == 4);
  for (const Removal& e : r.removed_extra) EXPECT_EQ(e.reason, RemovalReason::PerTArrowHeadWitness);
  EXPECT_EQ(mu_bruteforce(g).mu, 5);
}

TEST(MuSet, K33RemovesGenericPair) {
  MuResult r = mu_set(family(Family::CompleteBipartite, {3, 3}));
  EXPECT_EQ(r.mu, 4);
  ASSERT_EQ(r.removed_extra.size(), 2u);
  for (const Removal& e : r.removed_extra) EXPECT_EQ(e.reason, RemovalReason::GenericPair);
  // One vertex from each side of the bipartition.
  EXPECT_LT(r.removed_extra[0].vertex, 3);
  EXPECT_GE(r.removed_extra[1].vertex, 3);
}

TEST(MuSet, HeadConnectedWithUnmarkedCliqueVertex) {
  // Octahedron plus a vertex adjacent to everything: the central clique gains
  // an unmarked member.
  std::vector<Edge> e = family(Family::Octahedron).edges();
  for (int v = 0; v < 6; ++v) e.emplace_back(v, 6);
  Graph g(7, e);
  MuResult r = mu_set(g);
  EXPECT_EQ(r.shape, TArrowShape::HeadConnected);
  ASSERT_EQ(r.removed_extra.size(), 1u);
  EXPECT_EQ(r.removed_extra[0], (Removal{6, RemovalReason::KBagUnmarked}));
  EXPECT_EQ(r.mu, mu_bruteforce(g).mu);
}

TEST(MuNumber, Examples) {
  EXPECT_EQ(mu_number(Graph(1, {})), 1);
  EXPECT_EQ(mu_number(Graph(2, {{0, 1}})), 2);
  EXPECT_EQ(mu_number(mt::two_triangles()), 4);
  EXPECT_EQ(mu_number(family(Family::CompleteBipartite, {3, 3})), 4);
  EXPECT_EQ(mu_number(family(Family::CompleteBipartite, {3, 4})), 5);
  EXPECT_EQ(mu_bruteforce(family(Family::CompleteBipartite, {3, 4})).mu, 5);
}

// K_{1,n}: the leaves, which the two-part K_{m,n} formula would overcount.
TEST(MuNumber, StarsAreTheirLeaves) {
  for (int n = 2; n <= 12; ++n) {
    Graph g = family(Family::Star, {n});
    EXPECT_EQ(mu_bruteforce(g).mu, n);
    EXPECT_EQ(mu_number(g), n);
    EXPECT_EQ(mu_set(g).removed_sigma, (VertexSet{0}));
  }
}

TEST(MuSet, Errors) {
  EXPECT_THROW(mu_set(mt::cycle(5)), NotDistanceHereditaryError);
  EXPECT_THROW(mu_set(Graph(4, {{0, 1}, {2, 3}})), DisconnectedGraphError);
  EXPECT_THROW(mu_set(Graph(0, {})), InputError);
  try {
    mu_set(mt::cycle(6));
    FAIL();
  } catch (const NotDistanceHereditaryError& e) {
    EXPECT_EQ(e.remainder_size(), 6u);
  }
}

TEST(MuSet, MatchesOracleOnSmallGraphs) {
  int shapes[4] = {0, 0, 0, 0};
  for (std::uint64_t seed = 1; seed <= 1500; ++seed) {
    Graph g = random_dh({seed, 4 + static_cast<int>(seed % 7), {}});
    MuResult r = mu_set(g);
    ++shapes[static_cast<int>(r.shape)];
    ASSERT_EQ(r.mu, mu_bruteforce(g).mu) << "seed " << seed;
  }
  for (int s : shapes) EXPECT_GT(s, 20);
}

TEST(MuSet, LedgerAndSoundness) {
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    Graph g = random_dh({seed, 3 + static_cast<int>(seed % 60), {}});
    DirectedDecomposition dd = oriented(g);
    TArrowReport report = t_arrows(dd);
    MuResult r = mu_set(dd, report);
    ASSERT_EQ(r, mu_set(g));
    ASSERT_EQ(mt::check_result_ledger(g, dd, report, r), "") << "seed " << seed;
    ASSERT_TRUE(is_mutual_visibility_set(g, r.set)) << "seed " << seed;
  }
}

TEST(MuSet, Deterministic) {
  Graph g = random_dh({5, 500, {}});
  EXPECT_EQ(mu_set(g), mu_set(g));
}

TEST(MuSet, TimedMatchesUntimed) {
  Graph g = random_dh({8, 2000, {}});
  StageTimings t;
  EXPECT_EQ(mu_set_timed(g, t), mu_set(g));
  EXPECT_GE(t.decompose_ms, 0.0);
  EXPECT_DOUBLE_EQ(t.total_ms(), t.decompose_ms + t.orient_ms + t.t_arrows_ms + t.algorithm_ms);
}

TEST(Witness, P5Endpoints) {
  DirectedDecomposition dd = oriented(family(Family::Path, {5}));
  VisibilityWitness w = visibility_witness(dd, 0, 4);
  EXPECT_EQ(w.sigma_on_path, (VertexSet{1, 2, 3}));
  EXPECT_TRUE(w.branching_arrows.empty());
}

TEST(Witness, K23SmallPart) {
  DirectedDecomposition dd = oriented(family(Family::CompleteBipartite, {2, 3}));
  VisibilityWitness w = visibility_witness(dd, 0, 1);
  EXPECT_TRUE(w.sigma_on_path.empty());
  ASSERT_EQ(w.branching_arrows.size(), 1u);
  const Arrow& a = dd.arrows()[w.branching_arrows[0]];
  EXPECT_EQ(dd.base().bag_of(a.tail), dd.base().bag_of(0));
  EXPECT_EQ(dd.base().bag_of(a.head), dd.base().bag_of(2));
}

TEST(Witness, AdjacentPairsAreEmpty) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Graph g = random_dh({seed, 20, {}});
    DirectedDecomposition dd = oriented(g);
    for (auto [u, v] : g.edges()) {
      VisibilityWitness w = visibility_witness(dd, u, v);
      ASSERT_TRUE(w.sigma_on_path.empty());
      ASSERT_TRUE(w.branching_arrows.empty());
    }
  }
}

TEST(DecompVisibility, Examples) {
  DirectedDecomposition p3 = oriented(family(Family::Path, {3}));
  EXPECT_FALSE(pair_visible_decomp(p3, VertexSet{0, 1, 2}, 0, 2));
  DirectedDecomposition k23 = oriented(family(Family::CompleteBipartite, {2, 3}));
  EXPECT_TRUE(pair_visible_decomp(k23, VertexSet{1, 2, 3, 4}, 2, 3));
  EXPECT_FALSE(pair_visible_decomp(k23, VertexSet{0, 1, 2, 3, 4}, 2, 3));
}

TEST(DecompVisibility, MatchesGraphPredicate) {
  std::mt19937_64 rng(21);
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Graph g = random_dh({seed, 3 + static_cast<int>(seed % 28), {}});
    ASSERT_EQ(mt::check_dual_predicate(g, oriented(g), rng, 20), "") << "seed " << seed;
  }
}
