#pragma once

// Structural property checks over a decomposition. Each returns an empty
// string on success and a description of the first failure otherwise, so the
// unit tests and the acceptance runner can share them.

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mutvis/directed_decomposition.hpp"
#include "mutvis/graph.hpp"
#include "mutvis/mu_algorithm.hpp"
#include "mutvis/split_decomposition.hpp"
#include "support.hpp"

namespace mutvis::testing {

template <typename... Parts>
std::string fail(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

inline bool sorted_contains(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

inline std::string check_round_trip(const Graph& g, const MarkedGraph& d) {
  auto violations = validate_canonical(d);
  if (!violations.empty()) return "not canonical: " + violations.front();
  if (!(recompose(d) == g)) return "recomposition differs from the input";
  return {};
}

inline std::string check_alternating_edges(const Graph& g, const MarkedGraph& d) {
  for (int x = 0; x < g.order(); ++x) {
    for (int y = x + 1; y < g.order(); ++y) {
      if (alternating_path(d, x, y).has_value() != g.adjacent(x, y)) {
        return fail("alternating path mismatch at ", x, ",", y);
      }
    }
  }
  return {};
}

inline std::string check_arrows(const DirectedDecomposition& dd) {
  const MarkedGraph& d = dd.base();
  const auto& arrows = dd.arrows();
  std::vector<int> seen(d.marked_edges().size(), 0);
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const Arrow& a = arrows[i];
    if (!d.is_center(a.tail) || !d.is_marked(a.tail)) return fail("arrow ", i, " tail is no center");
    if (d.end_type(a.head) == EndType::StarLeaf) return fail("arrow ", i, " head is a leaf");
    if (d.mate(a.tail) != a.head) return fail("arrow ", i, " is not a marked edge");
    if (a.opposite) {
      const Arrow& b = arrows[*a.opposite];
      if (b.opposite != static_cast<int>(i) || b.tail != a.head) {
        return fail("arrow ", i, " opposite is inconsistent");
      }
    } else if (d.end_type(a.head) != EndType::Clique) {
      return fail("arrow ", i, " lacks its opposite");
    }
    seen[a.marked_edge] = 1;
  }
  for (int e : dd.plain_marked_edges()) {
    if (seen[e]) return fail("marked edge ", e, " is both plain and oriented");
    seen[e] = 1;
  }
  if (std::count(seen.begin(), seen.end(), 0) != 0) return "some marked edge is unaccounted for";
  return {};
}

inline std::string check_sigma_cut(const Graph& g, const DirectedDecomposition& dd) {
  VertexSet cuts = cut_vertices(g);
  for (Vertex s : dd.sigma()) {
    if (!cuts.contains(s)) return fail("sigma-vertex ", s, " is not a cut vertex");
  }
  return {};
}

inline std::string check_block_graph(const Graph& g, const DirectedDecomposition& dd) {
  if (dd.arrows().empty() != is_block_graph(g)) {
    return fail("arrows: ", dd.arrows().size(), " but block graph: ", is_block_graph(g));
  }
  return {};
}

// Does arrow b sit on the head side of arrow a?
inline bool points_toward(const SideView& head_of_a, const Arrow& b) {
  return sorted_contains(head_of_a.component_vertices, b.tail) &&
         sorted_contains(head_of_a.component_vertices, b.head);
}

inline std::string check_t_arrows(const DirectedDecomposition& dd, const TArrowReport& report) {
  const MarkedGraph& d = dd.base();
  const auto& arrows = dd.arrows();
  const auto& A = report.t_arrows;
  std::vector<SideView> heads;
  for (int i : A) heads.push_back(side_view(dd, i, Side::Head));

  // Recompute A with a direct alternating walk from each head.
  std::vector<int> expected;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    bool ok = true;
    std::vector<int> stack{arrows[i].head};
    while (ok && !stack.empty()) {
      int m = stack.back();
      stack.pop_back();
      for (int w : d.bag_neighbors(m)) {
        if (!d.is_marked(w)) {
          ok = ok && !dd.is_sigma(w);
        } else if (dd.arrow_from(w) >= 0) {
          ok = false;
        } else {
          stack.push_back(d.mate(w));
        }
      }
    }
    if (ok) expected.push_back(static_cast<int>(i));
  }
  if (expected != A) return fail("t-arrow set differs: expected ", expected.size(), " got ", A.size());

  for (std::size_t k = 0; k < A.size(); ++k) {
    const SideView& h = heads[k];
    // Every unmarked head-side vertex is reachable alternately.
    std::vector<int> unmarked;
    for (int v : h.component_vertices) {
      if (!d.is_marked(v)) unmarked.push_back(v);
    }
    if (VertexSet(unmarked) != h.reachable_unmarked) {
      return fail("t-arrow ", A[k], " head side is not fully reachable");
    }
  }

  // Opposite t-arrows come alone.
  for (int i : A) {
    auto opp = arrows[i].opposite;
    if (opp && std::binary_search(A.begin(), A.end(), *opp) && A.size() != 2) {
      return fail("opposite t-arrows ", i, ",", *opp, " share A with others");
    }
  }

  // No t-arrow points toward another that points away from it.
  int toward_pairs = 0, away_pairs = 0, pairs = 0;
  for (std::size_t p = 0; p < A.size(); ++p) {
    for (std::size_t q = p + 1; q < A.size(); ++q) {
      const Arrow& a = arrows[A[p]];
      const Arrow& b = arrows[A[q]];
      if (a.opposite && *a.opposite == A[q]) continue;
      ++pairs;
      bool ab = points_toward(heads[p], b);
      bool ba = points_toward(heads[q], a);
      if (ab != ba) return fail("t-arrows ", A[p], " and ", A[q], " are chained");
      (ab ? toward_pairs : away_pairs)++;
    }
  }

  switch (report.shape) {
    case TArrowShape::NoTArrow:
      if (!A.empty()) return "NoTArrow with t-arrows";
      break;
    case TArrowShape::OppositePair:
      if (A.size() != 2 || arrows[A[0]].opposite != A[1]) return "OppositePair is not a pair";
      break;
    case TArrowShape::SingleOrTailConnected:
      if (A.empty() || toward_pairs != 0) return "tail-connected shape with head-connected pair";
      break;
    case TArrowShape::HeadConnected: {
      if (A.size() < 2 || away_pairs != 0) return "head-connected shape with tail-connected pair";
      if (report.head_bag < 0 || d.bag(report.head_bag).type != BagType::Clique) {
        return "head bag is not a clique";
      }
      for (int i : A) {
        if (d.bag_of(arrows[i].head) != report.head_bag) return "head outside the shared bag";
      }
      break;
    }
  }
  if (pairs > 0 && toward_pairs > 0 && away_pairs > 0) return "mixed connection pattern";
  return {};
}

inline VertexSet random_subset(int n, std::mt19937_64& rng) {
  std::vector<Vertex> m;
  const unsigned density = 1 + static_cast<unsigned>(rng() % 4);  // 1/5 .. 4/5
  for (int v = 0; v < n; ++v) {
    if (rng() % 5 < density) m.push_back(v);
  }
  return VertexSet(std::move(m));
}

inline std::string check_dual_predicate(const Graph& g, const DirectedDecomposition& dd,
                                        std::mt19937_64& rng, int samples) {
  for (int s = 0; s < samples; ++s) {
    VertexSet x = random_subset(g.order(), rng);
    for (int u = 0; u < g.order(); ++u) {
      for (int v = u + 1; v < g.order(); ++v) {
        if (pair_visible_decomp(dd, x, u, v) != pair_visible(g, x, u, v)) {
          return fail("visibility predicates differ at ", u, ",", v);
        }
      }
    }
  }
  return {};
}

// A free vertex on the head side of an arrow lets every tail-side pair see
// each other.
inline std::string check_arrow_witness(const Graph& g, const DirectedDecomposition& dd,
                                       std::mt19937_64& rng, int samples) {
  for (std::size_t i = 0; i < dd.arrows().size(); ++i) {
    SideView head = side_view(dd, static_cast<int>(i), Side::Head);
    SideView tail = side_view(dd, static_cast<int>(i), Side::Tail);
    auto members = tail.reachable_unmarked.members();
    for (int s = 0; s < samples; ++s) {
      VertexSet x = random_subset(g.order(), rng);
      bool free = std::any_of(head.reachable_unmarked.begin(), head.reachable_unmarked.end(),
                              [&](Vertex w) { return !x.contains(w); });
      if (!free) continue;
      for (std::size_t p = 0; p < members.size(); ++p) {
        for (std::size_t q = p + 1; q < members.size(); ++q) {
          if (!pair_visible(g, x, members[p], members[q])) {
            return fail("arrow ", i, ": tail-side pair ", members[p], ",", members[q],
                        " not visible");
          }
        }
      }
    }
  }
  return {};
}

// Bookkeeping of a result: partition of V, sigma excluded, and the count of
// extra removals matching the shape.
inline std::string check_result_ledger(const Graph& g, const DirectedDecomposition& dd,
                                       const TArrowReport& report, const MuResult& r) {
  const int n = g.order();
  if (r.mu != static_cast<int>(r.set.size())) return "mu differs from |set|";
  std::vector<int> hits(n, 0);
  for (Vertex v : r.set) ++hits[v];
  for (Vertex v : r.removed_sigma) ++hits[v];
  for (const Removal& e : r.removed_extra) ++hits[e.vertex];
  if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) {
    return "set, sigma and removals do not partition V";
  }
  if (r.removed_sigma != dd.sigma()) return "removed sigma differs from the sigma-vertices";
  if (r.shape != report.shape) return "shape differs from the report";
  const std::size_t k = r.removed_extra.size();
  switch (report.shape) {
    case TArrowShape::NoTArrow:
      if (k != 0) return "removals without t-arrows";
      break;
    case TArrowShape::SingleOrTailConnected:
      if (k != report.t_arrows.size()) return "one removal per t-arrow expected";
      break;
    case TArrowShape::HeadConnected:
    case TArrowShape::OppositePair: {
      bool single = k == 1;
      bool by_witness = k == 1 && (r.removed_extra[0].reason == RemovalReason::KBagUnmarked ||
                                   r.removed_extra[0].reason == RemovalReason::SpecialVertex);
      if (k < 1 || k > 2 || single != by_witness) return "removal count does not fit the shape";
      break;
    }
  }
  return {};
}

}  // namespace mutvis::testing
