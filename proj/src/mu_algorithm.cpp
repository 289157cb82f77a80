#include "mutvis/mu_algorithm.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "mutvis/errors.hpp"

namespace mutvis {

const char* to_string(RemovalReason reason) {
  switch (reason) {
    case RemovalReason::PerTArrowHeadWitness:
      return "per-t-arrow-head-witness";
    case RemovalReason::KBagUnmarked:
      return "K-bag-unmarked";
    case RemovalReason::SpecialVertex:
      return "special-vertex";
    case RemovalReason::GenericPair:
      return "generic-pair";
  }
  return "?";
}

namespace {

// Smallest unmarked vertex on v's side of its marked edge.
int min_unmarked_on_side(const DirectedDecomposition& dd, int v) {
  const MarkedGraph& d = dd.base();
  const int cut = d.marked_edge_of(v);
  int best = -1;
  std::vector<int> bags{d.bag_of(v)};
  std::vector<int> from{-1};
  for (std::size_t i = 0; i < bags.size(); ++i) {
    for (int w : d.bag(bags[i]).members) {
      if (!d.is_marked(w)) {
        best = best < 0 ? w : std::min(best, w);
        continue;
      }
      if (d.marked_edge_of(w) == cut) continue;
      int c = d.bag_of(d.mate(w));
      if (c == from[i]) continue;
      bags.push_back(c);
      from.push_back(bags[i]);
    }
  }
  return best;
}

}  // namespace

MuResult mu_set(const DirectedDecomposition& dd, const TArrowReport& report) {
  const MarkedGraph& d = dd.base();
  const int n = d.graph_order();
  const auto& arrows = dd.arrows();
  const auto& A = report.t_arrows;

  MuResult result;
  result.shape = report.shape;
  result.removed_sigma = dd.sigma();
  std::vector<char> removed(n, 0);
  for (Vertex v : dd.sigma()) removed[v] = 1;

  auto remove = [&](int v, RemovalReason reason) {
    if (v < 0 || v >= n) throw std::logic_error("no unmarked vertex available for removal");
    if (dd.is_sigma(v)) {
      throw std::logic_error("vertex " + std::to_string(v) + " chosen for removal is a sigma-vertex");
    }
    if (removed[v]) {
      throw std::logic_error("vertex " + std::to_string(v) + " removed twice; head sides overlap");
    }
    removed[v] = 1;
    result.removed_extra.push_back({v, reason});
  };

  // Pick the smaller special vertex among the candidate sides.
  auto best_special = [&](Side side) {
    int best = -1;
    for (int i : A) {
      SpecialCheck s = is_special_side(dd, i, side);
      if (s.is_special) best = best < 0 ? s.special_vertex : std::min(best, s.special_vertex);
    }
    return best;
  };

  switch (report.shape) {
    case TArrowShape::NoTArrow:
      break;

    case TArrowShape::SingleOrTailConnected:
      for (int i : A) remove(dd.reach(arrows[i].head).min, RemovalReason::PerTArrowHeadWitness);
      break;

    case TArrowShape::HeadConnected: {
      int w = -1;
      for (int v : d.bag(report.head_bag).members) {
        if (!d.is_marked(v)) {
          w = v;
          break;
        }
      }
      if (w >= 0) {
        remove(w, RemovalReason::KBagUnmarked);
        break;
      }
      if (int s = best_special(Side::Tail); s >= 0) {
        remove(s, RemovalReason::SpecialVertex);
        break;
      }
      std::vector<int> minima;
      for (int i : A) minima.push_back(min_unmarked_on_side(dd, arrows[i].tail));
      std::sort(minima.begin(), minima.end());
      remove(minima[0], RemovalReason::GenericPair);
      remove(minima[1], RemovalReason::GenericPair);
      break;
    }

    case TArrowShape::OppositePair: {
      // Candidates are the head sides of the two arrows.
      if (int s = best_special(Side::Head); s >= 0) {
        remove(s, RemovalReason::SpecialVertex);
        break;
      }
      int w = min_unmarked_on_side(dd, arrows[A[0]].tail);
      int w2 = min_unmarked_on_side(dd, arrows[A[1]].tail);
      remove(std::min(w, w2), RemovalReason::GenericPair);
      remove(std::max(w, w2), RemovalReason::GenericPair);
      break;
    }
  }

  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) keep.push_back(v);
  }
  result.set = VertexSet(std::move(keep));
  result.mu = static_cast<int>(result.set.size());
  return result;
}

MuResult mu_set(const Graph& g) {
  StageTimings ignored;
  return mu_set_timed(g, ignored);
}

MuResult mu_set_timed(const Graph& g, StageTimings& timings) {
  using Clock = std::chrono::steady_clock;
  auto ms_since = [](Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  };
  timings = {};
  if (g.order() == 0) throw InputError("empty graph");
  if (!is_connected(g)) throw DisconnectedGraphError("graph is not connected");
  if (g.order() <= 2) {
    MuResult r;
    std::vector<Vertex> all(g.order());
    for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
    r.set = VertexSet(std::move(all));
    r.mu = g.order();
    return r;
  }
  auto start = Clock::now();
  MarkedGraph d = canonical_decomposition(g);
  timings.decompose_ms = ms_since(start);

  start = Clock::now();
  DirectedDecomposition dd(std::move(d));
  timings.orient_ms = ms_since(start);

  start = Clock::now();
  TArrowReport report = t_arrows(dd);
  timings.t_arrows_ms = ms_since(start);

  start = Clock::now();
  MuResult result = mu_set(dd, report);
  timings.algorithm_ms = ms_since(start);
  return result;
}

int mu_number(const Graph& g) { return mu_set(g).mu; }

namespace {

struct PathStep {
  int bag;
  int entry;
  int exit;
};

// Bags between x and y with the vertex used to enter and leave each.
std::vector<PathStep> bag_path(const DirectedDecomposition& dd, Vertex x, Vertex y) {
  const MarkedGraph& d = dd.base();
  auto depth = [&](int b) {
    int k = 0;
    for (; dd.parent_bag(b) >= 0; b = dd.parent_bag(b)) ++k;
    return k;
  };
  int bx = d.bag_of(x), by = d.bag_of(y);
  std::vector<int> up, down;  // bags climbed from x, bags climbed from y
  int dx = depth(bx), dy = depth(by);
  while (dx > dy) {
    up.push_back(bx);
    bx = dd.parent_bag(bx);
    --dx;
  }
  while (dy > dx) {
    down.push_back(by);
    by = dd.parent_bag(by);
    --dy;
  }
  while (bx != by) {
    up.push_back(bx);
    down.push_back(by);
    bx = dd.parent_bag(bx);
    by = dd.parent_bag(by);
  }
  std::vector<int> bags = up;
  bags.push_back(bx);
  bags.insert(bags.end(), down.rbegin(), down.rend());

  std::vector<PathStep> steps;
  int entry = x;
  for (std::size_t i = 0; i < bags.size(); ++i) {
    int exit;
    if (i + 1 == bags.size()) {
      exit = y;
    } else if (dd.parent_bag(bags[i]) == bags[i + 1]) {
      exit = dd.parent_link(bags[i]);
    } else {
      exit = d.mate(dd.parent_link(bags[i + 1]));
    }
    steps.push_back({bags[i], entry, exit});
    entry = d.mate(exit);
  }
  return steps;
}

}  // namespace

VisibilityWitness visibility_witness(const DirectedDecomposition& dd, Vertex x, Vertex y) {
  const MarkedGraph& d = dd.base();
  const int n = d.graph_order();
  if (x < 0 || y < 0 || x >= n || y >= n || x == y) {
    throw InputError("visibility_witness needs two distinct unmarked vertices");
  }
  VisibilityWitness w;
  std::vector<Vertex> sigma;
  for (const PathStep& s : bag_path(dd, x, y)) {
    const Bag& b = d.bag(s.bag);
    if (b.type != BagType::Star || b.center == s.entry || b.center == s.exit) continue;
    if (!d.is_marked(b.center)) {
      sigma.push_back(b.center);
    } else {
      int a = dd.arrow_from(b.center);
      if (a < 0) throw std::logic_error("marked star center without an arrow");
      w.branching_arrows.push_back(a);
    }
  }
  w.sigma_on_path = VertexSet(std::move(sigma));
  return w;
}

bool pair_visible_decomp(const DirectedDecomposition& dd, const VertexSet& x, Vertex u, Vertex v) {
  VisibilityWitness w = visibility_witness(dd, u, v);
  for (Vertex s : w.sigma_on_path) {
    if (x.contains(s)) return false;
  }
  for (int a : w.branching_arrows) {
    auto view = side_view(dd, a, Side::Head);
    bool free = std::any_of(view.reachable_unmarked.begin(), view.reachable_unmarked.end(),
                            [&](Vertex h) { return !x.contains(h); });
    if (!free) return false;
  }
  return true;
}

}  // namespace mutvis
