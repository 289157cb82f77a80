#include "mutvis/directed_decomposition.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>

namespace mutvis {

const char* to_string(TArrowShape shape) {
  switch (shape) {
    case TArrowShape::NoTArrow:
      return "no-t-arrow";
    case TArrowShape::SingleOrTailConnected:
      return "single-or-tail-connected";
    case TArrowShape::HeadConnected:
      return "head-connected";
    case TArrowShape::OppositePair:
      return "opposite-pair";
  }
  return "?";
}

namespace {

int min_id(int a, int b) {
  if (a < 0) return b;
  if (b < 0) return a;
  return std::min(a, b);
}

Reach combine(Reach a, const Reach& b) {
  a.sigma = a.sigma || b.sigma;
  a.tail = a.tail || b.tail;
  a.count += b.count;
  a.min = min_id(a.min, b.min);
  return a;
}

}  // namespace

DirectedDecomposition::DirectedDecomposition(MarkedGraph base)
    : base_(std::move(base)) {
  const int total = base_.vertex_count();
  arrow_from_.assign(total, -1);

  const auto& edges = base_.marked_edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    auto orientable = [&](int from, int to) {
      EndType t = base_.end_type(to);
      return base_.end_type(from) == EndType::StarCenter &&
             (t == EndType::StarCenter || t == EndType::Clique);
    };
    int first = -1;
    for (auto [tail, head] : {std::pair{std::min(u, v), std::max(u, v)},
                              std::pair{std::max(u, v), std::min(u, v)}}) {
      if (!orientable(tail, head)) continue;
      int idx = static_cast<int>(arrows_.size());
      arrows_.push_back({tail, head, static_cast<int>(i), std::nullopt});
      arrow_from_[tail] = idx;
      if (first >= 0) {
        arrows_[first].opposite = idx;
        arrows_[idx].opposite = first;
      }
      first = idx;
    }
    if (first < 0) plain_.push_back(static_cast<int>(i));
  }

  std::vector<Vertex> sigma;
  for (const Bag& b : base_.bags()) {
    if (b.type == BagType::Star && !base_.is_marked(b.center)) sigma.push_back(b.center);
  }
  sigma_ = VertexSet(std::move(sigma));

  // Root the decomposition tree at bag 0.
  const int bags = static_cast<int>(base_.bags().size());
  parent_bag_.assign(bags, -1);
  parent_link_.assign(bags, -1);
  order_.reserve(bags);
  std::vector<char> seen(bags, 0);
  order_.push_back(0);
  seen[0] = 1;
  for (std::size_t head = 0; head < order_.size(); ++head) {
    int b = order_[head];
    for (int v : base_.bag(b).members) {
      int m = base_.mate(v);
      if (m < 0) continue;
      int c = base_.bag_of(m);
      if (seen[c]) continue;
      seen[c] = 1;
      parent_bag_[c] = b;
      parent_link_[c] = m;
      order_.push_back(c);
    }
  }

  // Subtree sizes bottom-up, then preorder intervals top-down: children
  // take consecutive ranges after their parent in BFS order.
  subtree_unmarked_.assign(bags, 0);
  std::vector<int> size(bags, 1);
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    int b = *it;
    for (int v : base_.bag(b).members) {
      if (!base_.is_marked(v)) ++subtree_unmarked_[b];
    }
    if (int p = parent_bag_[b]; p >= 0) {
      subtree_unmarked_[p] += subtree_unmarked_[b];
      size[p] += size[b];
    }
  }
  tin_.assign(bags, 0);
  tout_.assign(bags, 0);
  std::vector<int> next_free(bags, 0);
  for (int b : order_) {
    if (int p = parent_bag_[b]; p >= 0) {
      tin_[b] = next_free[p];
      next_free[p] += size[b];
    }
    tout_[b] = tin_[b] + size[b] - 1;
    next_free[b] = tin_[b] + 1;
  }

  compute_reach();
}

// Two passes over the rooted tree. Upward: the reach of each bag's parent
// link depends only on its subtree. Downward: every other marked vertex of a
// bag sees the whole bag minus itself, with the parent side already known.
void DirectedDecomposition::compute_reach() {
  reach_.assign(base_.vertex_count(), Reach{});

  auto contribution = [&](int w) -> Reach {
    if (!base_.is_marked(w)) return {is_sigma(w), false, 1, w};
    Reach r = reach_[base_.mate(w)];
    r.tail = r.tail || arrow_from_[w] >= 0;
    return r;
  };

  auto reach_inside = [&](int bag, int v) {
    Reach r;
    const Bag& b = base_.bag(bag);
    if (b.type == BagType::Star && b.center != v) return contribution(b.center);
    for (int w : b.members) {
      if (w != v) r = combine(r, contribution(w));
    }
    return r;
  };

  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    int b = *it;
    if (parent_link_[b] >= 0) reach_[parent_link_[b]] = reach_inside(b, parent_link_[b]);
  }

  std::vector<Reach> parts;
  for (int b : order_) {
    const Bag& bag = base_.bag(b);
    auto is_child_link = [&](int v) { return base_.is_marked(v) && v != parent_link_[b]; };
    if (bag.type == BagType::Star) {
      for (int v : bag.members) {
        if (is_child_link(v)) reach_[v] = reach_inside(b, v);
      }
      continue;
    }
    // Clique: aggregate once, then exclude each member.
    int sigma_count = 0, tail_count = 0, count = 0;
    int best = INT_MAX, best_owner = -1, second = INT_MAX;
    parts.clear();
    for (int w : bag.members) {
      Reach r = contribution(w);
      parts.push_back(r);
      sigma_count += r.sigma;
      tail_count += r.tail;
      count += r.count;
      if (r.min >= 0) {
        if (r.min < best) {
          second = best;
          best = r.min;
          best_owner = w;
        } else if (r.min < second) {
          second = r.min;
        }
      }
    }
    for (std::size_t i = 0; i < bag.members.size(); ++i) {
      int v = bag.members[i];
      if (!is_child_link(v)) continue;
      const Reach& own = parts[i];
      int m = best_owner == v ? second : best;
      reach_[v] = {sigma_count - own.sigma > 0, tail_count - own.tail > 0, count - own.count,
                   m == INT_MAX ? -1 : m};
    }
  }
}

int DirectedDecomposition::side_unmarked_count(int v) const {
  int b = base_.bag_of(v);
  if (parent_link_[b] == v) return subtree_unmarked_[b];
  return base_.graph_order() - subtree_unmarked_[base_.bag_of(base_.mate(v))];
}

bool DirectedDecomposition::bag_on_side(int v, int bag) const {
  int b = base_.bag_of(v);
  auto in_subtree = [&](int root) { return tin_[root] <= tin_[bag] && tin_[bag] <= tout_[root]; };
  if (parent_link_[b] == v) return in_subtree(b);
  return !in_subtree(base_.bag_of(base_.mate(v)));
}

int DirectedDecomposition::lower_bag(int marked_edge) const {
  auto [u, v] = base_.marked_edges()[marked_edge];
  int bu = base_.bag_of(u);
  return parent_link_[bu] == u ? bu : base_.bag_of(v);
}

DirectedDecomposition orient(const MarkedGraph& d) { return DirectedDecomposition(d); }

SideView side_view(const DirectedDecomposition& dd, int arrow, Side side) {
  const MarkedGraph& d = dd.base();
  const Arrow& a = dd.arrows().at(arrow);
  const int start = side == Side::Head ? a.head : a.tail;

  SideView view{arrow, side, {}, {}};
  std::vector<int> bags{d.bag_of(start)};
  std::vector<char> seen(d.bags().size(), 0);
  seen[bags[0]] = 1;
  for (std::size_t i = 0; i < bags.size(); ++i) {
    for (int v : d.bag(bags[i]).members) {
      view.component_vertices.push_back(v);
      int m = d.mate(v);
      if (m < 0 || d.marked_edge_of(v) == a.marked_edge) continue;
      int c = d.bag_of(m);
      if (!seen[c]) {
        seen[c] = 1;
        bags.push_back(c);
      }
    }
  }
  std::sort(view.component_vertices.begin(), view.component_vertices.end());

  std::vector<Vertex> reached;
  std::vector<int> entries{start};
  while (!entries.empty()) {
    int e = entries.back();
    entries.pop_back();
    for (int w : d.bag_neighbors(e)) {
      if (!d.is_marked(w)) {
        reached.push_back(w);
      } else {
        entries.push_back(d.mate(w));
      }
    }
  }
  view.reachable_unmarked = VertexSet(std::move(reached));
  return view;
}

bool is_t_arrow(const DirectedDecomposition& dd, int arrow) {
  const Reach& r = dd.reach(dd.arrows().at(arrow).head);
  return !r.sigma && !r.tail;
}

TArrowReport t_arrows(const DirectedDecomposition& dd) {
  const auto& arrows = dd.arrows();
  TArrowReport report;
  for (int i = 0; i < static_cast<int>(arrows.size()); ++i) {
    if (is_t_arrow(dd, i)) report.t_arrows.push_back(i);
  }
  const auto& A = report.t_arrows;
  if (A.empty()) return report;

  auto fail = [](const std::string& what) {
    throw std::logic_error("inconsistent t-arrow structure: " + what);
  };

  if (A.size() == 2 && arrows[A[0]].opposite == A[1]) {
    report.shape = TArrowShape::OppositePair;
    return report;
  }
  std::vector<char> is_t(arrows.size(), 0);
  for (int i : A) is_t[i] = 1;
  for (int i : A) {
    if (arrows[i].opposite && is_t[*arrows[i].opposite]) {
      fail("opposite t-arrows alongside further t-arrows");
    }
  }
  if (A.size() == 1) {
    report.shape = TArrowShape::SingleOrTailConnected;
    return report;
  }

  auto edge_on_side = [&](int v, int other_arrow) {
    return dd.bag_on_side(v, dd.lower_bag(arrows[other_arrow].marked_edge));
  };
  const Arrow& a0 = arrows[A[0]];
  const Arrow& a1 = arrows[A[1]];
  const bool head_connected = edge_on_side(a0.head, A[1]) && edge_on_side(a1.head, A[0]);
  const bool tail_connected = edge_on_side(a0.tail, A[1]) && edge_on_side(a1.tail, A[0]);

  const MarkedGraph& d = dd.base();
  if (head_connected) {
    const int bag = d.bag_of(a0.head);
    if (d.bag(bag).type != BagType::Clique) fail("t-arrow heads in a star bag");
    for (int i : A) {
      if (d.bag_of(arrows[i].head) != bag) fail("head-connected t-arrows in different bags");
    }
    report.shape = TArrowShape::HeadConnected;
    report.head_bag = bag;
    return report;
  }
  if (!tail_connected) fail("a head side holds another t-arrow's tail side");

  // Pairwise tail-connected: no head side may contain another t-arrow edge.
  const int bags = static_cast<int>(d.bags().size());
  std::vector<int> lower_flag(bags, 0);  // t-arrow edge above this bag
  for (int i : A) lower_flag[dd.lower_bag(arrows[i].marked_edge)] = 1;
  std::vector<int> inner(bags, 0);  // t-arrow edges strictly below
  const auto& order = dd.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int b = *it;
    int p = dd.parent_bag(b);
    if (p >= 0) inner[p] += inner[b] + lower_flag[b];
  }
  const int total = inner[0];
  for (int i : A) {
    const Arrow& a = arrows[i];
    int lower = dd.lower_bag(a.marked_edge);
    int in_head_side = d.bag_of(a.head) == lower ? inner[lower] : total - inner[lower] - 1;
    if (in_head_side != 0) fail("t-arrows neither pairwise head- nor tail-connected");
  }
  report.shape = TArrowShape::SingleOrTailConnected;
  return report;
}

SpecialCheck is_special_side(const DirectedDecomposition& dd, int arrow, Side side) {
  const MarkedGraph& d = dd.base();
  const Arrow& a = dd.arrows().at(arrow);
  const int root = side == Side::Head ? a.head : a.tail;
  const Bag& bag = d.bag(d.bag_of(root));
  if (bag.type != BagType::Star || bag.center != root || bag.members.size() != 3) return {};

  std::vector<int> unmarked, marked;
  for (int v : bag.members) {
    if (v == root) continue;
    (d.is_marked(v) ? marked : unmarked).push_back(v);
  }
  if (unmarked.size() == 2) return {true, std::min(unmarked[0], unmarked[1])};
  if (unmarked.size() == 1 && marked.size() == 1) {
    const int far = d.mate(marked[0]);
    const Bag& k = d.bag(d.bag_of(far));
    if (k.type != BagType::Clique) return {};
    for (int v : k.members) {
      if (v != far && d.is_marked(v)) return {};
    }
    return {true, unmarked[0]};
  }
  return {};
}

}  // namespace mutvis
