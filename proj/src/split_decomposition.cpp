#include "mutvis/split_decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mutvis/errors.hpp"

namespace mutvis {

const char* to_string(BagType type) { return type == BagType::Clique ? "K" : "S"; }

const char* to_string(EndType type) {
  switch (type) {
    case EndType::Clique:
      return "K";
    case EndType::StarCenter:
      return "S_c";
    case EndType::StarLeaf:
      return "S_p";
  }
  return "?";
}

MarkedGraph::MarkedGraph(int graph_order, int vertex_count, std::vector<Bag> bags,
                         std::vector<MarkedEdge> marked_edges)
    : graph_order_(graph_order),
      bags_(std::move(bags)),
      marked_edges_(std::move(marked_edges)),
      bag_of_(vertex_count, -1),
      mate_(vertex_count, -1),
      edge_of_(vertex_count, -1) {
  if (graph_order < 0 || vertex_count < graph_order) {
    throw InputError("inconsistent decomposition vertex counts");
  }
  for (std::size_t b = 0; b < bags_.size(); ++b) {
    Bag& bag = bags_[b];
    bag.id = static_cast<int>(b);
    std::sort(bag.members.begin(), bag.members.end());
    for (int v : bag.members) {
      if (v < 0 || v >= vertex_count) throw InputError("bag member id out of range");
      if (bag_of_[v] != -1) throw InputError("vertex " + std::to_string(v) + " is in two bags");
      bag_of_[v] = bag.id;
    }
    if (bag.type == BagType::Star) {
      if (!std::binary_search(bag.members.begin(), bag.members.end(), bag.center)) {
        throw InputError("star bag " + std::to_string(b) + " has no valid center");
      }
    } else {
      bag.center = -1;
    }
  }
  if (std::find(bag_of_.begin(), bag_of_.end(), -1) != bag_of_.end()) {
    throw InputError("some decomposition vertex lies in no bag");
  }
  for (std::size_t i = 0; i < marked_edges_.size(); ++i) {
    auto [u, v] = marked_edges_[i];
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count || u == v) {
      throw InputError("malformed marked edge");
    }
    for (int end : {u, v}) {
      if (mate_[end] == -1) {
        mate_[end] = end == u ? v : u;
        edge_of_[end] = static_cast<int>(i);
      }
    }
  }
}

bool MarkedGraph::is_center(int v) const {
  const Bag& b = bags_[bag_of_[v]];
  return b.type == BagType::Star && b.center == v;
}

EndType MarkedGraph::end_type(int v) const {
  const Bag& b = bags_[bag_of_[v]];
  if (b.type == BagType::Clique) return EndType::Clique;
  return b.center == v ? EndType::StarCenter : EndType::StarLeaf;
}

namespace {

template <typename F>
void for_each_bag_neighbor(const MarkedGraph& d, int v, F&& f) {
  const Bag& b = d.bag(d.bag_of(v));
  if (b.type == BagType::Clique || b.center == v) {
    for (int w : b.members) {
      if (w != v) f(w);
    }
  } else {
    f(b.center);
  }
}

}  // namespace

std::vector<int> MarkedGraph::bag_neighbors(int v) const {
  std::vector<int> out;
  for_each_bag_neighbor(*this, v, [&](int w) { out.push_back(w); });
  return out;
}

bool MarkedGraph::unmarked_adjacent(int u, int v) const {
  if (u == v || bag_of_[u] != bag_of_[v]) return false;
  const Bag& b = bags_[bag_of_[u]];
  return b.type == BagType::Clique || b.center == u || b.center == v;
}

namespace {

// Mutable decomposition grown one expansion step at a time.
class DecompositionBuilder {
 public:
  explicit DecompositionBuilder(int n) : n_(n), next_marked_(n) {
    // At most two marked vertices and one bag per expansion step.
    const std::size_t most = 3 * static_cast<std::size_t>(n);
    bag_of_.reserve(most);
    pos_.reserve(most);
    mate_.reserve(most);
    bag_of_.assign(n, -1);
    pos_.assign(n, -1);
    mate_.assign(n, -1);
    bags_.reserve(n);
  }

  void start(Vertex root) {
    bags_.push_back({BagType::Clique, {root}, -1});
    bag_of_[root] = 0;
    pos_[root] = 0;
    present_ = 1;
  }

  void insert(const PruningStep& step) {
    const Vertex x = step.removed;
    const Vertex y = step.anchor;
    if (x < 0 || x >= n_ || y < 0 || y >= n_ || x == y) {
      throw InputError("pruning step references an invalid vertex");
    }
    if (bag_of_[x] != -1) throw InputError("vertex " + std::to_string(x) + " expanded twice");
    if (bag_of_[y] == -1) {
      throw InputError("anchor " + std::to_string(y) + " used before it exists");
    }
    if (present_ <= 2) {
      insert_small(step);
    } else {
      insert_general(step);
    }
    ++present_;
  }

  MarkedGraph finish() && {
    if (present_ != n_) throw InputError("pruning sequence does not cover every vertex");
    // Number bags by smallest member.
    std::vector<Bag> out;
    out.reserve(bags_.size());
    for (auto& wb : bags_) {
      Bag b;
      b.type = wb.type;
      b.center = wb.center;
      b.members = std::move(wb.members);
      std::sort(b.members.begin(), b.members.end());
      out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(),
              [](const Bag& a, const Bag& b) { return a.members.front() < b.members.front(); });
    std::vector<MarkedEdge> edges;
    for (int v = n_; v < next_marked_; ++v) {
      if (v < mate_[v]) edges.push_back({v, mate_[v]});
    }
    return MarkedGraph(n_, next_marked_, std::move(out), std::move(edges));
  }

 private:
  struct WorkBag {
    BagType type;
    std::vector<int> members;
    int center;
  };

  int new_vertex() {
    int v = next_marked_++;
    bag_of_.push_back(-1);
    pos_.push_back(-1);
    mate_.push_back(-1);
    return v;
  }

  void add_to_bag(int bag, int v) {
    bag_of_[v] = bag;
    pos_[v] = static_cast<int>(bags_[bag].members.size());
    bags_[bag].members.push_back(v);
  }

  // The first three vertices: one bag, rebuilt from scratch.
  void insert_small(const PruningStep& step) {
    const Vertex x = step.removed;
    const Vertex y = step.anchor;
    WorkBag& bag = bags_[0];
    if (present_ == 1) {
      if (step.kind == PruningKind::FalseTwin) {
        throw InputError("false twin of a single vertex disconnects the graph");
      }
      add_to_bag(0, x);
      return;
    }
    const int other = bag.members[0] == y ? bag.members[1] : bag.members[0];
    add_to_bag(0, x);
    switch (step.kind) {
      case PruningKind::Pendant:
        bag.type = BagType::Star;
        bag.center = y;
        break;
      case PruningKind::TrueTwin:
        bag.type = BagType::Clique;
        break;
      case PruningKind::FalseTwin:
        bag.type = BagType::Star;
        bag.center = other;
        break;
    }
  }

  void insert_general(const PruningStep& step) {
    const Vertex x = step.removed;
    const Vertex y = step.anchor;
    const int b = bag_of_[y];
    const WorkBag& bag = bags_[b];
    const bool y_center = bag.type == BagType::Star && bag.center == y;
    switch (step.kind) {
      case PruningKind::Pendant:
        // A new S-bag centred at y would meet B through an S_p S_c edge.
        if (y_center) return add_to_bag(b, x);
        return split_off(y, x, BagType::Star, /*center_is_anchor=*/true);
      case PruningKind::TrueTwin:
        if (bag.type == BagType::Clique) return add_to_bag(b, x);
        return split_off(y, x, BagType::Clique, false);
      case PruningKind::FalseTwin:
        if (bag.type == BagType::Star && !y_center) return add_to_bag(b, x);
        return split_off(y, x, BagType::Star, false);
    }
  }

  // Moves y into a new bag {y, x, m1}; m2 takes y's place in its old bag and
  // m1-m2 becomes a marked edge. A new star is centred at y or at m1.
  void split_off(Vertex y, Vertex x, BagType type, bool center_is_anchor) {
    const int old_bag = bag_of_[y];
    const int m1 = new_vertex();
    const int m2 = new_vertex();
    mate_[m1] = m2;
    mate_[m2] = m1;

    WorkBag& ob = bags_[old_bag];
    ob.members[pos_[y]] = m2;
    pos_[m2] = pos_[y];
    bag_of_[m2] = old_bag;
    if (ob.type == BagType::Star && ob.center == y) ob.center = m2;

    const int nb = static_cast<int>(bags_.size());
    int center = -1;
    if (type == BagType::Star) center = center_is_anchor ? y : m1;
    bags_.push_back({type, {}, center});
    add_to_bag(nb, y);
    add_to_bag(nb, x);
    add_to_bag(nb, m1);
  }

  int n_;
  int next_marked_;
  int present_ = 0;
  std::vector<WorkBag> bags_;
  std::vector<int> bag_of_;
  std::vector<int> pos_;
  std::vector<int> mate_;
};

MarkedGraph build_decomposition(int n, const PruningSequence& seq) {
  if (n < 1) throw InputError("cannot decompose an empty graph");
  if (seq.order != n) throw InputError("pruning sequence is for a graph of another order");
  if (seq.root < 0 || seq.root >= n) throw InputError("pruning sequence root out of range");
  DecompositionBuilder builder(n);
  builder.start(seq.root);
  for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it) builder.insert(*it);
  return std::move(builder).finish();
}

}  // namespace

MarkedGraph canonical_decomposition(const Graph& g, const PruningSequence& seq) {
  MarkedGraph d = build_decomposition(g.order(), seq);
  if (recompose(d) != g) throw InputError("pruning sequence does not generate the graph");
  return d;
}

MarkedGraph canonical_decomposition(const Graph& g) {
  auto rec = recognize_dh(g);
  if (!rec.accepted()) throw NotDistanceHereditaryError(rec.remainder.size());
  return build_decomposition(g.order(), *rec.sequence);
}

std::vector<std::string> validate_canonical(const MarkedGraph& d) {
  std::vector<std::string> violations;
  const int total = d.vertex_count();
  const int n = d.graph_order();

  std::vector<int> marked_degree(total, 0);
  for (auto [u, v] : d.marked_edges()) {
    ++marked_degree[u];
    ++marked_degree[v];
  }
  for (int v = 0; v < total; ++v) {
    int want = d.is_marked(v) ? 1 : 0;
    if (marked_degree[v] != want) {
      violations.push_back("matching: vertex " + std::to_string(v) + " has " +
                           std::to_string(marked_degree[v]) + " marked edges");
    }
  }

  // Marked edges must be cut-edges: bags and marked edges form a tree.
  const int bag_count = static_cast<int>(d.bags().size());
  std::vector<int> parent(bag_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  bool tree = static_cast<int>(d.marked_edges().size()) == bag_count - 1;
  for (auto [u, v] : d.marked_edges()) {
    int a = find(d.bag_of(u));
    int b = find(d.bag_of(v));
    if (d.bag_of(u) == d.bag_of(v)) {
      violations.push_back("marked edge " + std::to_string(u) + "-" + std::to_string(v) +
                           " lies inside one bag");
    }
    if (a == b) {
      tree = false;
    } else {
      parent[a] = b;
    }
  }
  if (!tree) violations.push_back("cut-edge: bags and marked edges do not form a tree");

  const bool trivial = bag_count == 1 && n <= 2;
  for (const Bag& b : d.bags()) {
    if (!trivial && b.members.size() < 3) {
      violations.push_back("bag " + std::to_string(b.id) + " has fewer than 3 vertices");
    }
  }

  for (auto [u, v] : d.marked_edges()) {
    if (marked_degree[u] != 1 || marked_degree[v] != 1) continue;
    EndType a = d.end_type(u);
    EndType b = d.end_type(v);
    if (a == EndType::Clique && b == EndType::Clique) {
      violations.push_back("marked edge type KK at " + std::to_string(u) + "-" +
                           std::to_string(v));
    }
    if ((a == EndType::StarLeaf && b == EndType::StarCenter) ||
        (a == EndType::StarCenter && b == EndType::StarLeaf)) {
      violations.push_back("marked edge type S_pS_c at " + std::to_string(u) + "-" +
                           std::to_string(v));
    }
  }
  return violations;
}

Graph recompose(const MarkedGraph& d) {
  const int n = d.graph_order();
  std::vector<Edge> edges;
  std::vector<int> stack;
  for (int x = 0; x < n; ++x) {
    // Alternating walks from x: one unmarked edge, then across a marked edge.
    auto step = [&](int w) {
      if (!d.is_marked(w)) {
        if (x < w) edges.emplace_back(x, w);
      } else if (d.mate(w) >= 0) {
        stack.push_back(d.mate(w));
      }
    };
    for_each_bag_neighbor(d, x, step);
    while (!stack.empty()) {
      int entry = stack.back();
      stack.pop_back();
      for_each_bag_neighbor(d, entry, step);
    }
  }
  return Graph(n, edges);
}

std::optional<std::vector<int>> alternating_path(const MarkedGraph& d, int x, int y) {
  const int n = d.graph_order();
  if (x < 0 || y < 0 || x >= n || y >= n || x == y) {
    throw InputError("alternating_path needs two distinct unmarked vertices");
  }
  std::vector<int> parent(d.vertex_count(), -1);
  std::vector<int> stack;
  bool found = false;
  auto expand = [&](int from) {
    for_each_bag_neighbor(d, from, [&](int w) {
      if (found || parent[w] != -1 || w == x) return;
      parent[w] = from;
      if (w == y) {
        found = true;
      } else if (d.is_marked(w) && d.mate(w) >= 0 && parent[d.mate(w)] == -1) {
        parent[d.mate(w)] = w;
        stack.push_back(d.mate(w));
      }
    });
  };
  expand(x);
  while (!found && !stack.empty()) {
    int entry = stack.back();
    stack.pop_back();
    expand(entry);
  }
  if (!found) return std::nullopt;
  std::vector<int> path{y};
  for (int v = y; v != x;) {
    v = parent[v];
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

DecompositionTree decomposition_tree(const MarkedGraph& d) {
  DecompositionTree t;
  t.node_count = static_cast<int>(d.bags().size());
  t.adjacency.resize(t.node_count);
  for (std::size_t i = 0; i < d.marked_edges().size(); ++i) {
    auto [u, v] = d.marked_edges()[i];
    int a = d.bag_of(u);
    int b = d.bag_of(v);
    t.edges.push_back({a, b, static_cast<int>(i)});
    t.adjacency[a].push_back(b);
    t.adjacency[b].push_back(a);
  }
  for (auto& nb : t.adjacency) std::sort(nb.begin(), nb.end());
  return t;
}

}  // namespace mutvis
