#include "mutvis/generators.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "mutvis/errors.hpp"

namespace mutvis {

Graph expand(const PruningSequence& seq) {
  const int n = seq.order;
  if (n < 1) throw InputError("pruning sequence for an empty graph");
  if (seq.root < 0 || seq.root >= n) throw InputError("pruning sequence root out of range");
  if (static_cast<int>(seq.steps.size()) != n - 1) {
    throw InputError("pruning sequence must have exactly order - 1 steps");
  }
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<char> present(n, 0);
  present[seq.root] = 1;
  std::vector<Edge> edges;
  for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it) {
    const auto [kind, x, y] = *it;
    if (x < 0 || x >= n || y < 0 || y >= n) throw InputError("pruning step vertex out of range");
    if (present[x]) throw InputError("vertex " + std::to_string(x) + " added twice");
    if (!present[y]) throw InputError("anchor " + std::to_string(y) + " not present yet");
    std::vector<Vertex> nbrs;
    switch (kind) {
      case PruningKind::Pendant:
        nbrs = {y};
        break;
      case PruningKind::TrueTwin:
        nbrs = adj[y];
        nbrs.push_back(y);
        break;
      case PruningKind::FalseTwin:
        nbrs = adj[y];
        if (nbrs.empty()) throw InputError("false twin of an isolated vertex");
        break;
    }
    for (Vertex w : nbrs) {
      adj[w].push_back(x);
      edges.emplace_back(std::min(x, w), std::max(x, w));
    }
    adj[x] = std::move(nbrs);
    present[x] = 1;
  }
  return Graph(n, edges);
}

PruningSequence random_expansion(const ExpansionSpec& spec) {
  if (spec.n < 1) throw InputError("random_dh needs n >= 1");
  const auto& w = spec.weights;
  if (w.pendant < 0 || w.true_twin < 0 || w.false_twin < 0 ||
      w.pendant + w.true_twin + w.false_twin <= 0) {
    throw InputError("expansion weights must be non-negative with a positive sum");
  }
  const double total = w.pendant + w.true_twin + w.false_twin;
  std::mt19937_64 engine(spec.seed);
  PruningSequence seq;
  seq.order = spec.n;
  seq.root = 0;
  std::vector<PruningStep> added;
  for (int i = 1; i < spec.n; ++i) {
    Vertex anchor = static_cast<Vertex>(engine() % static_cast<std::uint64_t>(i));
    double u = static_cast<double>(engine() >> 11) * 0x1.0p-53 * total;
    PruningKind kind = u < w.pendant                  ? PruningKind::Pendant
                       : u < w.pendant + w.true_twin ? PruningKind::TrueTwin
                                                     : PruningKind::FalseTwin;
    if (i == 1 && kind == PruningKind::FalseTwin) kind = PruningKind::Pendant;
    added.push_back({kind, i, anchor});
  }
  seq.steps.assign(added.rbegin(), added.rend());
  return seq;
}

Graph random_dh(const ExpansionSpec& spec) { return expand(random_expansion(spec)); }

Family parse_family(const std::string& name) {
  if (name == "path") return Family::Path;
  if (name == "star") return Family::Star;
  if (name == "clique") return Family::Clique;
  if (name == "complete-bipartite") return Family::CompleteBipartite;
  if (name == "cycle") return Family::Cycle;
  if (name == "block-chain") return Family::BlockChain;
  if (name == "octahedron") return Family::Octahedron;
  if (name == "tail-gadget") return Family::TailGadget;
  throw InputError("unknown graph family '" + name + "'");
}

const char* to_string(Family family) {
  switch (family) {
    case Family::Path:
      return "path";
    case Family::Star:
      return "star";
    case Family::Clique:
      return "clique";
    case Family::CompleteBipartite:
      return "complete-bipartite";
    case Family::Cycle:
      return "cycle";
    case Family::BlockChain:
      return "block-chain";
    case Family::Octahedron:
      return "octahedron";
    case Family::TailGadget:
      return "tail-gadget";
  }
  return "?";
}

namespace {

void require_params(Family f, const std::vector<int>& params, std::size_t count, int minimum) {
  if (params.size() != count) {
    throw InputError(std::string(to_string(f)) + " takes " + std::to_string(count) +
                     " parameter(s)");
  }
  for (int p : params) {
    if (p < minimum) {
      throw InputError(std::string(to_string(f)) + " parameters must be >= " +
                       std::to_string(minimum));
    }
  }
}

}  // namespace

Graph family(Family f, const std::vector<int>& params) {
  std::vector<Edge> edges;
  switch (f) {
    case Family::Path: {
      require_params(f, params, 1, 1);
      for (int i = 0; i + 1 < params[0]; ++i) edges.emplace_back(i, i + 1);
      return Graph(params[0], edges);
    }
    case Family::Star: {
      require_params(f, params, 1, 1);
      for (int i = 1; i <= params[0]; ++i) edges.emplace_back(0, i);
      return Graph(params[0] + 1, edges);
    }
    case Family::Clique: {
      require_params(f, params, 1, 1);
      for (int i = 0; i < params[0]; ++i) {
        for (int j = i + 1; j < params[0]; ++j) edges.emplace_back(i, j);
      }
      return Graph(params[0], edges);
    }
    case Family::CompleteBipartite: {
      require_params(f, params, 2, 1);
      const int m = params[0], n = params[1];
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
      }
      return Graph(m + n, edges);
    }
    case Family::Cycle: {
      require_params(f, params, 1, 3);
      if (params[0] != 4) {
        throw InputError(params[0] == 3
                             ? "cycle 3 is the triangle; use 'clique 3'"
                             : "cycles of length 5 or more are not distance-hereditary "
                               "(an induced path on all but one vertex is not isometric); "
                               "only 'cycle 4' is offered");
      }
      return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    }
    case Family::BlockChain: {
      if (params.size() == 2 && params[1] < 2) throw InputError("block-chain needs k >= 2");
      require_params(f, params, 2, 1);
      const int b = params[0], k = params[1];
      for (int block = 0; block < b; ++block) {
        int start = block * (k - 1);
        for (int i = 0; i < k; ++i) {
          for (int j = i + 1; j < k; ++j) edges.emplace_back(start + i, start + j);
        }
      }
      return Graph(b * (k - 1) + 1, edges);
    }
    case Family::Octahedron: {
      require_params(f, params, 0, 0);
      for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
          if (i / 2 != j / 2) edges.emplace_back(i, j);
        }
      }
      return Graph(6, edges);
    }
    case Family::TailGadget: {
      require_params(f, params, 0, 0);
      // w = 0, r1 = 1, s1 = 2, r2 = 3, s2 = 4 form a clique; a1 = 5, a2 = 6.
      for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) edges.emplace_back(i, j);
      }
      edges.insert(edges.end(), {{1, 5}, {2, 5}, {3, 6}, {4, 6}});
      return Graph(7, edges);
    }
  }
  throw InputError("unknown graph family");
}

void enumerate_small_dh(int n_max, const std::function<void(const Graph&)>& visit, int cap) {
  if (n_max > cap) {
    throw CapExceededError("enumeration up to " + std::to_string(n_max) +
                           " vertices exceeds the cap of " + std::to_string(cap));
  }
  if (n_max > 11) throw CapExceededError("edge-set keys hold at most 11 vertices");
  if (n_max < 1) return;

  // Edge (i, j), i < j, is bit j(j-1)/2 + i, so a new vertex appends bits.
  auto bit = [](int i, int j) { return std::uint64_t{1} << (j * (j - 1) / 2 + i); };
  auto to_graph = [&](std::uint64_t key, int n) {
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (key & bit(i, j)) edges.emplace_back(i, j);
      }
    }
    return Graph(n, edges);
  };

  std::vector<std::uint64_t> level{0};
  visit(to_graph(0, 1));
  for (int k = 1; k < n_max; ++k) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> next;
    for (std::uint64_t key : level) {
      for (int y = 0; y < k; ++y) {
        std::uint64_t nbr_of_y = 0;  // y's neighbours as bits in column k
        for (int z = 0; z < k; ++z) {
          if (z != y && (key & bit(std::min(y, z), std::max(y, z)))) nbr_of_y |= bit(z, k);
        }
        for (std::uint64_t column : {bit(y, k), nbr_of_y | bit(y, k), nbr_of_y}) {
          if (column == 0) continue;
          std::uint64_t grown = key | column;
          if (seen.insert(grown).second) next.push_back(grown);
        }
      }
    }
    std::sort(next.begin(), next.end());
    for (std::uint64_t key : next) visit(to_graph(key, k + 1));
    level = std::move(next);
  }
}

}  // namespace mutvis
