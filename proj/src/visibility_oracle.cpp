#include "mutvis/visibility_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>

#include "mutvis/errors.hpp"

namespace mutvis {

const char* to_string(PruningKind kind) {
  switch (kind) {
    case PruningKind::Pendant:
      return "pendant";
    case PruningKind::TrueTwin:
      return "true-twin";
    case PruningKind::FalseTwin:
      return "false-twin";
  }
  return "?";
}

namespace {

// Neighbourhood fingerprint: sum of per-vertex random 64-bit keys. Equal
// fingerprints are confirmed against the adjacency before a twin is pruned.
using Fingerprint = std::uint64_t;

// Per-vertex pruning state, kept in one record so an update touches a single
// cache line. `link` threads the vertex into its bucket of each index.
struct BucketLink {
  Vertex next = -1;
  Vertex prev = -1;
};

struct PruneState {
  Fingerprint open = 0;  // sum of live neighbours' keys
  int degree = 0;
  bool alive = true;
  bool dirty = false;   // fingerprint changed since it was last indexed
  bool queued[3] = {};  // on the heap of index 0, index 1, pendants
  BucketLink link[2];
};

// Vertices grouped by fingerprint in an open-addressing table. Each bucket is
// an intrusive list through PruneState::link[which]. Vertices that may share
// their bucket go onto a lazy min-heap; stale entries are dropped when they
// surface.
class TwinIndex {
 public:
  TwinIndex(std::vector<PruneState>& state, int which) : state_(state), which_(which) {
    std::size_t cap = 16;
    while (cap < state.size() + state.size() / 4) cap <<= 1;
    slots_.resize(cap);
    mask_ = cap - 1;
  }

  void insert(Fingerprint key, Vertex v) {
    Slot& s = slots_[find_or_claim(key)];
    BucketLink& l = link(v);
    l.prev = -1;
    l.next = s.head;
    if (s.head >= 0) link(s.head).prev = v;
    s.head = v;
    ++s.count;
    if (s.count == 2) push(l.next);
    if (s.count >= 2) push(v);
  }

  void erase(Fingerprint key, Vertex v) {
    std::size_t i = find(key);
    Slot& s = slots_[i];
    const BucketLink l = link(v);
    if (l.prev >= 0) {
      link(l.prev).next = l.next;
    } else {
      s.head = l.next;
    }
    if (l.next >= 0) link(l.next).prev = l.prev;
    if (--s.count == 0) release(i);
  }

  // Another vertex in v's bucket; the bucket must hold at least two.
  Vertex partner(Fingerprint key, Vertex v) const {
    Vertex h = slots_[find(key)].head;
    return h != v ? h : state_[h].link[which_].next;
  }

  // Smallest live vertex sharing its bucket, if any.
  template <class KeyOf>
  std::optional<Vertex> smallest(KeyOf key_of) {
    while (!heap_.empty()) {
      Vertex v = heap_.front();
      if (state_[v].alive && slots_[find(key_of(v))].count >= 2) return v;
      state_[v].queued[which_] = false;
      std::pop_heap(heap_.begin(), heap_.end(), std::greater<>());
      heap_.pop_back();
    }
    return std::nullopt;
  }

 private:
  struct Slot {
    Fingerprint key = 0;
    Vertex head = -1;
    int count = 0;  // 0 marks an empty slot
  };

  BucketLink& link(Vertex v) { return state_[v].link[which_]; }

  void push(Vertex v) {
    if (state_[v].queued[which_]) return;
    state_[v].queued[which_] = true;
    heap_.push_back(v);
    std::push_heap(heap_.begin(), heap_.end(), std::greater<>());
  }

  std::size_t home(Fingerprint key) const { return static_cast<std::size_t>(key) & mask_; }

  std::size_t find(Fingerprint key) const {
    std::size_t i = home(key);
    while (!(slots_[i].count > 0 && slots_[i].key == key)) i = (i + 1) & mask_;
    return i;
  }

  std::size_t find_or_claim(Fingerprint key) {
    std::size_t i = home(key);
    while (slots_[i].count > 0) {
      if (slots_[i].key == key) return i;
      i = (i + 1) & mask_;
    }
    slots_[i].key = key;
    slots_[i].head = -1;
    return i;
  }

  // Backward-shift deletion keeps probe runs contiguous.
  void release(std::size_t i) {
    slots_[i].count = 0;
    std::size_t j = i;
    while (true) {
      j = (j + 1) & mask_;
      if (slots_[j].count == 0) return;
      std::size_t h = home(slots_[j].key);
      // Move slot j into the hole when its home does not lie in (i, j].
      if (((j - h) & mask_) >= ((j - i) & mask_)) {
        slots_[i] = slots_[j];
        slots_[j].count = 0;
        i = j;
      }
    }
  }

  std::vector<PruneState>& state_;
  int which_;
  std::vector<Slot> slots_;
  std::size_t mask_ = 0;
  std::vector<Vertex> heap_;
};

class Pruner {
 public:
  explicit Pruner(const Graph& g)
      : g_(g), n_(g.order()), state_(g.order()), open_index_(state_, 0), closed_index_(state_, 1) {
    if (2 * g.size() > std::numeric_limits<std::uint32_t>::max()) {
      throw InputError("graph too large for the recognizer");
    }
    start_.resize(n_ + 1);
    end_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) start_[v + 1] = start_[v] + g.degree(v);
    flat_.resize(start_[n_]);
    stamp_.assign(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      auto nbrs = g.neighbors(v);
      std::copy(nbrs.begin(), nbrs.end(), flat_.begin() + start_[v]);
      end_[v] = start_[v] + nbrs.size();
      state_[v].degree = static_cast<int>(nbrs.size());
      for (Vertex w : nbrs) state_[v].open += key(w);
    }
    for (Vertex v = 0; v < n_; ++v) {
      index(v);
      queue_pendant(v);
    }
  }

  DhRecognition run() {
    PruningSequence seq;
    seq.order = n_;
    seq.steps.reserve(n_ - 1);
    int alive_count = n_;
    while (alive_count > 1) {
      auto step = next_step();
      if (!step) break;
      seq.steps.push_back(*step);
      remove(step->removed);
      --alive_count;
    }
    DhRecognition out;
    for (Vertex v = 0; v < n_; ++v) {
      if (state_[v].alive) out.remainder.push_back(v);
    }
    if (alive_count == 1) {
      seq.root = out.remainder.front();
      out.remainder.clear();
      out.sequence = std::move(seq);
      return out;
    }
    out.remainder_graph = induced_subgraph(g_, out.remainder);
    return out;
  }

 private:
  // splitmix64 of the id: a random-looking key without storing one.
  static Fingerprint key(Vertex v) {
    std::uint64_t z = static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  Fingerprint closed(Vertex v) const { return state_[v].open + key(v); }

  // Isolated vertices stay out of the open index: as false twins of each
  // other they would let a disconnected graph prune down to one vertex.
  void index(Vertex v) {
    if (state_[v].degree > 0) open_index_.insert(state_[v].open, v);
    closed_index_.insert(closed(v), v);
  }

  void queue_pendant(Vertex v) {
    if (state_[v].degree != 1 || state_[v].queued[2]) return;
    state_[v].queued[2] = true;
    pendants_.push_back(v);
    std::push_heap(pendants_.begin(), pendants_.end(), std::greater<>());
  }

  // The twin indices only matter once no pendant is left, so vertices whose
  // fingerprint changed are re-indexed in one batch before they are queried.
  void flush() {
    for (Vertex v : dirty_) {
      state_[v].dirty = false;
      if (state_[v].alive) index(v);
    }
    dirty_.clear();
  }

  void unindex(Vertex v) {
    if (state_[v].degree > 0) open_index_.erase(state_[v].open, v);
    closed_index_.erase(closed(v), v);
  }

  // Live neighbours of v; dead entries are compacted away as they are met.
  std::span<const Vertex> live_neighbors(Vertex v) {
    auto first = flat_.begin() + start_[v];
    auto last = std::remove_if(first, flat_.begin() + end_[v],
                               [&](Vertex w) { return !state_[w].alive; });
    end_[v] = static_cast<std::uint32_t>(last - flat_.begin());
    return {flat_.data() + start_[v], end_[v] - start_[v]};
  }

  std::optional<PruningStep> next_step() {
    while (!pendants_.empty()) {
      Vertex x = pendants_.front();
      if (state_[x].alive && state_[x].degree == 1) {
        return PruningStep{PruningKind::Pendant, x, live_neighbors(x).front()};
      }
      state_[x].queued[2] = false;
      std::pop_heap(pendants_.begin(), pendants_.end(), std::greater<>());
      pendants_.pop_back();
    }
    flush();
    if (auto x = closed_index_.smallest([&](Vertex v) { return closed(v); })) {
      Vertex y = closed_index_.partner(closed(*x), *x);
      verify_twins(*x, y, true);
      return PruningStep{PruningKind::TrueTwin, *x, y};
    }
    if (auto x = open_index_.smallest([&](Vertex v) { return state_[v].open; })) {
      Vertex y = open_index_.partner(state_[*x].open, *x);
      verify_twins(*x, y, false);
      return PruningStep{PruningKind::FalseTwin, *x, y};
    }
    return std::nullopt;
  }

  void verify_twins(Vertex x, Vertex y, bool adjacent) {
    ++epoch_;
    std::size_t ny = 0;
    bool saw_x = false;
    for (Vertex w : live_neighbors(y)) {
      if (w == x) {
        saw_x = true;
        continue;
      }
      stamp_[w] = epoch_;
      ++ny;
    }
    std::size_t nx = 0;
    bool ok = saw_x == adjacent;
    for (Vertex w : live_neighbors(x)) {
      if (w == y) continue;
      ok = ok && stamp_[w] == epoch_;
      ++nx;
    }
    if (!ok || nx != ny) {
      throw std::logic_error("neighbourhood fingerprint collision between vertices " +
                             std::to_string(x) + " and " + std::to_string(y));
    }
  }

  void remove(Vertex x) {
    if (!state_[x].dirty) unindex(x);
    state_[x].alive = false;
    const Fingerprint kx = key(x);
    for (Vertex u : live_neighbors(x)) {
      PruneState& su = state_[u];
      if (!su.dirty) {
        unindex(u);
        su.dirty = true;
        dirty_.push_back(u);
      }
      su.open -= kx;
      --su.degree;
      queue_pendant(u);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<PruneState> state_;
  std::vector<std::uint32_t> start_, end_;  // live neighbours of v: flat_[start_[v], end_[v])
  std::vector<Vertex> flat_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  TwinIndex open_index_;
  TwinIndex closed_index_;
  std::vector<Vertex> pendants_;  // lazy min-heap of degree-1 candidates
  std::vector<Vertex> dirty_;
};

using Mask = std::uint64_t;

// Adjacency masks and all-pairs distances for the bitmask engines.
struct DenseGraph {
  int n = 0;
  std::vector<Mask> nbr;
  std::vector<std::vector<int>> dist;

  explicit DenseGraph(const Graph& g) : n(g.order()), nbr(n, 0) {
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : g.neighbors(v)) nbr[v] |= Mask{1} << w;
    }
    dist.reserve(n);
    for (Vertex v = 0; v < n; ++v) dist.push_back(bfs_distances(g, v));
  }

  // Every pair in `set` is set-visible.
  bool mutually_visible(Mask set) const {
    std::vector<int> level(n);
    for (Mask rest = set; rest;) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      if (!rest) break;
      // Restricted BFS: members of `set` other than u are reached, never expanded.
      Mask visited = Mask{1} << u;
      Mask frontier = visited;
      Mask pending = rest;  // members after u still to be checked
      int d = 0;
      while (frontier && pending) {
        ++d;
        Mask next = 0;
        for (Mask f = frontier & ~(set & ~(Mask{1} << u)); f; f &= f - 1) {
          next |= nbr[std::countr_zero(f)];
        }
        next &= ~visited;
        visited |= next;
        for (Mask hit = next & pending; hit; hit &= hit - 1) {
          int v = std::countr_zero(hit);
          if (dist[u][v] != d) return false;
          pending &= ~(Mask{1} << v);
        }
        frontier = next;
      }
      if (pending) return false;
    }
    return true;
  }
};

void require_cap(const Graph& g, int n_cap) {
  if (n_cap > kMaxOracleOrder) {
    throw CapExceededError("oracle cap " + std::to_string(n_cap) + " exceeds the supported " +
                           std::to_string(kMaxOracleOrder));
  }
  if (g.order() > n_cap) {
    throw CapExceededError("graph has " + std::to_string(g.order()) +
                           " vertices, above the oracle cap of " + std::to_string(n_cap));
  }
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraphError("graph is not connected");
}

// Visits the k-subsets of `pool` whose first element is pool[first], in
// lexicographic order, until `accept` returns true.
std::optional<Mask> first_subset_with_head(const std::vector<Vertex>& pool, int k, int first,
                                           const std::function<bool(Mask)>& accept,
                                           const std::atomic<int>* cutoff) {
  const int p = static_cast<int>(pool.size());
  if (first + k > p) return std::nullopt;
  std::vector<int> idx(k);
  idx[0] = first;
  for (int i = 1; i < k; ++i) idx[i] = first + i;
  while (true) {
    if (cutoff && cutoff->load(std::memory_order_relaxed) < first) return std::nullopt;
    Mask m = 0;
    for (int i : idx) m |= Mask{1} << pool[i];
    if (accept(m)) return m;
    int i = k - 1;
    while (i >= 1 && idx[i] == p - k + i) --i;
    if (i < 1) return std::nullopt;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::optional<Mask> first_subset(const std::vector<Vertex>& pool, int k,
                                 const std::function<bool(Mask)>& accept, int jobs) {
  const int p = static_cast<int>(pool.size());
  if (k == 0) return accept(0) ? std::optional<Mask>(0) : std::nullopt;
  if (jobs <= 1) {
    for (int first = 0; first + k <= p; ++first) {
      if (auto m = first_subset_with_head(pool, k, first, accept, nullptr)) return m;
    }
    return std::nullopt;
  }
  // Worker j takes leading elements j, j+jobs, ...; the smallest leading
  // element with a hit is the lexicographic minimum.
  std::atomic<int> best_first{p};
  std::vector<std::optional<Mask>> found(p);
  std::vector<std::thread> workers;
  for (int j = 0; j < jobs; ++j) {
    workers.emplace_back([&, j] {
      for (int first = j; first + k <= p; first += jobs) {
        if (best_first.load() < first) return;
        if (auto m = first_subset_with_head(pool, k, first, accept, &best_first)) {
          found[first] = m;
          int cur = best_first.load();
          while (first < cur && !best_first.compare_exchange_weak(cur, first)) {
          }
          return;
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  for (int first = 0; first < p; ++first) {
    if (found[first]) return found[first];
  }
  return std::nullopt;
}

VertexSet to_set(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return VertexSet(std::move(out));
}

}  // namespace

// Every pruning step removes a vertex with a neighbour that stays behind, so
// the number of components never changes; acceptance implies connectivity and
// only a rejection needs the explicit check.
DhRecognition recognize_dh(const Graph& g) {
  if (g.order() == 0) throw InputError("empty graph");
  DhRecognition rec = Pruner(g).run();
  if (!rec.accepted()) require_connected(g);
  return rec;
}

bool is_dh_metric(const Graph& g, int n_cap) {
  require_cap(g, n_cap);
  require_connected(g);
  const DenseGraph dense(g);
  const int n = g.order();
  const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (Mask sub = 1; sub <= full && sub != 0; ++sub) {
    if (std::popcount(sub) < 3) continue;
    for (Mask rest = sub; rest; rest &= rest - 1) {
      int s = std::countr_zero(rest);
      // BFS inside the induced subgraph.
      Mask visited = Mask{1} << s;
      Mask frontier = visited;
      int d = 0;
      bool isometric = true;
      while (frontier) {
        ++d;
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= dense.nbr[std::countr_zero(f)];
        next &= sub & ~visited;
        for (Mask hit = next; hit; hit &= hit - 1) {
          if (dense.dist[s][std::countr_zero(hit)] != d) isometric = false;
        }
        visited |= next;
        frontier = next;
      }
      if (visited != sub) break;  // disconnected induced subgraph: no constraint
      if (!isometric) return false;
    }
    if (sub == full) break;
  }
  return true;
}

BruteForceResult mu_bruteforce(const Graph& g, int n_cap, int jobs) {
  require_cap(g, n_cap);
  if (g.order() == 0) return {};
  require_connected(g);
  const DenseGraph dense(g);
  std::vector<Vertex> pool(g.order());
  for (Vertex v = 0; v < g.order(); ++v) pool[v] = v;
  auto accept = [&](Mask m) { return dense.mutually_visible(m); };
  for (int k = g.order(); k >= 1; --k) {
    if (auto m = first_subset(pool, k, accept, jobs)) return {k, to_set(*m)};
  }
  return {};
}

AvoidingResult mu_set_avoiding(const Graph& g, const VertexSet& forbidden, int n_cap) {
  require_cap(g, n_cap);
  if (g.order() == 0) return {};
  require_connected(g);
  const DenseGraph dense(g);
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!forbidden.contains(v)) pool.push_back(v);
  }
  auto accept = [&](Mask m) { return dense.mutually_visible(m); };
  for (int k = static_cast<int>(pool.size()); k >= 1; --k) {
    if (auto m = first_subset(pool, k, accept, 1)) return {k, to_set(*m)};
  }
  return {};
}

}  // namespace mutvis
