#include "pig/mis.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <string>

namespace pig {

namespace {

// Fixed-width bitset; W * 64 vertices at most.
template <int W>
struct FixedBits {
  std::array<std::uint64_t, W> w{};

  explicit FixedBits(int = 0) {}
  void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(int i) const { return w[i >> 6] >> (i & 63) & 1ULL; }
  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  int first() const {
    for (int k = 0; k < W; ++k)
      if (w[k]) return k * 64 + std::countr_zero(w[k]);
    return -1;
  }
  int next(int i) const {
    ++i;
    int k = i >> 6;
    if (k >= W) return -1;
    std::uint64_t x = w[k] & (~0ULL << (i & 63));
    while (true) {
      if (x) return k * 64 + std::countr_zero(x);
      if (++k >= W) return -1;
      x = w[k];
    }
  }
  int and_count(const FixedBits& o) const {
    int c = 0;
    for (int k = 0; k < W; ++k) c += std::popcount(w[k] & o.w[k]);
    return c;
  }
  FixedBits operator&(const FixedBits& o) const {
    FixedBits r;
    for (int k = 0; k < W; ++k) r.w[k] = w[k] & o.w[k];
    return r;
  }
  FixedBits andnot(const FixedBits& o) const {
    FixedBits r;
    for (int k = 0; k < W; ++k) r.w[k] = w[k] & ~o.w[k];
    return r;
  }
};

// Heap-backed bitset for larger graphs.
struct DynBits {
  std::vector<std::uint64_t> w;

  explicit DynBits(int n = 0) : w(static_cast<std::size_t>((n + 63) / 64), 0) {}
  void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(int i) const { return w[i >> 6] >> (i & 63) & 1ULL; }
  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  int first() const { return next(-1); }
  int next(int i) const {
    ++i;
    std::size_t k = static_cast<std::size_t>(i >> 6);
    if (k >= w.size()) return -1;
    std::uint64_t x = w[k] & (~0ULL << (i & 63));
    while (true) {
      if (x) return static_cast<int>(k * 64) + std::countr_zero(x);
      if (++k >= w.size()) return -1;
      x = w[k];
    }
  }
  int and_count(const DynBits& o) const {
    int c = 0;
    for (std::size_t k = 0; k < w.size(); ++k) c += std::popcount(w[k] & o.w[k]);
    return c;
  }
  DynBits operator&(const DynBits& o) const {
    DynBits r = *this;
    for (std::size_t k = 0; k < w.size(); ++k) r.w[k] &= o.w[k];
    return r;
  }
  DynBits andnot(const DynBits& o) const {
    DynBits r = *this;
    for (std::size_t k = 0; k < w.size(); ++k) r.w[k] &= ~o.w[k];
    return r;
  }
};

template <class Bits>
class Solver {
 public:
  Solver(const EmbeddedGraph& g, std::span<const Vertex> ids, std::uint64_t budget)
      : ids_(ids.begin(), ids.end()), n_(static_cast<int>(ids_.size())), budget_(budget) {
    std::vector<int> local(g.capacity(), -1);
    for (int i = 0; i < n_; ++i) local[ids_[i]] = i;
    adj_.assign(n_, Bits(n_));
    closed_.assign(n_, Bits(n_));
    for (int i = 0; i < n_; ++i) {
      closed_[i].set(i);
      for (Vertex u : g.rotation(ids_[i]))
        if (local[u] >= 0) {
          adj_[i].set(local[u]);
          closed_[i].set(local[u]);
        }
    }
  }

  Bits all() const {
    Bits p(n_);
    for (int i = 0; i < n_; ++i) p.set(i);
    return p;
  }

  // Maximum size of an independent set inside p, stopping early at `stop`.
  int max_size(const Bits& p, int stop) {
    best_ = 0;
    stop_ = stop;
    search(p, 0);
    return best_;
  }

  bool at_least(const Bits& p, int k) {
    if (k <= 0) return true;
    best_ = k - 1;
    stop_ = k;
    search(p, 0);
    return best_ >= k;
  }

  VertexSet lexmin_optimum() {
    Bits p = all();
    int target = max_size(p, n_ + 1);
    VertexSet out;
    for (int v = p.first(); v >= 0 && target > 0; v = p.next(v)) {
      Bits rest = p.andnot(closed_[v]);
      if (at_least(rest, target - 1)) {
        out.push_back(ids_[v]);
        --target;
        p = rest;
      } else {
        p.reset(v);
      }
    }
    return out;
  }

 private:
  void tick() {
    if (++nodes_ > budget_)
      throw BudgetExceeded("independent-set oracle exceeded " + std::to_string(budget_) + " branch nodes");
  }

  // Greedy clique cover of p: an upper bound on alpha(G[p]).
  int clique_cover(Bits p) const {
    int cliques = 0;
    while (p.any()) {
      int v = p.first();
      Bits cand = p & adj_[v];
      p.reset(v);
      while (cand.any()) {
        int u = cand.first();
        p.reset(u);
        cand = cand & adj_[u];
      }
      ++cliques;
    }
    return cliques;
  }

  bool done() const { return best_ >= stop_; }

  void search(Bits p, int size) {
    tick();
    // Degree <= 1 vertices belong to some maximum independent set.
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = p.first(); v >= 0; v = p.next(v))
        if (p.and_count(adj_[v]) <= 1) {
          p = p.andnot(closed_[v]);
          ++size;
          changed = true;
          break;
        }
    }
    if (!p.any()) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + clique_cover(p) <= best_) return;
    int pivot = -1, pivot_deg = -1;
    for (int v = p.first(); v >= 0; v = p.next(v)) {
      int d = p.and_count(adj_[v]);
      if (d > pivot_deg) {
        pivot_deg = d;
        pivot = v;
      }
    }
    search(p.andnot(closed_[pivot]), size + 1);
    if (done()) return;
    Bits q = p;
    q.reset(pivot);
    search(q, size);
  }

  std::vector<Vertex> ids_;
  int n_;
  std::vector<Bits> adj_, closed_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int best_ = 0;
  int stop_ = 0;
};

VertexSet checked_subset(const EmbeddedGraph& g, std::span<const Vertex> subset) {
  VertexSet ids(subset.begin(), subset.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (Vertex v : ids)
    if (!g.alive(v)) throw GraphError(GraphErrorKind::bad_vertex, "unknown vertex id " + std::to_string(v + 1));
  return ids;
}

template <class F>
auto dispatch(const EmbeddedGraph& g, std::span<const Vertex> ids, std::uint64_t budget, F&& f) {
  const std::size_t n = ids.size();
  if (n <= 64) {
    Solver<FixedBits<1>> s(g, ids, budget);
    return f(s);
  }
  if (n <= 256) {
    Solver<FixedBits<4>> s(g, ids, budget);
    return f(s);
  }
  Solver<DynBits> s(g, ids, budget);
  return f(s);
}

}  // namespace

std::uint64_t default_oracle_budget() {
  if (const char* env = std::getenv("PIG_ORACLE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000ULL;
}

VertexSet mis_exact(const EmbeddedGraph& g, std::uint64_t budget) {
  auto vs = g.vertices();
  return mis_exact(g, vs, budget);
}

VertexSet mis_exact(const EmbeddedGraph& g, std::span<const Vertex> subset, std::uint64_t budget) {
  auto ids = checked_subset(g, subset);
  return dispatch(g, ids, budget, [](auto& s) { return s.lexmin_optimum(); });
}

int alpha(const EmbeddedGraph& g, std::span<const Vertex> subset, std::uint64_t budget) {
  auto ids = checked_subset(g, subset);
  const int n = static_cast<int>(ids.size());
  return dispatch(g, ids, budget, [n](auto& s) { return s.max_size(s.all(), n + 1); });
}

bool alpha_at_least(const EmbeddedGraph& g, int k, std::uint64_t budget) {
  auto vs = g.vertices();
  return alpha_at_least(g, vs, k, budget);
}

bool alpha_at_least(const EmbeddedGraph& g, std::span<const Vertex> subset, int k, std::uint64_t budget) {
  auto ids = checked_subset(g, subset);
  if (k > static_cast<int>(ids.size())) return false;
  return dispatch(g, ids, budget, [k](auto& s) { return s.at_least(s.all(), k); });
}

bool verify_independent(const EmbeddedGraph& g, std::span<const Vertex> s) {
  for (Vertex v : s)
    if (!g.alive(v)) throw GraphError(GraphErrorKind::bad_vertex, "unknown vertex id " + std::to_string(v + 1));
  std::vector<char> in(g.capacity(), 0);
  for (Vertex v : s) {
    if (in[v]) return false;
    in[v] = 1;
  }
  for (Vertex v : s)
    for (Vertex u : g.rotation(v))
      if (in[u]) return false;
  return true;
}

}  // namespace pig
