#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "pig/reduce.hpp"

namespace pig {

namespace {

std::string ids(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

VertexSet sorted_unique(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool sets_adjacent(const EmbeddedGraph& g, const VertexSet& a, const VertexSet& b) {
  for (Vertex u : a)
    for (Vertex v : g.rotation(u))
      if (std::binary_search(b.begin(), b.end(), v)) return true;
  return false;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Subsets of {0..t-1} whose parts are pairwise non-adjacent, as bitmasks.
std::vector<std::uint32_t> admissible_subsets(int t, const std::vector<std::uint32_t>& part_adj) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < (1u << t); ++x) {
    bool ok = true;
    for (int i = 0; i < t && ok; ++i)
      if ((x >> i & 1u) && (part_adj[i] & x)) ok = false;
    if (ok) out.push_back(x);
  }
  return out;
}

}  // namespace

Ratio Ratio::make(long long a, long long b) {
  if (a <= 0 || b <= 0 || a >= b) throw std::invalid_argument("ratio must satisfy 0 < a/b < 1");
  long long g = std::gcd(a, b);
  return Ratio{a / g, b / g};
}

Ratio Ratio::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) throw std::invalid_argument("ratio must look like a/b: " + text);
  try {
    std::size_t pa = 0, pb = 0;
    long long a = std::stoll(text.substr(0, slash), &pa);
    long long b = std::stoll(text.substr(slash + 1), &pb);
    if (pa != slash || pb != text.size() - slash - 1) throw std::invalid_argument(text);
    return make(a, b);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("ratio must look like a/b: " + text);
  }
}

std::string Ratio::str() const { return std::to_string(a) + "/" + std::to_string(b); }

long long Ratio::ceil_of(long long n) const {
  long long p = a * n;
  return p >= 0 ? (p + b - 1) / b : -((-p) / b);
}

long long crunch_bound(long long j, const Ratio& c) { return ((c.b - c.a) * j) / c.a + 2; }

const char* plan_kind_name(PlanKind k) {
  switch (k) {
    case PlanKind::delete_closed_nbhd: return "delete-closed-nbhd";
    case PlanKind::ind_red_contract: return "ind-red-contract";
    case PlanKind::uber_red: return "uber-red";
    case PlanKind::split: return "split";
  }
  return "?";
}

std::optional<PlanKind> plan_kind_from_name(const std::string& s) {
  for (PlanKind k : {PlanKind::delete_closed_nbhd, PlanKind::ind_red_contract, PlanKind::uber_red, PlanKind::split})
    if (s == plan_kind_name(k)) return k;
  return std::nullopt;
}

CertifiedPlan certify_plan(const EmbeddedGraph& g, ReductionPlan plan, std::uint64_t budget) {
  auto reject = [&](const std::string& why) {
    throw PlanError("plan rejected (" + plan.provenance + "): " + why);
  };
  if (plan.kind == PlanKind::split) reject("split plans are certified by split_plan");
  plan.S = sorted_unique(plan.S);
  if (plan.S.empty()) reject("S is empty");
  for (Vertex v : plan.S)
    if (!g.alive(v)) reject("S names unknown vertex " + std::to_string(v + 1));
  const int t = plan.t();
  if (t >= static_cast<int>(plan.S.size())) reject("needs t < |S|");
  if (t > 20) reject("too many parts");
  std::vector<char> used(g.capacity(), 0);
  for (auto& part : plan.parts) {
    part = sorted_unique(part);
    if (part.empty()) reject("empty part");
    for (Vertex v : part) {
      if (!std::binary_search(plan.S.begin(), plan.S.end(), v)) reject("part leaves S");
      if (used[v]) reject("parts overlap");
      used[v] = 1;
    }
    if (!induces_connected(g, part)) reject("part " + ids(part) + " is not connected");
  }
  if (plan.kind == PlanKind::delete_closed_nbhd && t != 0) reject("deletion plans have no parts");
  if (plan.kind == PlanKind::ind_red_contract) {
    plan.J = sorted_unique(plan.J);
    if (!verify_independent(g, plan.J)) reject("J is not independent");
    auto nj = open_neighborhood(g, plan.J);
    if (set_union(plan.J, nj) != plan.S) reject("ind-red needs S = J ∪ N(J)");
    if (plan.k != static_cast<int>(plan.J.size()) - t) reject("ind-red needs t = |J| - k");
    for (const auto& part : plan.parts) {
      if (part.size() != 3) reject("ind-red parts have three vertices");
      bool shaped = false;
      for (Vertex x : part) {
        if (!std::binary_search(plan.J.begin(), plan.J.end(), x)) continue;
        VertexSet pair;
        for (Vertex y : part)
          if (y != x) pair.push_back(y);
        if (!g.adjacent(x, pair[0]) || !g.adjacent(x, pair[1]) || g.adjacent(pair[0], pair[1])) continue;
        bool priv = true;
        for (Vertex z : plan.J)
          if (z != x && (g.adjacent(z, pair[0]) || g.adjacent(z, pair[1]))) priv = false;
        shaped = priv;
      }
      if (!shaped) reject("part " + ids(part) + " is not {x, u_x, v_x} with a private independent pair");
    }
  }
  plan.interior = interior(g, plan.S);

  std::vector<std::uint32_t> part_adj(t, 0);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      if (i != j && sets_adjacent(g, plan.parts[i], plan.parts[j])) part_adj[i] |= 1u << j;

  const long long gain = plan.gain();
  const long long n = g.vertex_count();
  const long long n_red = n - static_cast<long long>(plan.S.size()) + t;
  if (plan.c.ceil_of(n_red) + gain < plan.c.ceil_of(n)) reject("size arithmetic fails");

  CertifiedPlan out;
  for (std::uint32_t x : admissible_subsets(t, part_adj)) {
    VertexSet window = plan.interior;
    std::vector<int> X;
    for (int i = 0; i < t; ++i)
      if (x >> i & 1u) {
        X.push_back(i);
        window = set_union(window, plan.parts[i]);
      }
    const int a = alpha(g, window, budget);
    const long long need = static_cast<long long>(X.size()) + gain;
    if (a < need) {
      std::ostringstream msg;
      msg << "alpha of window for X = {";
      for (std::size_t i = 0; i < X.size(); ++i) msg << (i ? "," : "") << X[i] + 1;
      msg << "} is " << a << " < " << need;
      reject(msg.str());
    }
    out.checks.push_back({std::move(X), a, need});
  }
  out.plan = std::move(plan);
  return out;
}

AppliedPlan apply_plan(const EmbeddedGraph& g, const CertifiedPlan& cp) {
  const auto& p = cp.plan;
  AppliedPlan out;
  out.ctx.kind = p.kind;
  out.ctx.original = std::make_shared<const EmbeddedGraph>(g);
  out.ctx.parts = p.parts;
  out.ctx.interior = p.interior;
  out.ctx.c = p.c;
  out.ctx.n = g.vertex_count();
  out.ctx.gain = p.gain();
  VertexSet in_parts;
  for (const auto& part : p.parts) in_parts = set_union(in_parts, part);
  out.ctx.deleted = set_minus(p.S, in_parts);
  EmbeddedGraph h = delete_set(g, out.ctx.deleted);
  for (const auto& part : p.parts) {
    auto [next, w] = contract_set(h, part);
    h = std::move(next);
    out.ctx.contracted.push_back(w);
  }
  if (h.vertex_count() >= 3 && h.connected() && !h.is_triangulation()) {
    auto tr = triangulate(h);
    out.ctx.added_edges = std::move(tr.added_edges);
    h = std::move(tr.graph);
  }
  out.ctx.n_reduced = h.vertex_count();
  out.reduced = std::move(h);
  return out;
}

LiftResult lift(const VertexSet& reduced_set, const LiftContext& ctx, std::uint64_t budget) {
  LiftResult r;
  VertexSet window = ctx.interior;
  VertexSet kept;
  for (Vertex v : reduced_set) {
    auto it = std::find(ctx.contracted.begin(), ctx.contracted.end(), v);
    if (it == ctx.contracted.end()) {
      kept.push_back(v);
      continue;
    }
    r.W.push_back(v);
    window = set_union(window, ctx.parts[static_cast<std::size_t>(it - ctx.contracted.begin())]);
  }
  r.T = mis_exact(*ctx.original, window, budget);
  r.set = sorted_unique(set_union(sorted_unique(kept), r.T));
  const long long need = static_cast<long long>(reduced_set.size()) + ctx.gain;
  bool independent = false;
  try {
    independent = verify_independent(*ctx.original, r.set);
  } catch (const GraphError&) {
    independent = false;
  }
  if (!independent) throw LiftError("lift produced a dependent set " + ids(r.set));
  if (static_cast<long long>(r.set.size()) < need)
    throw LiftError("lift produced " + std::to_string(r.set.size()) + " vertices, expected at least " +
                    std::to_string(need) + " (W = " + ids(r.W) + ", T = " + ids(r.T) + ")");
  return r;
}

std::vector<LiftResult> lift_every_w(const EmbeddedGraph& reduced, const VertexSet& reduced_set,
                                     const LiftContext& ctx, std::uint64_t budget) {
  const int t = static_cast<int>(ctx.contracted.size());
  std::vector<LiftResult> out;
  VertexSet base;
  for (Vertex v : reduced_set)
    if (std::find(ctx.contracted.begin(), ctx.contracted.end(), v) == ctx.contracted.end()) base.push_back(v);
  for (std::uint32_t x = 0; x < (1u << t); ++x) {
    VertexSet W;
    for (int i = 0; i < t; ++i)
      if (x >> i & 1u) W.push_back(ctx.contracted[i]);
    bool ok = true;
    for (std::size_t i = 0; i < W.size() && ok; ++i)
      for (std::size_t j = i + 1; j < W.size() && ok; ++j)
        if (reduced.adjacent(W[i], W[j])) ok = false;
    if (!ok) continue;
    VertexSet input;
    for (Vertex v : base) {
      bool clash = false;
      for (Vertex w : W)
        if (reduced.adjacent(v, w)) clash = true;
      if (!clash) input.push_back(v);
    }
    input = sorted_unique(set_union(input, sorted_unique(W)));
    out.push_back(lift(input, ctx, budget));
  }
  return out;
}

std::optional<ReductionPlan> find_low_degree_plan(const EmbeddedGraph& g, const Ratio& c) {
  Vertex v = -1;
  for (Vertex u : g.vertices())
    if (v < 0 || g.degree(u) < g.degree(v)) v = u;
  if (v < 0) return std::nullopt;
  const auto& nb = g.rotation(v);
  const int d = g.degree(v);
  VertexSet closed(nb.begin(), nb.end());
  closed.push_back(v);
  std::sort(closed.begin(), closed.end());

  VertexSet sorted_nb(nb.begin(), nb.end());
  std::sort(sorted_nb.begin(), sorted_nb.end());
  std::optional<std::pair<Vertex, Vertex>> pair;
  for (std::size_t i = 0; i < sorted_nb.size() && !pair; ++i)
    for (std::size_t j = i + 1; j < sorted_nb.size() && !pair; ++j)
      if (!g.adjacent(sorted_nb[i], sorted_nb[j])) pair = {sorted_nb[i], sorted_nb[j]};

  ReductionPlan p;
  p.c = c;
  p.S = closed;
  p.J = {v};
  if (!pair) {
    if (c.ceil_of(d + 1) > 1) return std::nullopt;
    p.kind = PlanKind::delete_closed_nbhd;
    p.provenance = "low-degree: clique neighborhood of " + std::to_string(v + 1);
    p.k = 1;
  } else {
    if (c.ceil_of(d) > 1) return std::nullopt;
    p.kind = PlanKind::ind_red_contract;
    p.parts = {sorted_unique({v, pair->first, pair->second})};
    p.provenance = "low-degree: ind-red at " + std::to_string(v + 1);
    p.k = 0;
  }
  const long long n = g.vertex_count();
  if (c.ceil_of(n - static_cast<long long>(p.S.size()) + p.t()) + p.gain() < c.ceil_of(n)) return std::nullopt;
  return p;
}

// --- plan search for one J ------------------------------------------------

namespace {

// Exact alpha and connectivity for every subset of a small vertex set.
struct LocalTables {
  VertexSet verts;
  std::vector<std::uint32_t> adj;
  std::vector<std::uint8_t> alpha;
  std::vector<std::uint8_t> conn;
  std::uint32_t full = 0;
  std::uint32_t interior = 0;

  int index(Vertex v) const {
    auto it = std::lower_bound(verts.begin(), verts.end(), v);
    return static_cast<int>(it - verts.begin());
  }
  std::uint32_t mask_of(const VertexSet& s) const {
    std::uint32_t m = 0;
    for (Vertex v : s) m |= 1u << index(v);
    return m;
  }
  VertexSet set_of(std::uint32_t m) const {
    VertexSet out;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
      if (m >> i & 1u) out.push_back(verts[i]);
    return out;
  }
  bool touches(std::uint32_t a, std::uint32_t b) const {
    for (std::uint32_t x = a; x; x &= x - 1)
      if (adj[std::countr_zero(x)] & b) return true;
    return false;
  }
};

LocalTables build_tables(const EmbeddedGraph& g, const VertexSet& S) {
  LocalTables t;
  t.verts = S;
  const int s = static_cast<int>(S.size());
  t.adj.assign(s, 0);
  for (int i = 0; i < s; ++i)
    for (Vertex u : g.rotation(S[i])) {
      auto it = std::lower_bound(S.begin(), S.end(), u);
      if (it != S.end() && *it == u) t.adj[i] |= 1u << (it - S.begin());
    }
  t.full = s == 32 ? ~0u : (1u << s) - 1;
  const std::size_t n = std::size_t{1} << s;
  t.alpha.assign(n, 0);
  t.conn.assign(n, 0);
  for (std::uint32_t m = 1; m < n; ++m) {
    int low = std::countr_zero(m);
    std::uint32_t without = m & ~(1u << low);
    std::uint32_t apart = without & ~t.adj[low];
    t.alpha[m] = static_cast<std::uint8_t>(std::max<int>(t.alpha[without], 1 + t.alpha[apart]));
    std::uint32_t seen = 1u << low, frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t x = frontier; x; x &= x - 1) next |= t.adj[std::countr_zero(x)];
      next &= m & ~seen;
      seen |= next;
      frontier = next;
    }
    t.conn[m] = seen == m;
  }
  t.interior = t.mask_of(interior(g, S));
  return t;
}

// Table-level version of the certification condition for covering parts.
bool parts_pass(const LocalTables& tb, const std::vector<std::uint32_t>& parts, long long gain) {
  const int t = static_cast<int>(parts.size());
  for (std::uint32_t x = 0; x < (1u << t); ++x) {
    std::uint32_t window = tb.interior;
    bool ok = true;
    for (int i = 0; i < t && ok; ++i) {
      if (!(x >> i & 1u)) continue;
      for (int j = i + 1; j < t && ok; ++j)
        if ((x >> j & 1u) && tb.touches(parts[i], parts[j])) ok = false;
      window |= parts[i];
    }
    if (!ok) continue;
    if (tb.alpha[window] < std::popcount(x) + gain) return false;
  }
  return true;
}

std::optional<CertifiedPlan> try_certify(const EmbeddedGraph& g, ReductionPlan p, std::uint64_t budget) {
  try {
    return certify_plan(g, std::move(p), budget);
  } catch (const PlanError&) {
    return std::nullopt;
  }
}

// Lexicographically smallest non-adjacent pair in N(x) \ N(J - x).
std::optional<std::pair<Vertex, Vertex>> private_pair(const EmbeddedGraph& g, Vertex x, const VertexSet& J) {
  VertexSet priv;
  for (Vertex u : g.rotation(x)) {
    bool shared = false;
    for (Vertex y : J)
      if (y != x && g.adjacent(y, u)) shared = true;
    if (!shared) priv.push_back(u);
  }
  std::sort(priv.begin(), priv.end());
  for (std::size_t i = 0; i < priv.size(); ++i)
    for (std::size_t j = i + 1; j < priv.size(); ++j)
      if (!g.adjacent(priv[i], priv[j])) return std::make_pair(priv[i], priv[j]);
  return std::nullopt;
}

constexpr int kMaxLocal = 20;

}  // namespace

std::optional<CertifiedPlan> plan_for_set(const EmbeddedGraph& g, const VertexSet& J_in, const Ratio& c,
                                          const std::string& provenance, std::uint64_t budget) {
  VertexSet J = sorted_unique(J_in);
  if (J.empty()) return std::nullopt;
  for (Vertex v : J)
    if (!g.alive(v)) return std::nullopt;
  if (!verify_independent(g, J)) return std::nullopt;
  const VertexSet S = set_union(J, open_neighborhood(g, J));
  const int s = static_cast<int>(S.size());
  if (s > kMaxLocal || s < 2) return std::nullopt;
  const LocalTables tb = build_tables(g, S);
  const int j = static_cast<int>(J.size());
  auto gain_for = [&](int t) { return c.ceil_of(s - t); };
  auto base = [&](PlanKind kind, const std::string& shape) {
    ReductionPlan p;
    p.kind = kind;
    p.S = S;
    p.c = c;
    p.J = J;
    p.provenance = provenance + " / " + shape;
    return p;
  };

  // ind-red with k = 0, then k = 1.
  std::vector<std::optional<std::pair<Vertex, Vertex>>> pairs;
  for (Vertex x : J) pairs.push_back(private_pair(g, x, J));
  for (int k = 0; k <= 1 && k < j; ++k) {
    for (int skip = (k == 0 ? -1 : 0); skip < (k == 0 ? 0 : j); ++skip) {
      std::vector<std::uint32_t> masks;
      ReductionPlan p = base(PlanKind::ind_red_contract, "ind-red k=" + std::to_string(k));
      p.k = k;
      bool ok = true;
      for (int i = 0; i < j && ok; ++i) {
        if (i == skip) continue;
        if (!pairs[i]) {
          ok = false;
          break;
        }
        VertexSet part = sorted_unique({J[i], pairs[i]->first, pairs[i]->second});
        masks.push_back(tb.mask_of(part));
        p.parts.push_back(part);
      }
      if (!ok || p.t() >= s || tb.alpha[tb.interior] < gain_for(p.t())) continue;
      if (!parts_pass(tb, masks, gain_for(p.t()))) continue;
      if (auto cp = try_certify(g, std::move(p), budget)) return cp;
    }
  }

  // Plain deletion of S, then contraction of all of S.
  if (tb.alpha[tb.interior] >= gain_for(0))
    if (auto cp = try_certify(g, base(PlanKind::uber_red, "delete S"), budget)) return cp;
  if (tb.conn[tb.full] && tb.alpha[tb.interior] >= gain_for(1) && tb.alpha[tb.full] >= 1 + gain_for(1)) {
    ReductionPlan p = base(PlanKind::uber_red, "contract S");
    p.parts = {S};
    if (auto cp = try_certify(g, std::move(p), budget)) return cp;
  }
  if (!tb.conn[tb.full]) return std::nullopt;

  // Covering partitions into two and three connected parts. Enlarging a part
  // never hurts the condition, so covering partitions are the only ones needed.
  const std::uint32_t v0 = tb.full & (~tb.full + 1);
  if (s > 2 && tb.alpha[tb.interior] >= gain_for(2)) {
    const long long gain = gain_for(2);
    for (std::uint32_t a = tb.full; a; a = (a - 1) & tb.full) {
      if (!(a & v0) || a == tb.full) continue;
      const std::uint32_t b = tb.full & ~a;
      if (!tb.conn[a] || !tb.conn[b]) continue;
      if (tb.alpha[tb.interior | a] < 1 + gain || tb.alpha[tb.interior | b] < 1 + gain) continue;
      if (!parts_pass(tb, {a, b}, gain)) continue;
      ReductionPlan p = base(PlanKind::uber_red, "two parts");
      p.parts = {tb.set_of(a), tb.set_of(b)};
      if (auto cp = try_certify(g, std::move(p), budget)) return cp;
    }
  }
  if (s > 3 && tb.alpha[tb.interior] >= gain_for(3)) {
    const long long gain = gain_for(3);
    auto good = [&](std::uint32_t m) { return tb.conn[m] && tb.alpha[tb.interior | m] >= 1 + gain; };
    for (std::uint32_t a = tb.full; a; a = (a - 1) & tb.full) {
      if (!(a & v0) || !good(a)) continue;
      const std::uint32_t rest = tb.full & ~a;
      if (std::popcount(rest) < 2) continue;
      const std::uint32_t r0 = rest & (~rest + 1);
      for (std::uint32_t b = rest; b; b = (b - 1) & rest) {
        if (!(b & r0) || b == rest) continue;
        const std::uint32_t d = rest & ~b;
        if (!good(b) || !good(d)) continue;
        if (!parts_pass(tb, {a, b, d}, gain)) continue;
        ReductionPlan p = base(PlanKind::uber_red, "three parts");
        p.parts = {tb.set_of(a), tb.set_of(b), tb.set_of(d)};
        if (auto cp = try_certify(g, std::move(p), budget)) return cp;
      }
    }
  }
  return std::nullopt;
}

}  // namespace pig
