#include <algorithm>

#include "pig/reduce.hpp"

namespace pig {

const char* split_claim_name(SplitClaim s) {
  switch (s) {
    case SplitClaim::one: return "C1";
    case SplitClaim::two_12: return "C2(1,2)";
    case SplitClaim::two_21: return "C2(2,1)";
    case SplitClaim::three: return "C3";
  }
  return "?";
}

std::optional<SplitClaim> split_claim_from_name(const std::string& s) {
  for (SplitClaim c : {SplitClaim::one, SplitClaim::two_12, SplitClaim::two_21, SplitClaim::three})
    if (s == split_claim_name(c)) return c;
  return std::nullopt;
}

long long residue(long long N, long long j, const Ratio& c) {
  long long r = (c.a * (N + j)) % c.b;
  return r == 0 ? c.b : r;
}

std::array<long long, 4> split_guarantees(long long N1, long long N2, const Ratio& c) {
  return {c.ceil_of(N1) + c.ceil_of(N2), c.ceil_of(N1 + 1) + c.ceil_of(N2 + 3) - 1,
          c.ceil_of(N2 + 1) + c.ceil_of(N1 + 3) - 1, c.ceil_of(N1 + 2) + c.ceil_of(N2 + 2) - 1};
}

SplitPlan split_plan(const EmbeddedGraph& g, const Triangle& X_in, const Ratio& c) {
  SplitPlan sp;
  sp.c = c;
  sp.X = X_in;
  std::sort(sp.X.begin(), sp.X.end());
  for (Vertex x : sp.X)
    if (!g.alive(x)) throw PlanError("split: unknown vertex in X");
  if (!g.adjacent(sp.X[0], sp.X[1]) || !g.adjacent(sp.X[1], sp.X[2]) || !g.adjacent(sp.X[0], sp.X[2]))
    throw PlanError("split: X is not a triangle");
  VertexSet rest;
  for (Vertex v : g.vertices())
    if (std::find(sp.X.begin(), sp.X.end(), v) == sp.X.end()) rest.push_back(v);
  auto comps = g.induced(rest).components();
  if (comps.size() < 2) throw PlanError("split: X is not separating");
  // components() lists components by smallest member, so comps[0] holds the smallest id.
  VertexSet first = comps[0];
  std::sort(first.begin(), first.end());
  VertexSet second;
  for (std::size_t i = 1; i < comps.size(); ++i) second.insert(second.end(), comps[i].begin(), comps[i].end());
  std::sort(second.begin(), second.end());
  auto with_x = [&](VertexSet s) {
    s.insert(s.end(), sp.X.begin(), sp.X.end());
    std::sort(s.begin(), s.end());
    return s;
  };
  sp.A1 = with_x(first);
  sp.A2 = with_x(second);
  sp.N1 = static_cast<long long>(first.size());
  sp.N2 = static_cast<long long>(second.size());
  for (int j = 0; j < 4; ++j) {
    sp.k[0][j] = residue(sp.N1, j, c);
    sp.k[1][j] = residue(sp.N2, j, c);
  }
  const auto gs = split_guarantees(sp.N1, sp.N2, c);
  sp.candidates = {{"C1", SplitClaim::one, gs[0]},          {"C2(1,2)", SplitClaim::two_12, gs[1]},
                   {"C2(2,1)", SplitClaim::two_21, gs[2]},  {"C3(2,2)", SplitClaim::three, gs[3]},
                   {"C3(2,3)", SplitClaim::three, gs[3]},   {"C3(3,2)", SplitClaim::three, gs[3]},
                   {"C3(3,3)", SplitClaim::three, gs[3]}};
  sp.target = c.ceil_of(g.vertex_count());
  const SplitClaim order[] = {SplitClaim::one, SplitClaim::two_12, SplitClaim::two_21, SplitClaim::three};
  for (int i = 0; i < 4; ++i)
    if (gs[i] >= sp.target) {
      sp.chosen = order[i];
      return sp;
    }
  throw PlanError("split: no claim reaches ceil(c n) for N1 = " + std::to_string(sp.N1) +
                  ", N2 = " + std::to_string(sp.N2));
}

std::vector<std::string> split_labels(SplitClaim claim) {
  switch (claim) {
    case SplitClaim::one: return {"A1-X", "A2-X"};
    case SplitClaim::two_12: return {"A1/X", "A2"};
    case SplitClaim::two_21: return {"A1", "A2/X"};
    case SplitClaim::three: return {"A1/x1x2", "A2/x1x2", "A1/x1x3", "A2/x1x3"};
  }
  return {};
}

SplitInstance split_instance(const EmbeddedGraph& g, const SplitPlan& sp, const std::string& label) {
  SplitInstance out;
  out.label = label;
  const bool side1 = label.rfind("A1", 0) == 0;
  if (!side1 && label.rfind("A2", 0) != 0) throw PlanError("split: unknown instance " + label);
  const VertexSet& A = side1 ? sp.A1 : sp.A2;
  const std::string tail = label.substr(2);
  if (tail == "-X") {
    VertexSet keep;
    for (Vertex v : A)
      if (std::find(sp.X.begin(), sp.X.end(), v) == sp.X.end()) keep.push_back(v);
    out.graph = g.induced(keep);
    return out;
  }
  EmbeddedGraph side = g.induced(A);
  if (tail.empty()) {
    out.graph = std::move(side);
    return out;
  }
  VertexSet merge;
  if (tail == "/X") merge = {sp.X[0], sp.X[1], sp.X[2]};
  else if (tail == "/x1x2") merge = {sp.X[0], sp.X[1]};
  else if (tail == "/x1x3") merge = {sp.X[0], sp.X[2]};
  else throw PlanError("split: unknown instance " + label);
  auto [h, w] = contract_set(side, merge);
  out.graph = std::move(h);
  out.merged = w;
  return out;
}

VertexSet recombine(const EmbeddedGraph& g, const SplitPlan& sp, const VertexSet& first, const VertexSet& second) {
  auto in_x = [&](Vertex v) { return std::find(sp.X.begin(), sp.X.end(), v) != sp.X.end(); };
  auto original = [&](Vertex v) { return v < g.capacity() && g.alive(v) && !in_x(v); };
  VertexSet out;
  for (Vertex v : first)
    if (original(v)) out.push_back(v);
  for (Vertex v : second)
    if (original(v)) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (Vertex x : sp.X) {
    bool free = true;
    for (Vertex u : g.rotation(x))
      if (std::binary_search(out.begin(), out.end(), u)) {
        free = false;
        break;
      }
    if (free) {
      out.insert(std::lower_bound(out.begin(), out.end(), x), x);
      break;
    }
  }
  return out;
}

}  // namespace pig
