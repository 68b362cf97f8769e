#include "pig/discharge.hpp"

#include <algorithm>

namespace pig {

namespace {

Charge frac(long long p, long long q) { return Charge(p, q); }

class Accumulator {
 public:
  Accumulator(ChargeState base, Phase next) : state_(std::move(base)) {
    state_.phase = next;
    delta_.assign(state_.charge.size(), Charge(0));
  }

  void give(Vertex from, Vertex to, Charge amount, const char* rule) {
    if (amount <= 0) return;
    state_.ledger.push_back({from, to, amount, rule});
    delta_[from] -= amount;
    delta_[to] += amount;
  }

  ChargeState finish() {
    for (std::size_t i = 0; i < delta_.size(); ++i) state_.charge[i] += delta_[i];
    return std::move(state_);
  }

 private:
  ChargeState state_;
  std::vector<Charge> delta_;
};

bool has_degree_neighbor(const EmbeddedGraph& g, Vertex v, int d) {
  for (Vertex u : g.rotation(v))
    if (g.degree(u) == d) return true;
  return false;
}

std::vector<ChargeState> warmup(const EmbeddedGraph& g) {
  std::vector<ChargeState> out{initial_charges(g)};
  Accumulator acc(out.back(), Phase::after_r1_r3);
  for (Vertex v : g.vertices()) {
    const int d = g.degree(v);
    for (Vertex u : g.rotation(v)) {
      const int du = g.degree(u);
      if (d >= 7 && du == 5) acc.give(v, u, frac(1, 3), "R1");
      if (d >= 7 && du == 6 && has_degree_neighbor(g, u, 5)) acc.give(v, u, frac(1, 7), "R2");
      if (d == 6 && du == 5) acc.give(v, u, frac(2, 7), "R3");
    }
  }
  out.push_back(acc.finish());
  return out;
}

// Amount a 7-vertex v gives to neighbor u under main R3.
Charge seven_gives(const EmbeddedGraph& g, const NeighborProfile& pv, Vertex u) {
  const int du = g.degree(u);
  if (du == 5) {
    switch (pv.five_class.at(u)) {
      case FiveClass::isolated: return frac(1, 2);
      case FiveClass::crowded: return Charge(0);
      case FiveClass::plain: return frac(1, 4);
    }
  }
  if (du == 6) {
    if (pv.five.empty() && !has_degree_neighbor(g, u, 5)) return Charge(0);
    return frac(1, 4);
  }
  return Charge(0);
}

std::vector<ChargeState> main_rules(const EmbeddedGraph& g) {
  std::vector<ChargeState> out{initial_charges(g)};
  const auto vs = g.vertices();
  std::vector<NeighborProfile> prof(g.capacity());
  for (Vertex v : vs)
    if (g.degree(v) >= 7) prof[v] = classify(g, v);

  // Structural count of vertices that send a 5-vertex positive charge in R1–R3.
  auto senders = [&](Vertex w) {
    int count = 0;
    for (Vertex z : g.rotation(w)) {
      const int dz = g.degree(z);
      if (dz == 6 || dz >= 8) ++count;
      else if (dz == 7 && prof[z].five_class.at(w) != FiveClass::crowded) ++count;
    }
    return count;
  };

  std::vector<std::vector<Vertex>> gave_half(g.capacity());
  Accumulator acc(out.back(), Phase::after_r1_r3);
  for (Vertex v : vs) {
    const int d = g.degree(v);
    if (d == 6) {
      for (Vertex w : g.rotation(v)) {
        if (g.degree(w) != 5) continue;
        auto cn = common_neighbors(g, v, w).vertices;
        bool common6 = false, common5 = false;
        for (Vertex x : cn) {
          common6 |= g.degree(x) == 6;
          common5 |= g.degree(x) == 5;
        }
        bool quarter = (common6 && !common5) || senders(w) >= 4;
        acc.give(v, w, quarter ? frac(1, 4) : frac(1, 2), "R1");
        if (!quarter) gave_half[w].push_back(v);
      }
    } else if (d >= 8) {
      for (Vertex w : g.rotation(v))
        if (g.degree(w) <= 6) acc.give(v, w, frac(1, 4) + frac(prof[v].h_w.at(w), 8), "R2");
    } else if (d == 7) {
      for (Vertex u : g.rotation(v)) acc.give(v, u, seven_gives(g, prof[v], u), "R3");
    }
  }
  out.push_back(acc.finish());

  Accumulator r4(out.back(), Phase::after_r4);
  for (Vertex v : vs) {
    const Charge c = out.back().charge[v];
    if (g.degree(v) != 5 || c <= 0 || gave_half[v].empty()) continue;
    const Charge share = c / static_cast<long long>(gave_half[v].size());
    for (Vertex u : gave_half[v]) r4.give(v, u, share, "R4");
  }
  out.push_back(r4.finish());

  Accumulator r5(out.back(), Phase::after_r5);
  const auto& before = out.back().charge;
  for (Vertex v : vs) {
    if (g.degree(v) != 6 || before[v] <= 0) continue;
    std::vector<Vertex> needy;
    for (Vertex u : g.rotation(v))
      if (g.degree(u) == 6 && before[u] < 0) needy.push_back(u);
    if (needy.empty()) continue;
    const Charge share = before[v] / static_cast<long long>(needy.size());
    for (Vertex u : needy) r5.give(v, u, share, "R5");
  }
  out.push_back(r5.finish());
  return out;
}

}  // namespace

const char* phase_name(Phase p) {
  switch (p) {
    case Phase::initial: return "initial";
    case Phase::after_r1_r3: return "after-R1-R3";
    case Phase::after_r4: return "after-R4";
    case Phase::after_r5: return "after-R5";
  }
  return "?";
}

const char* five_class_name(FiveClass c) {
  switch (c) {
    case FiveClass::isolated: return "isolated";
    case FiveClass::crowded: return "crowded";
    case FiveClass::plain: return "plain";
  }
  return "?";
}

Charge ChargeState::total() const {
  Charge sum(0);
  for (const auto& c : charge) sum += c;
  return sum;
}

ChargeState initial_charges(const EmbeddedGraph& g) {
  ChargeState cs;
  cs.charge.assign(g.capacity(), Charge(0));
  for (Vertex v : g.vertices()) cs.charge[v] = Charge(g.degree(v) - 6);
  return cs;
}

NeighborProfile classify(const EmbeddedGraph& g, Vertex v) {
  NeighborProfile p;
  p.v = v;
  p.induced_cycle = neighbor_cycle(g, v).induced_cycle;
  const auto& nb = g.rotation(v);
  std::vector<Vertex> h;
  for (Vertex u : nb) {
    const int d = g.degree(u);
    if (d == 5) p.five.push_back(u);
    else if (d == 6) p.six.push_back(u);
    else if (d == 7) p.seven.push_back(u);
    else if (d >= 8) p.eight_plus.push_back(u);
    if (d == 5 || d == 6) h.push_back(u);
  }
  for (Vertex u : h) p.h_degree[u] = 0;
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = i + 1; j < h.size(); ++j)
      if (g.adjacent(h[i], h[j])) {
        p.h_edges.push_back({std::min(h[i], h[j]), std::max(h[i], h[j])});
        ++p.h_degree[h[i]];
        ++p.h_degree[h[j]];
      }
  std::sort(p.h_edges.begin(), p.h_edges.end());
  for (Vertex w : p.five) {
    if (p.h_degree[w] == 0) {
      p.five_class[w] = FiveClass::isolated;
      continue;
    }
    int six_in_h = 0;
    for (Vertex x : h)
      if (g.degree(x) == 6 && g.adjacent(w, x)) ++six_in_h;
    p.five_class[w] = six_in_h >= 2 ? FiveClass::crowded : FiveClass::plain;
  }
  for (Vertex w : nb) {
    if (g.degree(w) > 6) continue;
    int count = 0;
    for (Vertex x : nb)
      if (x != w && g.degree(x) >= 7 && g.adjacent(x, w)) ++count;
    p.h_w[w] = count;
  }
  return p;
}

std::vector<ChargeState> run_warmup(const EmbeddedGraph& g) { return warmup(g); }
std::vector<ChargeState> run_main(const EmbeddedGraph& g) { return main_rules(g); }

std::vector<ChargeState> run_rules(const EmbeddedGraph& g, RuleSet rules) {
  return rules == RuleSet::warmup ? warmup(g) : main_rules(g);
}

std::vector<Vertex> negative_vertices(const ChargeState& cs) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < cs.charge.size(); ++v)
    if (cs.charge[v] < 0) out.push_back(static_cast<Vertex>(v));
  return out;
}

std::vector<Charge> replay(const EmbeddedGraph& g, const std::vector<Transfer>& ledger) {
  auto c = initial_charges(g).charge;
  for (const auto& t : ledger) {
    c[t.giver] -= t.amount;
    c[t.receiver] += t.amount;
  }
  return c;
}

}  // namespace pig
