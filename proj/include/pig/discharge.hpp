#pragma once

#include <boost/rational.hpp>
#include <map>
#include <string>
#include <vector>

#include "pig/graph.hpp"

namespace pig {

using Charge = boost::rational<long long>;

enum class Phase { initial, after_r1_r3, after_r4, after_r5 };
const char* phase_name(Phase p);

enum class RuleSet { warmup, main };

struct Transfer {
  Vertex giver;
  Vertex receiver;
  Charge amount;  // always > 0
  std::string rule;
};

// Charges indexed by vertex id (tombstones hold 0), plus every transfer
// applied since the initial state.
struct ChargeState {
  Phase phase = Phase::initial;
  std::vector<Charge> charge;
  std::vector<Transfer> ledger;

  Charge total() const;
};

enum class FiveClass { isolated, crowded, plain };
const char* five_class_name(FiveClass c);

struct NeighborProfile {
  Vertex v = -1;
  std::vector<Vertex> five, six, seven, eight_plus;
  // Edges of H_v, the subgraph induced by the 5- and 6-neighbors of v.
  std::vector<std::pair<Vertex, Vertex>> h_edges;
  std::map<Vertex, int> h_degree;
  std::map<Vertex, FiveClass> five_class;
  // Number of 7+-vertices in N(v) ∩ N(w), for each 6⁻-neighbor w.
  std::map<Vertex, int> h_w;
  // False when G[N(v)] is not exactly the rotation cycle; the rules assume it is.
  bool induced_cycle = false;
};

ChargeState initial_charges(const EmbeddedGraph& g);
NeighborProfile classify(const EmbeddedGraph& g, Vertex v);

// Returns the initial state followed by one state per phase.
std::vector<ChargeState> run_warmup(const EmbeddedGraph& g);
std::vector<ChargeState> run_main(const EmbeddedGraph& g);
std::vector<ChargeState> run_rules(const EmbeddedGraph& g, RuleSet rules);

std::vector<Vertex> negative_vertices(const ChargeState& cs);

// initial charges plus the ledger, for replay checks.
std::vector<Charge> replay(const EmbeddedGraph& g, const std::vector<Transfer>& ledger);

}  // namespace pig
