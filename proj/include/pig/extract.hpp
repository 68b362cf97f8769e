#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pig/graph.hpp"
#include "pig/mis.hpp"
#include "pig/reduce.hpp"

namespace pig {

// No certified reduction applies to a δ >= 5 triangulation without separating
// triangles. Carries the offending graph for triage.
class IncompletenessDiagnostic : public std::runtime_error {
 public:
  IncompletenessDiagnostic(const std::string& what, EmbeddedGraph g)
      : std::runtime_error(what), graph_(std::move(g)) {}
  const EmbeddedGraph& graph() const { return graph_; }

 private:
  EmbeddedGraph graph_;
};

// The extracted set missed ceil(c n) or was not independent.
class BoundFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class StepKind { components, exact, triangulate, reduce, split };
const char* step_kind_name(StepKind k);

// One node of the extraction tree; the trace lists nodes in pre-order.
struct TraceStep {
  StepKind kind = StepKind::exact;
  int parent = -1;
  std::vector<int> children;
  std::string label;  // split instance label of this node, if it is one
  int n = 0;
  long long bound = 0;  // ceil(c n)
  long long size = 0;   // size of the set this node returns

  VertexSet set;  // exact leaves only
  std::vector<VertexSet> components;
  std::vector<std::pair<Vertex, Vertex>> added_edges;

  // reduce
  PlanKind plan_kind = PlanKind::uber_red;
  VertexSet S, J;
  std::vector<VertexSet> parts;
  int k = 0;
  std::string provenance;
  std::vector<Vertex> contracted;
  long long gain = 0;

  // split
  Triangle X{};
  SplitClaim claim = SplitClaim::one;
  std::string recipe;
  long long N1 = 0, N2 = 0;
};

struct Certificate {
  std::string graph_hash;
  Ratio c;
  int n = 0;
  long long bound = 0;
  VertexSet set;
  std::vector<TraceStep> trace;
};

struct ExtractOptions {
  std::uint64_t budget = default_oracle_budget();
  // Called after every lift of an applied plan, with the reduced graph and its solution.
  std::function<void(const EmbeddedGraph&, const VertexSet&, const LiftContext&)> on_lift;
};

Certificate extract(const EmbeddedGraph& g, const Ratio& c, const ExtractOptions& opts = {});

struct CheckReport {
  bool ok = false;
  int failed_step = -1;
  std::string message;
};

// Replays every step from the original graph: recomputes components,
// triangulations, plan certification, contraction, split instances, lifts and
// recombinations, and compares each size ledger entry.
CheckReport check_certificate(const EmbeddedGraph& g, const Certificate& cert,
                              std::uint64_t budget = default_oracle_budget());

// Canonical JSON (sorted keys, 1-based vertex ids).
std::string certificate_to_json(const Certificate& cert);
// Throws std::invalid_argument on malformed documents.
Certificate certificate_from_json(const std::string& text);

struct CorpusEntry {
  GenSpec spec;
  int n = 0;
  int m = 0;
  long long bound = 0;
  long long size = 0;
  bool ok = false;
  bool diagnostic = false;
  std::string message;
  double millis = 0.0;
};

struct CorpusReport {
  std::vector<CorpusEntry> entries;
  int successes() const;
  int diagnostics() const;
};

// Generates each spec and extracts it; diagnostics are recorded per entry.
// Instances run on `threads` workers (0: one per core); entries keep spec order
// and on_lift must be thread-safe when threads != 1.
CorpusReport corpus_run(const std::vector<GenSpec>& specs, const Ratio& c, const ExtractOptions& opts = {},
                        int threads = 0);

}  // namespace pig
