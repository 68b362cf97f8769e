#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pig/graph.hpp"
#include "pig/mis.hpp"

namespace pig {

// c = a/b in lowest terms with 0 < c < 1.
struct Ratio {
  long long a = 3;
  long long b = 13;

  static Ratio make(long long a, long long b);
  // Accepts "a/b"; throws std::invalid_argument.
  static Ratio parse(const std::string& text);
  std::string str() const;
  // ceil(c * n)
  long long ceil_of(long long n) const;

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

inline constexpr Ratio kOneFifth{1, 5};
inline constexpr Ratio kTwoNinths{2, 9};
inline constexpr Ratio kThreeThirteenths{3, 13};

// floor(((b - a) / a) * j) + 2: the smallest |N(J)| a minimal counterexample allows.
long long crunch_bound(long long j, const Ratio& c);

enum class PlanKind { delete_closed_nbhd, ind_red_contract, uber_red, split };
const char* plan_kind_name(PlanKind k);
std::optional<PlanKind> plan_kind_from_name(const std::string& s);

class PlanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lift produced a set that is dependent or short of its guarantee.
class LiftError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ReductionPlan {
  PlanKind kind = PlanKind::uber_red;
  VertexSet S;
  std::vector<VertexSet> parts;
  VertexSet interior;  // filled by certify_plan
  Ratio c;
  std::string provenance;
  VertexSet J;  // the independent set the plan was built around, if any
  int k = 0;    // |J| - t for ind-red plans

  int t() const { return static_cast<int>(parts.size()); }
  // ceil(c (|S| - t)): what the lift adds on top of the reduced solution.
  long long gain() const { return c.ceil_of(static_cast<long long>(S.size()) - t()); }
};

// One admissible X and the oracle value it was certified with.
struct CertifiedSubset {
  std::vector<int> X;
  int alpha = 0;
  long long need = 0;
};

struct CertifiedPlan {
  ReductionPlan plan;
  std::vector<CertifiedSubset> checks;
};

// Verifies structure (disjoint connected parts inside S, t < |S|, ind-red part
// shape) and, for every set X of pairwise non-adjacent parts,
// alpha(G[I(S) ∪ parts in X]) >= |X| + gain. Throws PlanError on rejection.
CertifiedPlan certify_plan(const EmbeddedGraph& g, ReductionPlan plan,
                           std::uint64_t budget = default_oracle_budget());

struct LiftContext {
  PlanKind kind = PlanKind::uber_red;
  std::shared_ptr<const EmbeddedGraph> original;
  std::vector<VertexSet> parts;
  std::vector<Vertex> contracted;  // contracted[i] is the id of part i in the reduced graph
  VertexSet deleted;               // S minus the parts
  VertexSet interior;
  std::vector<std::pair<Vertex, Vertex>> added_edges;  // from re-triangulation
  Ratio c;
  int n = 0;
  int n_reduced = 0;
  long long gain = 0;
};

struct AppliedPlan {
  EmbeddedGraph reduced;
  LiftContext ctx;
};

// Deletes S minus the parts, contracts each part, then re-triangulates when
// the result is connected with at least three vertices.
AppliedPlan apply_plan(const EmbeddedGraph& g, const CertifiedPlan& cp);

struct LiftResult {
  VertexSet set;
  VertexSet W;  // contracted vertices present in the reduced solution
  VertexSet T;  // oracle completion inside the window
};

// (I' \ W) ∪ T. Throws LiftError if the result is dependent or smaller than |I'| + gain.
LiftResult lift(const VertexSet& reduced_set, const LiftContext& ctx,
                std::uint64_t budget = default_oracle_budget());

// Lifts every admissible W: starts from the reduced solution, forces W in and
// removes reduced-graph neighbors of W, then lifts. Returns one result per W.
std::vector<LiftResult> lift_every_w(const EmbeddedGraph& reduced, const VertexSet& reduced_set,
                                     const LiftContext& ctx,
                                     std::uint64_t budget = default_oracle_budget());

// --- low-degree plans ---------------------------------------------------

// Smallest-degree vertex (ties to the smallest id): delete N[v] when N(v) is a
// clique, otherwise ind-red on {v, u, u'} with u, u' non-adjacent neighbors.
// Returns none when ceil(c d) > 1 for that degree.
std::optional<ReductionPlan> find_low_degree_plan(const EmbeddedGraph& g, const Ratio& c);

// --- separating-triangle split -------------------------------------------

enum class SplitClaim { one, two_12, two_21, three };
const char* split_claim_name(SplitClaim s);
std::optional<SplitClaim> split_claim_from_name(const std::string& s);

struct SplitCandidate {
  std::string recipe;  // "C1", "C2(1,2)", "C2(2,1)", "C3(2,2)", "C3(2,3)", "C3(3,2)", "C3(3,3)"
  SplitClaim claim = SplitClaim::one;
  long long guarantee = 0;
};

struct SplitPlan {
  Triangle X{};  // sorted, x1 < x2 < x3
  VertexSet A1, A2;
  long long N1 = 0, N2 = 0;
  Ratio c;
  // k[i][j] in [1, b] with k ≡ a (N_i + j) mod b, for i in {0,1} (sides) and j in 0..3.
  std::array<std::array<long long, 4>, 2> k{};
  std::vector<SplitCandidate> candidates;
  // First claim in the order C1, C2(1,2), C2(2,1), C3 whose guarantee reaches ceil(c n).
  SplitClaim chosen = SplitClaim::one;
  long long target = 0;
};

// Guarantees for the side sizes alone, in claim order C1, C2(1,2), C2(2,1), C3.
std::array<long long, 4> split_guarantees(long long N1, long long N2, const Ratio& c);
long long residue(long long N, long long j, const Ratio& c);

// A1 = X ∪ the component of G - X holding the smallest id; A2 = X ∪ the rest.
// Throws PlanError when X is not separating or no claim meets the target.
SplitPlan split_plan(const EmbeddedGraph& g, const Triangle& X, const Ratio& c);

// Sub-instance graphs of a split, keyed by a label understood by recombine.
struct SplitInstance {
  std::string label;  // "A1-X", "A2-X", "A1/X", "A2/X", "A1", "A2", "A1/x1x2", "A1/x1x3", "A2/x1x2", "A2/x1x3"
  EmbeddedGraph graph;
  Vertex merged = -1;  // id of the contracted vertex, if any
};

SplitInstance split_instance(const EmbeddedGraph& g, const SplitPlan& sp, const std::string& label);
// The labels a claim needs, in solve order. C3 lists the t = 2 pair first.
std::vector<std::string> split_labels(SplitClaim claim);

// Union of the parts of the two solutions outside X, plus the smallest vertex
// of X with no neighbor in that union. Each input is a set of the named instance.
VertexSet recombine(const EmbeddedGraph& g, const SplitPlan& sp, const VertexSet& first,
                    const VertexSet& second);

// --- configurations ------------------------------------------------------

enum class ConfigId { H, JIsTwo, alpha666, alpha6567, alpha665big, alpha7566, alpha556tri, alpha755big, reduce7vertex };
const char* config_name(ConfigId id);
std::optional<ConfigId> config_from_name(const std::string& s);

struct ConfigurationMatch {
  ConfigId id = ConfigId::H;
  // Role label to vertex id, in the order the detector fills them.
  std::vector<std::pair<std::string, Vertex>> roles;

  Vertex role(const std::string& label) const;
  // The independent set the reduction is built around.
  VertexSet J() const;
};

// Re-checks the degree, adjacency and distance hypotheses of the match.
bool check_match(const EmbeddedGraph& g, const ConfigurationMatch& m);

// All matches of one detector, lexicographically by role tuple.
std::vector<ConfigurationMatch> detect(const EmbeddedGraph& g, ConfigId id);
// Every match of every detector, in priority order.
std::vector<ConfigurationMatch> find_configs(const EmbeddedGraph& g);
std::optional<ConfigurationMatch> find_config(const EmbeddedGraph& g);

// Searches plan shapes for one independent set J with S = J ∪ N(J): ind-red
// with k = 0 and 1, deletion of S, contraction of S, then covering partitions
// of S into two and three connected parts. Returns the first shape that certifies.
std::optional<CertifiedPlan> plan_for_set(const EmbeddedGraph& g, const VertexSet& J, const Ratio& c,
                                          const std::string& provenance,
                                          std::uint64_t budget = default_oracle_budget());

std::optional<CertifiedPlan> plan_from_match(const EmbeddedGraph& g, const ConfigurationMatch& m,
                                             const Ratio& c, std::uint64_t budget = default_oracle_budget());

// Matches touching the distance-2 windows around negatively charged vertices
// first, then the remaining matches, then every independent J of size 2 or 3
// with |N(J)| small enough for the arithmetic.
std::optional<CertifiedPlan> find_config_plan(const EmbeddedGraph& g, const Ratio& c,
                                              std::uint64_t budget = default_oracle_budget());

}  // namespace pig
