#include "pig/extract.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace pig {

const char* step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::components: return "components";
    case StepKind::exact: return "exact";
    case StepKind::triangulate: return "triangulate";
    case StepKind::reduce: return "reduce";
    case StepKind::split: return "split";
  }
  return "?";
}

namespace {

constexpr int kExactThreshold = 20;
constexpr std::size_t kSplitScan = 64;

VertexSet merge_sets(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class Extractor {
 public:
  Extractor(const Ratio& c, const ExtractOptions& opts) : c_(c), opts_(opts) {}

  std::vector<TraceStep> trace;

  VertexSet solve(const EmbeddedGraph& g, int parent, const std::string& label) {
    const int id = static_cast<int>(trace.size());
    trace.emplace_back();
    trace[id].parent = parent;
    trace[id].label = label;
    trace[id].n = g.vertex_count();
    trace[id].bound = c_.ceil_of(g.vertex_count());
    if (parent >= 0) trace[parent].children.push_back(id);

    VertexSet set = dispatch(g, id);
    if (!verify_independent(g, set))
      throw BoundFailure("step " + std::to_string(id) + " returned a dependent set");
    if (static_cast<long long>(set.size()) < trace[id].bound)
      throw BoundFailure("step " + std::to_string(id) + " (" + step_kind_name(trace[id].kind) + ") returned " +
                         std::to_string(set.size()) + " < " + std::to_string(trace[id].bound));
    trace[id].size = static_cast<long long>(set.size());
    return set;
  }

 private:
  VertexSet dispatch(const EmbeddedGraph& g, int id) {
    auto comps = g.components();
    if (comps.size() > 1) {
      trace[id].kind = StepKind::components;
      trace[id].components = comps;
      VertexSet out;
      for (std::size_t i = 0; i < comps.size(); ++i)
        out = merge_sets(out, solve(g.induced(comps[i]), id, "component " + std::to_string(i + 1)));
      return out;
    }
    if (g.vertex_count() <= kExactThreshold) {
      trace[id].kind = StepKind::exact;
      trace[id].set = mis_exact(g, opts_.budget);
      return trace[id].set;
    }
    if (!g.is_triangulation()) {
      trace[id].kind = StepKind::triangulate;
      auto tr = triangulate(g);
      trace[id].added_edges = tr.added_edges;
      return solve(tr.graph, id, "");
    }
    if (auto p = find_low_degree_plan(g, c_)) return reduce(g, id, certify_plan(g, *p, opts_.budget));
    if (auto X = choose_separating_triangle(g)) return split(g, id, *X);
    if (auto cp = find_config_plan(g, c_, opts_.budget)) return reduce(g, id, *cp);
    throw IncompletenessDiagnostic("no certified reduction for a " + std::to_string(g.vertex_count()) +
                                       "-vertex triangulation with minimum degree " +
                                       std::to_string(g.min_degree()) + " and no separating triangle",
                                   g);
  }

  VertexSet reduce(const EmbeddedGraph& g, int id, const CertifiedPlan& cp) {
    auto& st = trace[id];
    st.kind = StepKind::reduce;
    st.plan_kind = cp.plan.kind;
    st.S = cp.plan.S;
    st.J = cp.plan.J;
    st.parts = cp.plan.parts;
    st.k = cp.plan.k;
    st.provenance = cp.plan.provenance;
    st.gain = cp.plan.gain();
    AppliedPlan ap = apply_plan(g, cp);
    trace[id].contracted = ap.ctx.contracted;
    trace[id].added_edges = ap.ctx.added_edges;
    VertexSet reduced_set = solve(ap.reduced, id, "");
    LiftResult lr = lift(reduced_set, ap.ctx, opts_.budget);
    if (opts_.on_lift) opts_.on_lift(ap.reduced, reduced_set, ap.ctx);
    return lr.set;
  }

  // First separating triangle whose split avoids the C3 claim, else the first one.
  std::optional<Triangle> choose_separating_triangle(const EmbeddedGraph& g) {
    auto seps = separating_triangles(g);
    if (seps.empty()) return std::nullopt;
    for (std::size_t i = 0; i < seps.size() && i < kSplitScan; ++i) {
      try {
        if (split_plan(g, seps[i], c_).chosen != SplitClaim::three) return seps[i];
      } catch (const PlanError&) {
      }
    }
    return seps.front();
  }

  VertexSet split(const EmbeddedGraph& g, int id, const Triangle& X) {
    SplitPlan sp = split_plan(g, X, c_);
    trace[id].kind = StepKind::split;
    trace[id].X = sp.X;
    trace[id].claim = sp.chosen;
    trace[id].N1 = sp.N1;
    trace[id].N2 = sp.N2;
    auto labels = split_labels(sp.chosen);
    auto solve_label = [&](const std::string& label) {
      SplitInstance inst = split_instance(g, sp, label);
      return solve(inst.graph, id, label);
    };
    if (sp.chosen != SplitClaim::three) {
      VertexSet a = solve_label(labels[0]);
      VertexSet b = solve_label(labels[1]);
      trace[id].recipe = split_claim_name(sp.chosen);
      return recombine(g, sp, a, b);
    }
    // C3: the t = 2 pair first, the t = 3 pair only when needed.
    VertexSet s12 = solve_label("A1/x1x2"), s22 = solve_label("A2/x1x2");
    VertexSet best = recombine(g, sp, s12, s22);
    trace[id].recipe = "C3(2,2)";
    if (static_cast<long long>(best.size()) >= sp.target) return best;
    VertexSet s13 = solve_label("A1/x1x3"), s23 = solve_label("A2/x1x3");
    const std::pair<const char*, std::pair<const VertexSet*, const VertexSet*>> options[] = {
        {"C3(2,3)", {&s12, &s23}}, {"C3(3,2)", {&s13, &s22}}, {"C3(3,3)", {&s13, &s23}}};
    for (const auto& [name, pr] : options) {
      VertexSet cand = recombine(g, sp, *pr.first, *pr.second);
      if (cand.size() > best.size()) {
        best = std::move(cand);
        trace[id].recipe = name;
      }
    }
    return best;
  }

  Ratio c_;
  const ExtractOptions& opts_;
};

}  // namespace

Certificate extract(const EmbeddedGraph& g, const Ratio& c, const ExtractOptions& opts) {
  Extractor ex(c, opts);
  Certificate cert;
  cert.graph_hash = graph_hash(g);
  cert.c = c;
  cert.n = g.vertex_count();
  cert.bound = c.ceil_of(g.vertex_count());
  cert.set = ex.solve(g, -1, "");
  cert.trace = std::move(ex.trace);
  return cert;
}

int CorpusReport::successes() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const CorpusEntry& e) { return e.ok; }));
}

int CorpusReport::diagnostics() const {
  return static_cast<int>(
      std::count_if(entries.begin(), entries.end(), [](const CorpusEntry& e) { return e.diagnostic; }));
}

CorpusReport corpus_run(const std::vector<GenSpec>& specs, const Ratio& c, const ExtractOptions& opts, int threads) {
  CorpusReport report;
  report.entries.resize(specs.size());
  auto one = [&](std::size_t i) {
    CorpusEntry& e = report.entries[i];
    e.spec = specs[i];
    auto t0 = std::chrono::steady_clock::now();
    try {
      EmbeddedGraph g = generate(specs[i]);
      e.n = g.vertex_count();
      e.m = g.edge_count();
      e.bound = c.ceil_of(e.n);
      Certificate cert = extract(g, c, opts);
      e.size = static_cast<long long>(cert.set.size());
      e.ok = verify_independent(g, cert.set) && e.size >= e.bound;
    } catch (const IncompletenessDiagnostic& d) {
      e.diagnostic = true;
      e.message = d.what();
    } catch (const std::exception& ex) {
      e.message = ex.what();
    }
    e.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  };
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = static_cast<int>(std::min<std::size_t>(threads, std::max<std::size_t>(specs.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < specs.size();) one(i);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return report;
}

}  // namespace pig
