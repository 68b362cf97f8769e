#include <algorithm>
#include "json.hpp"

#include "pig/extract.hpp"

namespace pig {

using nlohmann::json;

namespace {

json ext(const VertexSet& s) {
  json a = json::array();
  for (Vertex v : s) a.push_back(v + 1);
  return a;
}

VertexSet internal(const json& a) {
  VertexSet s;
  for (const auto& x : a) {
    long long v = x.get<long long>();
    if (v < 1) throw std::invalid_argument("vertex ids are 1-based");
    s.push_back(static_cast<Vertex>(v - 1));
  }
  return s;
}

json ext_edges(const std::vector<std::pair<Vertex, Vertex>>& es) {
  json a = json::array();
  for (auto [u, v] : es) a.push_back(json::array({u + 1, v + 1}));
  return a;
}

std::vector<std::pair<Vertex, Vertex>> internal_edges(const json& a) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& e : a) {
    auto s = internal(e);
    if (s.size() != 2) throw std::invalid_argument("edges have two endpoints");
    out.push_back({s[0], s[1]});
  }
  return out;
}

std::optional<StepKind> step_kind_from(const std::string& s) {
  for (StepKind k : {StepKind::components, StepKind::exact, StepKind::triangulate, StepKind::reduce, StepKind::split})
    if (s == step_kind_name(k)) return k;
  return std::nullopt;
}

json step_json(const TraceStep& st) {
  json j;
  j["step"] = step_kind_name(st.kind);
  j["parent"] = st.parent;
  j["children"] = st.children;
  j["n"] = st.n;
  j["bound"] = st.bound;
  j["size"] = st.size;
  if (!st.label.empty()) j["label"] = st.label;
  switch (st.kind) {
    case StepKind::exact: j["set"] = ext(st.set); break;
    case StepKind::components: {
      json cs = json::array();
      for (const auto& c : st.components) cs.push_back(ext(c));
      j["components"] = cs;
      break;
    }
    case StepKind::triangulate: j["added_edges"] = ext_edges(st.added_edges); break;
    case StepKind::reduce: {
      j["plan"] = plan_kind_name(st.plan_kind);
      j["S"] = ext(st.S);
      j["J"] = ext(st.J);
      json ps = json::array();
      for (const auto& p : st.parts) ps.push_back(ext(p));
      j["parts"] = ps;
      j["t"] = st.parts.size();
      j["k"] = st.k;
      j["gain"] = st.gain;
      j["provenance"] = st.provenance;
      j["contracted"] = ext(st.contracted);
      j["added_edges"] = ext_edges(st.added_edges);
      break;
    }
    case StepKind::split:
      j["X"] = ext({st.X[0], st.X[1], st.X[2]});
      j["claim"] = split_claim_name(st.claim);
      j["recipe"] = st.recipe;
      j["N1"] = st.N1;
      j["N2"] = st.N2;
      break;
  }
  return j;
}

TraceStep step_from(const json& j) {
  TraceStep st;
  auto kind = step_kind_from(j.at("step").get<std::string>());
  if (!kind) throw std::invalid_argument("unknown step kind");
  st.kind = *kind;
  st.parent = j.at("parent").get<int>();
  st.children = j.at("children").get<std::vector<int>>();
  st.n = j.at("n").get<int>();
  st.bound = j.at("bound").get<long long>();
  st.size = j.at("size").get<long long>();
  if (j.contains("label")) st.label = j.at("label").get<std::string>();
  switch (st.kind) {
    case StepKind::exact: st.set = internal(j.at("set")); break;
    case StepKind::components:
      for (const auto& c : j.at("components")) st.components.push_back(internal(c));
      break;
    case StepKind::triangulate: st.added_edges = internal_edges(j.at("added_edges")); break;
    case StepKind::reduce: {
      auto pk = plan_kind_from_name(j.at("plan").get<std::string>());
      if (!pk) throw std::invalid_argument("unknown plan kind");
      st.plan_kind = *pk;
      st.S = internal(j.at("S"));
      st.J = internal(j.at("J"));
      for (const auto& p : j.at("parts")) st.parts.push_back(internal(p));
      st.k = j.at("k").get<int>();
      st.gain = j.at("gain").get<long long>();
      st.provenance = j.at("provenance").get<std::string>();
      st.contracted = internal(j.at("contracted"));
      st.added_edges = internal_edges(j.at("added_edges"));
      break;
    }
    case StepKind::split: {
      auto x = internal(j.at("X"));
      if (x.size() != 3) throw std::invalid_argument("X has three vertices");
      st.X = {x[0], x[1], x[2]};
      auto claim = split_claim_from_name(j.at("claim").get<std::string>());
      if (!claim) throw std::invalid_argument("unknown split claim");
      st.claim = *claim;
      st.recipe = j.at("recipe").get<std::string>();
      st.N1 = j.at("N1").get<long long>();
      st.N2 = j.at("N2").get<long long>();
      break;
    }
  }
  return st;
}

class Replay {
 public:
  Replay(const Certificate& cert, std::uint64_t budget) : cert_(cert), budget_(budget) {}

  VertexSet run(const EmbeddedGraph& g, int id, const std::string& label) {
    if (id < 0 || id >= static_cast<int>(cert_.trace.size())) fail(id, "step index out of range");
    if (visited_.size() < cert_.trace.size()) visited_.resize(cert_.trace.size(), 0);
    if (visited_[id]) fail(id, "step visited twice");
    visited_[id] = 1;
    const TraceStep& st = cert_.trace[id];
    if (st.label != label) fail(id, "instance label mismatch");
    if (st.n != g.vertex_count()) fail(id, "vertex count mismatch");
    if (st.bound != cert_.c.ceil_of(g.vertex_count())) fail(id, "ledger bound mismatch");
    for (int child : st.children)
      if (child < 0 || child >= static_cast<int>(cert_.trace.size()) || cert_.trace[child].parent != id)
        fail(id, "broken parent link");
    VertexSet out = step(g, id, st);
    bool independent = false;
    try {
      independent = verify_independent(g, out);
    } catch (const GraphError&) {
    }
    if (!independent) fail(id, "replayed set is not independent");
    if (static_cast<long long>(out.size()) != st.size) fail(id, "size ledger mismatch");
    if (st.size < st.bound) fail(id, "size below ceil(c n)");
    return out;
  }

  [[noreturn]] static void fail(int id, const std::string& why) { throw StepFailure{id, why}; }

  struct StepFailure {
    int step;
    std::string why;
  };

 private:
  void expect_children(int id, const TraceStep& st, std::size_t count) {
    if (st.children.size() != count) fail(id, "wrong number of children");
  }

  VertexSet step(const EmbeddedGraph& g, int id, const TraceStep& st) {
    switch (st.kind) {
      case StepKind::exact: {
        if (g.vertex_count() > 20) fail(id, "exact step on a large graph");
        if (!st.children.empty()) fail(id, "exact steps are leaves");
        VertexSet s = mis_exact(g, budget_);
        if (s != st.set) fail(id, "exact set differs from the oracle");
        return s;
      }
      case StepKind::components: {
        auto comps = g.components();
        if (comps.size() < 2 || comps != st.components) fail(id, "component list differs");
        expect_children(id, st, comps.size());
        VertexSet out;
        for (std::size_t i = 0; i < comps.size(); ++i) {
          VertexSet s = run(g.induced(comps[i]), st.children[i], "component " + std::to_string(i + 1));
          out.insert(out.end(), s.begin(), s.end());
        }
        std::sort(out.begin(), out.end());
        return out;
      }
      case StepKind::triangulate: {
        if (g.is_triangulation()) fail(id, "graph was already a triangulation");
        auto tr = triangulate(g);
        if (tr.added_edges != st.added_edges) fail(id, "triangulation differs");
        expect_children(id, st, 1);
        return run(tr.graph, st.children[0], "");
      }
      case StepKind::reduce: {
        ReductionPlan p;
        p.kind = st.plan_kind;
        p.S = st.S;
        p.J = st.J;
        p.parts = st.parts;
        p.k = st.k;
        p.c = cert_.c;
        p.provenance = st.provenance;
        CertifiedPlan cp;
        try {
          cp = certify_plan(g, p, budget_);
        } catch (const PlanError& e) {
          fail(id, e.what());
        }
        if (cp.plan.gain() != st.gain) fail(id, "gain differs");
        AppliedPlan ap = apply_plan(g, cp);
        if (ap.ctx.contracted != st.contracted || ap.ctx.added_edges != st.added_edges)
          fail(id, "reduced graph differs");
        expect_children(id, st, 1);
        VertexSet sub = run(ap.reduced, st.children[0], "");
        try {
          return lift(sub, ap.ctx, budget_).set;
        } catch (const LiftError& e) {
          fail(id, e.what());
        }
      }
      case StepKind::split: {
        SplitPlan sp;
        try {
          sp = split_plan(g, st.X, cert_.c);
        } catch (const PlanError& e) {
          fail(id, e.what());
        }
        if (sp.chosen != st.claim || sp.N1 != st.N1 || sp.N2 != st.N2) fail(id, "split parameters differ");
        auto labels = split_labels(sp.chosen);
        if (sp.chosen == SplitClaim::three && st.children.size() == 2) labels.resize(2);
        expect_children(id, st, labels.size());
        std::vector<VertexSet> sets;
        for (std::size_t i = 0; i < labels.size(); ++i)
          sets.push_back(run(split_instance(g, sp, labels[i]).graph, st.children[i], labels[i]));
        std::pair<int, int> pick{0, 1};
        if (st.recipe == "C3(2,3)") pick = {0, 3};
        else if (st.recipe == "C3(3,2)") pick = {2, 1};
        else if (st.recipe == "C3(3,3)") pick = {2, 3};
        else if (st.recipe != split_claim_name(sp.chosen) && st.recipe != "C3(2,2)") fail(id, "unknown recipe");
        if (pick.second >= static_cast<int>(sets.size())) fail(id, "recipe needs unsolved instances");
        VertexSet out = recombine(g, sp, sets[pick.first], sets[pick.second]);
        if (static_cast<long long>(out.size()) < sp.target) fail(id, "recombined set is short");
        return out;
      }
    }
    fail(id, "unknown step");
  }

  const Certificate& cert_;
  std::uint64_t budget_;
  std::vector<char> visited_;
};

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
  json j;
  j["format"] = "pig-certificate/1";
  j["graph_hash"] = cert.graph_hash;
  j["ratio"] = cert.c.str();
  j["n"] = cert.n;
  j["bound"] = cert.bound;
  j["size"] = cert.set.size();
  j["set"] = ext(cert.set);
  json trace = json::array();
  for (const auto& st : cert.trace) trace.push_back(step_json(st));
  j["trace"] = trace;
  return j.dump(1) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    if (j.at("format").get<std::string>() != "pig-certificate/1") throw std::invalid_argument("unknown format");
    Certificate cert;
    cert.graph_hash = j.at("graph_hash").get<std::string>();
    cert.c = Ratio::parse(j.at("ratio").get<std::string>());
    cert.n = j.at("n").get<int>();
    cert.bound = j.at("bound").get<long long>();
    cert.set = internal(j.at("set"));
    for (const auto& st : j.at("trace")) cert.trace.push_back(step_from(st));
    return cert;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
}

CheckReport check_certificate(const EmbeddedGraph& g, const Certificate& cert, std::uint64_t budget) {
  CheckReport r;
  if (cert.graph_hash != graph_hash(g)) {
    r.message = "graph hash mismatch";
    return r;
  }
  if (cert.n != g.vertex_count() || cert.bound != cert.c.ceil_of(g.vertex_count())) {
    r.message = "header ledger mismatch";
    return r;
  }
  if (cert.trace.empty()) {
    r.message = "empty trace";
    return r;
  }
  try {
    Replay replay(cert, budget);
    VertexSet s = replay.run(g, 0, "");
    if (s != cert.set) {
      r.failed_step = 0;
      r.message = "replayed set differs from the recorded set";
      return r;
    }
    if (static_cast<long long>(s.size()) < cert.bound) {
      r.message = "set below ceil(c n)";
      return r;
    }
  } catch (const Replay::StepFailure& f) {
    r.failed_step = f.step;
    r.message = "step " + std::to_string(f.step) + ": " + f.why;
    return r;
  } catch (const std::exception& e) {
    r.message = e.what();
    return r;
  }
  r.ok = true;
  r.message = "ok";
  return r;
}

}  // namespace pig
