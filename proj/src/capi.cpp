#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pig/discharge.hpp"
#include "pig/extract.hpp"
#include "pig/pig.h"

struct pig_graph {
  pig::EmbeddedGraph g;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;
thread_local std::string last_diagnostic;
thread_local bool has_diagnostic = false;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pig_status fail(pig_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

// Runs f, mapping library exceptions to status codes.
template <class F>
pig_status guarded(F&& f) {
  last_error.clear();
  has_diagnostic = false;
  try {
    return f();
  } catch (const pig::IncompletenessDiagnostic& e) {
    last_diagnostic = pig::serialize_rotation_graph(e.graph());
    has_diagnostic = true;
    return fail(PIG_ERR_INCOMPLETE, e.what());
  } catch (const pig::BoundFailure& e) {
    return fail(PIG_ERR_BOUND, e.what());
  } catch (const pig::LiftError& e) {
    return fail(PIG_ERR_BOUND, e.what());
  } catch (const pig::BudgetExceeded& e) {
    return fail(PIG_ERR_BUDGET, e.what());
  } catch (const pig::GraphError& e) {
    return fail(e.kind() == pig::GraphErrorKind::bad_vertex || e.kind() == pig::GraphErrorKind::precondition
                    ? PIG_ERR_ARGUMENT
                    : PIG_ERR_PARSE,
                e.what());
  } catch (const std::invalid_argument& e) {
    return fail(PIG_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(PIG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PIG_ERR_INTERNAL, "unknown error");
  }
}

std::uint64_t budget_or_default(std::uint64_t b) { return b ? b : pig::default_oracle_budget(); }

pig::Ratio ratio_or_default(const char* r) { return r ? pig::Ratio::parse(r) : pig::kThreeThirteenths; }

json ext(const pig::VertexSet& s) {
  json a = json::array();
  for (auto v : s) a.push_back(v + 1);
  return a;
}

std::string charge_str(const pig::Charge& c) {
  if (c.denominator() == 1) return std::to_string(c.numerator());
  return std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

json plan_json(const pig::EmbeddedGraph& g, const pig::CertifiedPlan& cp) {
  const auto& p = cp.plan;
  json j;
  j["step"] = "reduce";
  j["plan"] = pig::plan_kind_name(p.kind);
  j["provenance"] = p.provenance;
  j["S"] = ext(p.S);
  j["J"] = ext(p.J);
  j["interior"] = ext(p.interior);
  json parts = json::array();
  for (const auto& part : p.parts) parts.push_back(ext(part));
  j["parts"] = parts;
  j["t"] = p.t();
  j["k"] = p.k;
  j["gain"] = p.gain();
  json checks = json::array();
  for (const auto& c : cp.checks) {
    json x = json::array();
    for (int i : c.X) x.push_back(i + 1);
    checks.push_back({{"X", x}, {"alpha", c.alpha}, {"need", c.need}});
  }
  j["checks"] = checks;
  auto ap = pig::apply_plan(g, cp);
  j["n_reduced"] = ap.reduced.vertex_count();
  j["contracted"] = ext(ap.ctx.contracted);
  return j;
}

json step_json(const pig::EmbeddedGraph& g, const pig::Ratio& c, std::uint64_t budget) {
  json j;
  j["n"] = g.vertex_count();
  j["ratio"] = c.str();
  j["bound"] = c.ceil_of(g.vertex_count());
  auto comps = g.components();
  if (comps.size() > 1) {
    json cs = json::array();
    for (const auto& comp : comps) cs.push_back(ext(comp));
    j["step"] = "components";
    j["components"] = cs;
    return j;
  }
  if (g.vertex_count() <= 20) {
    j["step"] = "exact";
    j["set"] = ext(pig::mis_exact(g, budget));
    return j;
  }
  if (!g.is_triangulation()) {
    auto tr = pig::triangulate(g);
    json es = json::array();
    for (auto [u, v] : tr.added_edges) es.push_back(json::array({u + 1, v + 1}));
    j["step"] = "triangulate";
    j["added_edges"] = es;
    return j;
  }
  if (auto p = pig::find_low_degree_plan(g, c)) {
    j.update(plan_json(g, pig::certify_plan(g, *p, budget)));
    return j;
  }
  for (const auto& X : pig::separating_triangles(g)) {
    auto sp = pig::split_plan(g, X, c);
    j["step"] = "split";
    j["X"] = ext({sp.X[0], sp.X[1], sp.X[2]});
    j["N1"] = sp.N1;
    j["N2"] = sp.N2;
    j["chosen"] = pig::split_claim_name(sp.chosen);
    j["target"] = sp.target;
    json cands = json::array();
    for (const auto& cand : sp.candidates) cands.push_back({{"recipe", cand.recipe}, {"guarantee", cand.guarantee}});
    j["candidates"] = cands;
    j["instances"] = pig::split_labels(sp.chosen);
    return j;
  }
  if (auto cp = pig::find_config_plan(g, c, budget)) {
    j.update(plan_json(g, *cp));
    return j;
  }
  throw pig::IncompletenessDiagnostic("no certified reduction applies", g);
}

}  // namespace

extern "C" {

const char* pig_last_error(void) { return last_error.c_str(); }

const char* pig_last_diagnostic_graph(void) { return has_diagnostic ? last_diagnostic.c_str() : nullptr; }

const char* pig_status_name(pig_status s) {
  switch (s) {
    case PIG_OK: return "ok";
    case PIG_ERR_ARGUMENT: return "invalid argument";
    case PIG_ERR_PARSE: return "parse error";
    case PIG_ERR_IO: return "i/o error";
    case PIG_ERR_BOUND: return "bound failure";
    case PIG_ERR_INCOMPLETE: return "incompleteness diagnostic";
    case PIG_ERR_BUDGET: return "oracle budget exceeded";
    case PIG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void pig_string_free(char* s) { std::free(s); }

pig_status pig_graph_parse(const char* text, pig_graph** out) {
  if (!text || !out) return fail(PIG_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new pig_graph{pig::parse_rotation_graph(text)};
    return PIG_OK;
  });
}

pig_status pig_graph_load(const char* path, pig_graph** out) {
  if (!path || !out) return fail(PIG_ERR_ARGUMENT, "null argument");
  std::ifstream in(path);
  if (!in) return fail(PIG_ERR_IO, std::string("cannot open ") + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return pig_graph_parse(ss.str().c_str(), out);
}

pig_status pig_graph_generate(uint64_t seed, int n, int min_degree_5, int no_separating_triangle, pig_graph** out) {
  if (!out) return fail(PIG_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new pig_graph{pig::generate({seed, n, min_degree_5 != 0, no_separating_triangle != 0})};
    return PIG_OK;
  });
}

void pig_graph_free(pig_graph* g) { delete g; }

int pig_graph_vertex_count(const pig_graph* g) { return g ? g->g.vertex_count() : -1; }

int pig_graph_edge_count(const pig_graph* g) { return g ? g->g.edge_count() : -1; }

pig_status pig_graph_serialize(const pig_graph* g, char** text) {
  if (!g || !text) return fail(PIG_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *text = dup(pig::serialize_rotation_graph(g->g));
    return PIG_OK;
  });
}

pig_status pig_graph_hash(const pig_graph* g, char** hex) {
  if (!g || !hex) return fail(PIG_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *hex = dup(pig::graph_hash(g->g));
    return PIG_OK;
  });
}

pig_status pig_alpha(const pig_graph* g, uint64_t budget, int* alpha, char** set_json) {
  if (!g || !alpha) return fail(PIG_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    auto s = pig::mis_exact(g->g, budget_or_default(budget));
    *alpha = static_cast<int>(s.size());
    if (set_json) *set_json = dup(ext(s).dump());
    return PIG_OK;
  });
}

pig_status pig_extract(const pig_graph* g, const char* ratio, uint64_t budget, char** cert_json,
                       pig_extract_info* info) {
  if (!g || !cert_json) return fail(PIG_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    pig::ExtractOptions opts;
    opts.budget = budget_or_default(budget);
    auto cert = pig::extract(g->g, ratio_or_default(ratio), opts);
    if (info) *info = {cert.n, cert.bound, static_cast<long long>(cert.set.size()), static_cast<int>(cert.trace.size())};
    *cert_json = dup(pig::certificate_to_json(cert));
    return PIG_OK;
  });
}

pig_status pig_check_certificate(const pig_graph* g, const char* cert_json, uint64_t budget, int* ok,
                                 int* failed_step, char** message) {
  if (!g || !cert_json || !ok) return fail(PIG_ERR_ARGUMENT, "null argument");
  last_error.clear();
  pig::Certificate cert;
  try {
    cert = pig::certificate_from_json(cert_json);
  } catch (const std::exception& e) {
    return fail(PIG_ERR_PARSE, e.what());
  }
  return guarded([&] {
    auto r = pig::check_certificate(g->g, cert, budget_or_default(budget));
    *ok = r.ok ? 1 : 0;
    if (failed_step) *failed_step = r.failed_step;
    if (message) *message = dup(r.message);
    return PIG_OK;
  });
}

pig_status pig_discharge(const pig_graph* g, const char* rules, char** out) {
  if (!g || !rules || !out) return fail(PIG_ERR_ARGUMENT, "null argument");
  pig::RuleSet rs;
  if (std::strcmp(rules, "warmup") == 0) rs = pig::RuleSet::warmup;
  else if (std::strcmp(rules, "main") == 0) rs = pig::RuleSet::main;
  else return fail(PIG_ERR_ARGUMENT, std::string("unknown rule set ") + rules);
  return guarded([&] {
    auto states = pig::run_rules(g->g, rs);
    json j;
    j["rules"] = rules;
    j["n"] = g->g.vertex_count();
    j["m"] = g->g.edge_count();
    json phases = json::array();
    for (const auto& st : states) {
      json charges = json::object();
      for (auto v : g->g.vertices()) charges[std::to_string(v + 1)] = charge_str(st.charge[v]);
      phases.push_back({{"phase", pig::phase_name(st.phase)},
                        {"total", charge_str(st.total())},
                        {"charges", charges},
                        {"negative", ext(pig::negative_vertices(st))}});
    }
    j["phases"] = phases;
    json ledger = json::array();
    for (const auto& t : states.back().ledger)
      ledger.push_back(
          {{"from", t.giver + 1}, {"to", t.receiver + 1}, {"amount", charge_str(t.amount)}, {"rule", t.rule}});
    j["ledger"] = ledger;
    *out = dup(j.dump(1) + "\n");
    return PIG_OK;
  });
}

pig_status pig_configs(const pig_graph* g, char** out) {
  if (!g || !out) return fail(PIG_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    json list = json::array();
    for (const auto& m : pig::find_configs(g->g)) {
      json roles = json::array();
      for (const auto& [label, v] : m.roles) roles.push_back(json::array({label, v + 1}));
      list.push_back({{"config", pig::config_name(m.id)}, {"roles", roles}, {"J", ext(m.J())}});
    }
    json j;
    j["count"] = list.size();
    j["matches"] = list;
    *out = dup(j.dump(1) + "\n");
    return PIG_OK;
  });
}

pig_status pig_reduce_step(const pig_graph* g, const char* ratio, uint64_t budget, char** out) {
  if (!g || !out) return fail(PIG_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup(step_json(g->g, ratio_or_default(ratio), budget_or_default(budget)).dump(1) + "\n");
    return PIG_OK;
  });
}

pig_status pig_corpus(int n, int count, uint64_t first_seed, int min_degree_5, int no_separating_triangle,
                      const char* ratio, uint64_t budget, int threads, char** report_json, pig_corpus_info* info) {
  if (!report_json) return fail(PIG_ERR_ARGUMENT, "null argument");
  if (count < 0 || n < 0) return fail(PIG_ERR_ARGUMENT, "negative corpus size");
  return guarded([&] {
    const auto c = ratio_or_default(ratio);
    std::vector<pig::GenSpec> specs;
    for (int i = 0; i < count; ++i)
      specs.push_back({first_seed + static_cast<std::uint64_t>(i), n, min_degree_5 != 0, no_separating_triangle != 0});
    pig::ExtractOptions opts;
    opts.budget = budget_or_default(budget);
    auto rep = pig::corpus_run(specs, c, opts, threads);
    json entries = json::array();
    double total_ratio = 0;
    for (const auto& e : rep.entries) {
      json x = {{"seed", e.spec.seed}, {"n", e.n},          {"m", e.m},
                {"bound", e.bound},    {"size", e.size},    {"ok", e.ok},
                {"diagnostic", e.diagnostic}, {"millis", std::round(e.millis * 1000) / 1000}};
      if (!e.message.empty()) x["message"] = e.message;
      if (e.ok && e.n > 0) total_ratio += static_cast<double>(e.size) / e.n;
      entries.push_back(x);
    }
    json j;
    j["ratio"] = c.str();
    j["count"] = count;
    j["successes"] = rep.successes();
    j["diagnostics"] = rep.diagnostics();
    j["mean_size_ratio"] = rep.successes() ? total_ratio / rep.successes() : 0.0;
    j["entries"] = entries;
    if (info) *info = {count, rep.successes(), rep.diagnostics()};
    *report_json = dup(j.dump(1) + "\n");
    return PIG_OK;
  });
}

}  // extern "C"
