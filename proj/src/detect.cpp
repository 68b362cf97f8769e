#include <algorithm>
#include <set>

#include "pig/discharge.hpp"
#include "pig/reduce.hpp"

namespace pig {

namespace {

constexpr ConfigId kPriority[] = {ConfigId::H,           ConfigId::JIsTwo,      ConfigId::alpha666,
                                  ConfigId::alpha6567,   ConfigId::alpha665big, ConfigId::alpha7566,
                                  ConfigId::alpha556tri, ConfigId::alpha755big, ConfigId::reduce7vertex};

int common_count(const EmbeddedGraph& g, Vertex u, Vertex v) {
  int c = 0;
  for (Vertex x : g.rotation(u))
    if (g.adjacent(x, v)) ++c;
  return c;
}

// Vertices at distance exactly two, sorted.
VertexSet second_ring(const EmbeddedGraph& g, Vertex v) {
  VertexSet out;
  for (Vertex u : g.rotation(v))
    for (Vertex w : g.rotation(u))
      if (w != v && !g.adjacent(v, w)) out.push_back(w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool pairwise_nonadjacent(const EmbeddedGraph& g, std::initializer_list<Vertex> vs) {
  for (auto i = vs.begin(); i != vs.end(); ++i)
    for (auto j = i + 1; j != vs.end(); ++j)
      if (*i == *j || g.adjacent(*i, *j)) return false;
  return true;
}

std::size_t nbhd_size(const EmbeddedGraph& g, const VertexSet& J) { return open_neighborhood(g, J).size(); }

// Apex of the face on edge ab that does not contain c.
Vertex apex(const EmbeddedGraph& g, Vertex a, Vertex b, Vertex c) {
  Vertex p = g.next_around(a, b), q = g.next_around(b, a);
  return p == c ? q : p;
}

bool distance_two_with_two_common(const EmbeddedGraph& g, Vertex u, Vertex w) {
  return u != w && !g.adjacent(u, w) && common_count(g, u, w) >= 2;
}

ConfigurationMatch make(ConfigId id, std::vector<std::pair<std::string, Vertex>> roles) {
  return ConfigurationMatch{id, std::move(roles)};
}

bool has_five_neighbor(const EmbeddedGraph& g, Vertex v) {
  for (Vertex u : g.rotation(v))
    if (g.degree(u) == 5) return true;
  return false;
}

}  // namespace

const char* config_name(ConfigId id) {
  switch (id) {
    case ConfigId::H: return "H";
    case ConfigId::JIsTwo: return "JIsTwo/alpha55";
    case ConfigId::alpha666: return "alpha666";
    case ConfigId::alpha6567: return "alpha6567";
    case ConfigId::alpha665big: return "alpha665big";
    case ConfigId::alpha7566: return "alpha7566";
    case ConfigId::alpha556tri: return "alpha556tri";
    case ConfigId::alpha755big: return "alpha755big";
    case ConfigId::reduce7vertex: return "reduce7vertex";
  }
  return "?";
}

std::optional<ConfigId> config_from_name(const std::string& s) {
  for (ConfigId id : kPriority)
    if (s == config_name(id)) return id;
  if (s == "JIsTwo" || s == "alpha55") return ConfigId::JIsTwo;
  return std::nullopt;
}

Vertex ConfigurationMatch::role(const std::string& label) const {
  for (const auto& [k, v] : roles)
    if (k == label) return v;
  return -1;
}

VertexSet ConfigurationMatch::J() const {
  VertexSet out;
  switch (id) {
    case ConfigId::H: out = {role("w"), role("x")}; break;
    case ConfigId::JIsTwo: out = {role("x"), role("y")}; break;
    case ConfigId::reduce7vertex: return {};
    default: out = {role("u1"), role("u2"), role("u3")}; break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool check_match(const EmbeddedGraph& g, const ConfigurationMatch& m) {
  for (const auto& [k, v] : m.roles)
    if (!g.alive(v)) return false;
  auto d = [&](const char* r) { return g.degree(m.role(r)); };
  auto R = [&](const char* r) { return m.role(r); };
  switch (m.id) {
    case ConfigId::H: {
      Vertex u = R("u"), v = R("v"), w = R("w"), x = R("x");
      if (u < 0 || v < 0 || w < 0 || x < 0 || w == x || !g.adjacent(u, v)) return false;
      if (d("w") != 5 || d("x") > 6) return false;
      Vertex p = g.next_around(u, v), q = g.next_around(v, u);
      if (!((p == w && q == x) || (p == x && q == w))) return false;
      return g.adjacent(w, u) && g.adjacent(w, v) && g.adjacent(x, u) && g.adjacent(x, v);
    }
    case ConfigId::JIsTwo: {
      Vertex x = R("x"), y = R("y");
      if (x < 0 || y < 0 || x == y || g.adjacent(x, y) || common_count(g, x, y) == 0) return false;
      return nbhd_size(g, {x, y}) <= 8;
    }
    case ConfigId::alpha666:
    case ConfigId::alpha6567:
    case ConfigId::alpha7566: {
      Vertex v = R("v"), u1 = R("u1"), u2 = R("u2"), u3 = R("u3");
      if (v < 0 || u1 < 0 || u2 < 0 || u3 < 0) return false;
      if (!g.adjacent(v, u1) || !g.adjacent(v, u2) || !g.adjacent(v, u3)) return false;
      if (!pairwise_nonadjacent(g, {u1, u2, u3})) return false;
      if (m.id == ConfigId::alpha666) return d("v") == 6 && d("u1") <= 6 && d("u2") <= 6 && d("u3") <= 6;
      if (m.id == ConfigId::alpha6567) return d("v") == 6 && d("u1") == 5 && d("u2") <= 6 && d("u3") == 7;
      return d("v") == 7 && d("u1") == 5 && d("u2") <= 6 && d("u3") <= 6;
    }
    case ConfigId::alpha665big:
    case ConfigId::alpha755big: {
      Vertex u1 = R("u1"), u2 = R("u2"), u3 = R("u3");
      if (u1 < 0 || u2 < 0 || u3 < 0 || !pairwise_nonadjacent(g, {u1, u2, u3})) return false;
      if (!distance_two_with_two_common(g, u1, u2) || !distance_two_with_two_common(g, u1, u3)) return false;
      if (m.id == ConfigId::alpha665big) return d("u1") == 6 && d("u2") == 5 && d("u3") <= 6;
      return d("u1") == 7 && d("u2") == 5 && d("u3") == 5;
    }
    case ConfigId::alpha556tri: {
      Vertex v1 = R("v1"), v2 = R("v2"), v3 = R("v3"), u1 = R("u1"), u2 = R("u2"), u3 = R("u3");
      if (v1 < 0 || v2 < 0 || v3 < 0 || u1 < 0 || u2 < 0 || u3 < 0) return false;
      if (!g.adjacent(v1, v2) || !g.adjacent(v2, v3) || !g.adjacent(v3, v1)) return false;
      if (d("v1") < 6 || d("v2") < 6 || d("v3") < 6) return false;
      if (!g.adjacent(u1, v1) || !g.adjacent(u1, v2) || !g.adjacent(u2, v2) || !g.adjacent(u2, v3) ||
          !g.adjacent(u3, v3) || !g.adjacent(u3, v1))
        return false;
      if (!pairwise_nonadjacent(g, {u1, u2, u3})) return false;
      return nbhd_size(g, {u1, u2, u3}) <= 13;
    }
    case ConfigId::reduce7vertex: {
      Vertex v = R("v");
      if (v < 0 || g.degree(v) != 7 || has_five_neighbor(g, v)) return false;
      int good = 0;
      for (Vertex u : g.rotation(v))
        if (g.degree(u) == 6 && has_five_neighbor(g, u)) ++good;
      return good >= 5;
    }
  }
  return false;
}

std::vector<ConfigurationMatch> detect(const EmbeddedGraph& g, ConfigId id) {
  std::vector<ConfigurationMatch> out;
  const auto V = g.vertices();
  auto sorted_nb = [&](Vertex v) {
    VertexSet s = g.rotation(v);
    std::sort(s.begin(), s.end());
    return s;
  };
  switch (id) {
    case ConfigId::H:
      for (Vertex u : V)
        for (Vertex v : sorted_nb(u)) {
          if (v <= u) continue;
          Vertex p = g.next_around(u, v), q = g.next_around(v, u);
          if (p == q || !g.adjacent(p, v) || !g.adjacent(q, u)) continue;
          for (auto [w, x] : {std::pair{p, q}, std::pair{q, p}})
            if (g.degree(w) == 5 && g.degree(x) <= 6) out.push_back(make(id, {{"u", u}, {"v", v}, {"w", w}, {"x", x}}));
        }
      break;
    case ConfigId::JIsTwo:
      for (Vertex x : V)
        for (Vertex y : second_ring(g, x))
          if (y > x && nbhd_size(g, {x, y}) <= 8) out.push_back(make(id, {{"x", x}, {"y", y}}));
      break;
    case ConfigId::alpha666:
    case ConfigId::alpha6567:
    case ConfigId::alpha7566: {
      const int center = id == ConfigId::alpha7566 ? 7 : 6;
      for (Vertex v : V) {
        if (g.degree(v) != center) continue;
        const VertexSet nb = sorted_nb(v);
        for (Vertex u1 : nb)
          for (Vertex u2 : nb)
            for (Vertex u3 : nb) {
              if (!pairwise_nonadjacent(g, {u1, u2, u3})) continue;
              const int d1 = g.degree(u1), d2 = g.degree(u2), d3 = g.degree(u3);
              bool ok = false;
              if (id == ConfigId::alpha666) ok = u1 < u2 && u2 < u3 && d1 <= 6 && d2 <= 6 && d3 <= 6;
              if (id == ConfigId::alpha6567) ok = d1 == 5 && d2 <= 6 && d3 == 7;
              if (id == ConfigId::alpha7566) ok = d1 == 5 && u2 < u3 && d2 <= 6 && d3 <= 6;
              if (ok) out.push_back(make(id, {{"v", v}, {"u1", u1}, {"u2", u2}, {"u3", u3}}));
            }
      }
      break;
    }
    case ConfigId::alpha665big:
    case ConfigId::alpha755big: {
      const int center = id == ConfigId::alpha665big ? 6 : 7;
      for (Vertex u1 : V) {
        if (g.degree(u1) != center) continue;
        VertexSet ring;
        for (Vertex w : second_ring(g, u1))
          if (g.degree(w) <= 6 && common_count(g, u1, w) >= 2) ring.push_back(w);
        for (Vertex u2 : ring)
          for (Vertex u3 : ring) {
            if (u2 == u3 || g.adjacent(u2, u3) || g.degree(u2) != 5) continue;
            if (id == ConfigId::alpha665big && (g.degree(u3) == 5 && u3 < u2)) continue;
            if (id == ConfigId::alpha755big && (g.degree(u3) != 5 || u3 < u2)) continue;
            out.push_back(make(id, {{"u1", u1}, {"u2", u2}, {"u3", u3}}));
          }
      }
      break;
    }
    case ConfigId::alpha556tri: {
      std::set<Triangle> seen;
      for (Vertex a : V)
        for (Vertex b : sorted_nb(a)) {
          if (b <= a) continue;
          Vertex c = g.next_around(b, a);  // face a -> b -> c when c follows a around b
          if (!g.adjacent(a, c) || c <= a) continue;
          Triangle key{a, b, c};
          std::sort(key.begin(), key.end());
          if (!seen.insert(key).second) continue;
          if (g.degree(a) < 6 || g.degree(b) < 6 || g.degree(c) < 6) continue;
          Vertex u1 = apex(g, a, b, c), u2 = apex(g, b, c, a), u3 = apex(g, c, a, b);
          if (!pairwise_nonadjacent(g, {u1, u2, u3})) continue;
          if (nbhd_size(g, {u1, u2, u3}) > 13) continue;
          out.push_back(make(id, {{"v1", a}, {"v2", b}, {"v3", c}, {"u1", u1}, {"u2", u2}, {"u3", u3}}));
        }
      break;
    }
    case ConfigId::reduce7vertex:
      for (Vertex v : V) {
        ConfigurationMatch m = make(id, {{"v", v}});
        if (g.degree(v) == 7 && check_match(g, m)) {
          int i = 1;
          for (Vertex u : g.rotation(v)) m.roles.push_back({"u" + std::to_string(i++), u});
          out.push_back(std::move(m));
        }
      }
      break;
  }
  std::stable_sort(out.begin(), out.end(), [](const ConfigurationMatch& x, const ConfigurationMatch& y) {
    std::vector<Vertex> a, b;
    for (const auto& r : x.roles) a.push_back(r.second);
    for (const auto& r : y.roles) b.push_back(r.second);
    return a < b;
  });
  return out;
}

std::vector<ConfigurationMatch> find_configs(const EmbeddedGraph& g) {
  std::vector<ConfigurationMatch> out;
  for (ConfigId id : kPriority) {
    auto m = detect(g, id);
    out.insert(out.end(), std::make_move_iterator(m.begin()), std::make_move_iterator(m.end()));
  }
  return out;
}

namespace {

// Vertices within distance two of a negatively charged vertex after the main rules.
std::vector<char> negative_window(const EmbeddedGraph& g) {
  std::vector<char> in(g.capacity(), 0);
  if (!g.is_triangulation() || g.vertex_count() < 4) return in;
  auto states = run_main(g);
  for (Vertex v : negative_vertices(states.back())) {
    in[v] = 1;
    for (Vertex u : g.rotation(v)) {
      in[u] = 1;
      for (Vertex w : g.rotation(u)) in[w] = 1;
    }
  }
  return in;
}

bool touches_window(const ConfigurationMatch& m, const std::vector<char>& window) {
  for (const auto& [k, v] : m.roles)
    if (v >= 0 && v < static_cast<Vertex>(window.size()) && window[v]) return true;
  return false;
}

std::string describe(const ConfigurationMatch& m) {
  std::string s = config_name(m.id);
  s += " [";
  for (std::size_t i = 0; i < m.roles.size(); ++i)
    s += (i ? " " : "") + m.roles[i].first + "=" + std::to_string(m.roles[i].second + 1);
  return s + "]";
}

// Independent sets of size 2 and 3 drawn from `pool`, in lexicographic order.
std::vector<VertexSet> small_independent_sets(const EmbeddedGraph& g, VertexSet pool) {
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      if (g.adjacent(pool[i], pool[j])) continue;
      for (std::size_t k = j + 1; k < pool.size(); ++k)
        if (!g.adjacent(pool[i], pool[k]) && !g.adjacent(pool[j], pool[k]))
          out.push_back({pool[i], pool[j], pool[k]});
      out.push_back({pool[i], pool[j]});
    }
  return out;
}

// Cheap necessary condition: the X = ∅ check with at most three parts.
bool worth_trying(const EmbeddedGraph& g, const VertexSet& J, const Ratio& c) {
  VertexSet S = open_neighborhood(g, J);
  S.insert(S.end(), J.begin(), J.end());
  std::sort(S.begin(), S.end());
  if (S.size() > 20) return false;
  const long long t = std::min<long long>(3, static_cast<long long>(S.size()) - 1);
  return static_cast<long long>(interior(g, S).size()) >= c.ceil_of(static_cast<long long>(S.size()) - t);
}

}  // namespace

std::optional<ConfigurationMatch> find_config(const EmbeddedGraph& g) {
  auto all = find_configs(g);
  if (all.empty()) return std::nullopt;
  auto window = negative_window(g);
  for (const auto& m : all)
    if (touches_window(m, window)) return m;
  return all.front();
}

std::optional<CertifiedPlan> plan_from_match(const EmbeddedGraph& g, const ConfigurationMatch& m, const Ratio& c,
                                             std::uint64_t budget) {
  if (!check_match(g, m)) return std::nullopt;
  const std::string prov = describe(m);
  if (m.id != ConfigId::reduce7vertex) {
    if (auto p = plan_for_set(g, m.J(), c, prov, budget)) return p;
    // Two-element subsets cover branches that fall back on |J| = 2 reductions.
    const VertexSet J = m.J();
    if (J.size() == 3)
      for (std::size_t skip = 0; skip < 3; ++skip) {
        VertexSet sub;
        for (std::size_t i = 0; i < 3; ++i)
          if (i != skip) sub.push_back(J[i]);
        if (auto p = plan_for_set(g, sub, c, prov, budget)) return p;
      }
    return std::nullopt;
  }
  // The 7-vertex case analysis reduces around triples drawn from v, its
  // neighbors and the 5-neighbors of those.
  const Vertex v = m.role("v");
  VertexSet pool{v};
  for (Vertex u : g.rotation(v)) {
    pool.push_back(u);
    for (Vertex w : g.rotation(u))
      if (g.degree(w) == 5) pool.push_back(w);
  }
  for (const auto& J : small_independent_sets(g, pool))
    if (worth_trying(g, J, c))
      if (auto p = plan_for_set(g, J, c, prov, budget)) return p;
  return std::nullopt;
}

std::optional<CertifiedPlan> find_config_plan(const EmbeddedGraph& g, const Ratio& c, std::uint64_t budget) {
  const auto all = find_configs(g);
  const auto window = negative_window(g);
  std::set<VertexSet> tried;
  auto attempt = [&](const ConfigurationMatch& m) -> std::optional<CertifiedPlan> {
    if (m.id != ConfigId::reduce7vertex) {
      VertexSet J = m.J();
      if (!tried.insert(J).second) return std::nullopt;
    }
    return plan_from_match(g, m, c, budget);
  };
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& m : all)
      if (touches_window(m, window) == (pass == 0))
        if (auto p = attempt(m)) return p;

  // Global search over independent pairs and triples with overlapping neighborhoods.
  for (int size = 2; size <= 3; ++size) {
    for (int pass = 0; pass < 2; ++pass)
      for (Vertex u1 : g.vertices()) {
        if ((window[u1] != 0) != (pass == 0)) continue;
        const VertexSet r1 = second_ring(g, u1);
        for (Vertex u2 : r1) {
          if (u2 <= u1) continue;
          if (size == 2) {
            VertexSet J{u1, u2};
            if (tried.count(J) || !worth_trying(g, J, c)) continue;
            if (auto p = plan_for_set(g, J, c, "global |J|=2", budget)) return p;
            continue;
          }
          VertexSet pool = r1;
          const VertexSet r2 = second_ring(g, u2);
          pool.insert(pool.end(), r2.begin(), r2.end());
          std::sort(pool.begin(), pool.end());
          pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
          for (Vertex u3 : pool) {
            if (u3 <= u2 || g.adjacent(u1, u3) || g.adjacent(u2, u3)) continue;
            VertexSet J{u1, u2, u3};
            if (tried.count(J) || !worth_trying(g, J, c)) continue;
            if (auto p = plan_for_set(g, J, c, "global |J|=3", budget)) return p;
          }
        }
      }
  }
  return std::nullopt;
}

}  // namespace pig
