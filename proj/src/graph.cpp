#include "pig/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

namespace pig {

std::size_t FaceList::total_length() const {
  std::size_t total = 0;
  for (const auto& w : walks) total += w.size();
  return total;
}

namespace {

// Reverse dart index: rev[v][i] is the position of v in rotation(rot[v][i]).
std::vector<std::vector<int>> reverse_index(const EmbeddedGraph& g) {
  std::vector<std::vector<int>> rev(g.capacity());
  for (Vertex v = 0; v < g.capacity(); ++v) {
    const auto& r = g.rotation(v);
    rev[v].resize(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) rev[v][i] = g.position(r[i], v);
  }
  return rev;
}

[[noreturn]] void fail(GraphErrorKind kind, const std::string& msg) { throw GraphError(kind, msg); }

std::string id_str(Vertex v) { return std::to_string(v + 1); }

}  // namespace

EmbeddedGraph EmbeddedGraph::from_rotations(std::vector<std::vector<Vertex>> rotations) {
  EmbeddedGraph g;
  g.rot_ = std::move(rotations);
  g.alive_.assign(g.rot_.size(), 1);
  g.recount();
  g.validate();
  return g;
}

EmbeddedGraph EmbeddedGraph::from_triangles(int n, std::span<const Triangle> triangles) {
  // Face walk a -> b -> c means next_around(b, a) == c, so c follows a in rotation(b).
  std::vector<std::vector<std::pair<Vertex, Vertex>>> succ(n);
  for (const auto& t : triangles) {
    for (int k = 0; k < 3; ++k) {
      Vertex a = t[k], b = t[(k + 1) % 3], c = t[(k + 2) % 3];
      if (a < 0 || a >= n || b < 0 || b >= n || c < 0 || c >= n)
        fail(GraphErrorKind::bad_vertex, "triangle references unknown vertex");
      succ[b].push_back({a, c});
    }
  }
  std::vector<std::vector<Vertex>> rot(n);
  for (Vertex v = 0; v < n; ++v) {
    auto& s = succ[v];
    if (s.empty()) continue;
    std::sort(s.begin(), s.end());
    Vertex start = s.front().first;
    Vertex cur = start;
    do {
      rot[v].push_back(cur);
      auto it = std::lower_bound(s.begin(), s.end(), std::pair<Vertex, Vertex>{cur, -1});
      if (it == s.end() || it->first != cur)
        fail(GraphErrorKind::invalid_embedding, "triangles do not close around vertex " + id_str(v));
      cur = it->second;
      if (rot[v].size() > s.size())
        fail(GraphErrorKind::invalid_embedding, "inconsistent triangle orientation at vertex " + id_str(v));
    } while (cur != start);
    if (rot[v].size() != s.size())
      fail(GraphErrorKind::invalid_embedding, "vertex " + id_str(v) + " is pinched");
  }
  return from_rotations(std::move(rot));
}

void EmbeddedGraph::recount() {
  alive_count_ = 0;
  long long darts = 0;
  for (std::size_t v = 0; v < rot_.size(); ++v) {
    if (alive_[v]) ++alive_count_;
    darts += static_cast<long long>(rot_[v].size());
  }
  edge_count_ = static_cast<int>(darts / 2);
}

bool EmbeddedGraph::adjacent(Vertex u, Vertex v) const {
  if (!alive(u) || !alive(v)) return false;
  const auto& a = rot_[u].size() <= rot_[v].size() ? rot_[u] : rot_[v];
  Vertex target = rot_[u].size() <= rot_[v].size() ? v : u;
  return std::find(a.begin(), a.end(), target) != a.end();
}

int EmbeddedGraph::position(Vertex v, Vertex u) const {
  const auto& r = rot_[v];
  auto it = std::find(r.begin(), r.end(), u);
  return it == r.end() ? -1 : static_cast<int>(it - r.begin());
}

Vertex EmbeddedGraph::next_around(Vertex v, Vertex u) const {
  int p = position(v, u);
  if (p < 0) fail(GraphErrorKind::precondition, "next_around: not adjacent");
  return rot_[v][(p + 1) % rot_[v].size()];
}

std::vector<Vertex> EmbeddedGraph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(alive_count_);
  for (Vertex v = 0; v < capacity(); ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> EmbeddedGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex v = 0; v < capacity(); ++v)
    for (Vertex u : rot_[v])
      if (v < u) out.push_back({v, u});
  return out;
}

int EmbeddedGraph::min_degree() const {
  int best = -1;
  for (Vertex v = 0; v < capacity(); ++v)
    if (alive_[v] && (best < 0 || degree(v) < best)) best = degree(v);
  return best;
}

std::vector<std::vector<Vertex>> EmbeddedGraph::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(capacity(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < capacity(); ++s) {
    if (!alive_[s] || seen[s]) continue;
    std::vector<Vertex> comp;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : rot_[v])
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool EmbeddedGraph::is_triangulation() const {
  if (alive_count_ < 3 || !connected()) return false;
  for (const auto& w : faces(*this).walks)
    if (w.size() != 3) return false;
  return true;
}

EmbeddedGraph EmbeddedGraph::induced(std::span<const Vertex> keep) const {
  std::vector<char> in(capacity(), 0);
  for (Vertex v : keep) {
    if (!alive(v)) fail(GraphErrorKind::bad_vertex, "induced: unknown vertex " + id_str(v));
    in[v] = 1;
  }
  EmbeddedGraph g;
  g.rot_.resize(capacity());
  g.alive_.assign(capacity(), 0);
  for (Vertex v = 0; v < capacity(); ++v) {
    if (!in[v]) continue;
    g.alive_[v] = 1;
    for (Vertex u : rot_[v])
      if (in[u]) g.rot_[v].push_back(u);
  }
  g.recount();
  g.validate();
  return g;
}

void EmbeddedGraph::validate() const {
  const int cap = capacity();
  std::vector<int> mark(cap, -1);
  for (Vertex v = 0; v < cap; ++v) {
    if (!alive_[v]) {
      if (!rot_[v].empty()) fail(GraphErrorKind::bad_vertex, "deleted vertex keeps edges");
      continue;
    }
    for (Vertex u : rot_[v]) {
      if (u < 0 || u >= cap || !alive_[u])
        fail(GraphErrorKind::bad_vertex, "vertex " + id_str(v) + " lists unknown neighbor");
      if (u == v) fail(GraphErrorKind::not_simple, "loop at vertex " + id_str(v));
      if (mark[u] == v) fail(GraphErrorKind::not_simple, "repeated neighbor at vertex " + id_str(v));
      mark[u] = v;
    }
  }
  for (Vertex v = 0; v < cap; ++v)
    for (Vertex u : rot_[v])
      if (position(u, v) < 0)
        fail(GraphErrorKind::asymmetric,
             "vertex " + id_str(v) + " lists " + id_str(u) + " but not conversely");

  // Euler trace per component: n_i - m_i + f_i == 2 whenever the component has an edge.
  auto rev = reverse_index(*this);
  std::vector<std::vector<char>> used(cap);
  for (Vertex v = 0; v < cap; ++v) used[v].assign(rot_[v].size(), 0);
  std::vector<int> comp_of(cap, -1);
  auto comps = components();
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (Vertex v : comps[c]) comp_of[v] = static_cast<int>(c);
  std::vector<long long> face_count(comps.size(), 0), dart_count(comps.size(), 0);
  for (Vertex v = 0; v < cap; ++v) {
    if (!alive_[v]) continue;
    dart_count[comp_of[v]] += static_cast<long long>(rot_[v].size());
    for (std::size_t i = 0; i < rot_[v].size(); ++i) {
      if (used[v][i]) continue;
      ++face_count[comp_of[v]];
      Vertex x = v;
      std::size_t j = i;
      while (!used[x][j]) {
        used[x][j] = 1;
        Vertex y = rot_[x][j];
        int back = rev[x][j];
        j = static_cast<std::size_t>((back + 1) % static_cast<int>(rot_[y].size()));
        x = y;
      }
    }
  }
  for (std::size_t c = 0; c < comps.size(); ++c) {
    long long n = static_cast<long long>(comps[c].size());
    long long m = dart_count[c] / 2;
    if (m == 0) continue;
    if (n - m + face_count[c] != 2)
      fail(GraphErrorKind::invalid_embedding,
           "rotation system is not planar (Euler trace " + std::to_string(n) + " - " + std::to_string(m) +
               " + " + std::to_string(face_count[c]) + " != 2)");
  }
}

Vertex GraphBuilder::add_vertex() {
  g_.rot_.emplace_back();
  g_.alive_.push_back(1);
  ++g_.alive_count_;
  return g_.capacity() - 1;
}

void GraphBuilder::remove_vertex(Vertex v) {
  if (!g_.alive(v)) fail(GraphErrorKind::bad_vertex, "remove_vertex: unknown vertex " + id_str(v));
  for (Vertex u : g_.rot_[v]) {
    auto& r = g_.rot_[u];
    r.erase(std::find(r.begin(), r.end(), v));
  }
  g_.edge_count_ -= static_cast<int>(g_.rot_[v].size());
  g_.rot_[v].clear();
  g_.alive_[v] = 0;
  --g_.alive_count_;
}

void GraphBuilder::insert_after(Vertex v, Vertex after, Vertex x) {
  auto& r = g_.rot_[v];
  auto it = std::find(r.begin(), r.end(), after);
  if (it == r.end()) fail(GraphErrorKind::precondition, "insert_after: anchor missing");
  r.insert(it + 1, x);
}

void GraphBuilder::erase_neighbor(Vertex v, Vertex u) {
  auto& r = g_.rot_[v];
  auto it = std::find(r.begin(), r.end(), u);
  if (it == r.end()) fail(GraphErrorKind::precondition, "erase_neighbor: not adjacent");
  r.erase(it);
}

void GraphBuilder::set_rotation(Vertex v, std::vector<Vertex> rotation) { g_.rot_[v] = std::move(rotation); }

void GraphBuilder::flip(Vertex u, Vertex v) {
  Vertex x = g_.next_around(v, u);
  Vertex y = g_.next_around(u, v);
  erase_neighbor(u, v);
  erase_neighbor(v, u);
  insert_after(x, v, y);
  insert_after(y, u, x);
}

EmbeddedGraph GraphBuilder::finish() {
  g_.recount();
  g_.validate();
  return std::move(g_);
}

// ---------------------------------------------------------------------------
// Rotation file format

EmbeddedGraph parse_rotation_graph(std::string_view text) {
  std::vector<std::vector<long long>> lines;
  std::vector<int> line_no;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<long long> nums;
    bool has_colon = false;
    std::size_t i = 0;
    while (i < line.size()) {
      char ch = line[i];
      if (ch == ' ' || ch == '\t' || ch == '\r') {
        ++i;
        continue;
      }
      if (ch == ':') {
        if (has_colon || nums.size() != 1)
          fail(GraphErrorKind::parse, "line " + std::to_string(lineno) + ": misplaced ':'");
        has_colon = true;
        ++i;
        continue;
      }
      long long value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
      if (ec != std::errc() || ptr == line.data() + i)
        fail(GraphErrorKind::parse, "line " + std::to_string(lineno) + ": expected an integer");
      i = static_cast<std::size_t>(ptr - line.data());
      nums.push_back(value);
    }
    if (nums.empty() && !has_colon) continue;
    if (lines.empty()) {
      if (has_colon || nums.size() != 2)
        fail(GraphErrorKind::parse, "line " + std::to_string(lineno) + ": header must be 'n m'");
    } else if (!has_colon) {
      fail(GraphErrorKind::parse, "line " + std::to_string(lineno) + ": expected 'id: neighbors'");
    }
    lines.push_back(std::move(nums));
    line_no.push_back(lineno);
  }
  if (lines.empty()) fail(GraphErrorKind::parse, "empty document");
  long long n = lines[0][0], m = lines[0][1];
  if (n < 0 || m < 0 || n > 10'000'000) fail(GraphErrorKind::parse, "bad header counts");
  if (static_cast<long long>(lines.size()) - 1 != n)
    fail(GraphErrorKind::parse, "expected " + std::to_string(n) + " vertex lines, found " +
                                    std::to_string(lines.size() - 1));
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& nums = lines[k];
    long long id = nums[0];
    if (id < 1 || id > n)
      fail(GraphErrorKind::parse, "line " + std::to_string(line_no[k]) + ": vertex id out of range");
    if (seen[id - 1]) fail(GraphErrorKind::parse, "line " + std::to_string(line_no[k]) + ": duplicate vertex");
    seen[id - 1] = 1;
    for (std::size_t j = 1; j < nums.size(); ++j) {
      if (nums[j] < 1 || nums[j] > n)
        fail(GraphErrorKind::parse, "line " + std::to_string(line_no[k]) + ": neighbor id out of range");
      rot[id - 1].push_back(static_cast<Vertex>(nums[j] - 1));
    }
  }
  auto g = EmbeddedGraph::from_rotations(std::move(rot));
  if (g.edge_count() != m)
    fail(GraphErrorKind::parse, "header says " + std::to_string(m) + " edges, rotations give " +
                                    std::to_string(g.edge_count()));
  return g;
}

std::string serialize_rotation_graph(const EmbeddedGraph& g) {
  std::vector<int> label(g.capacity(), 0);
  int next = 1;
  for (Vertex v = 0; v < g.capacity(); ++v)
    if (g.alive(v)) label[v] = next++;
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (Vertex v = 0; v < g.capacity(); ++v) {
    if (!g.alive(v)) continue;
    out += std::to_string(label[v]);
    out += ':';
    for (Vertex u : g.rotation(v)) {
      out += ' ';
      out += std::to_string(label[u]);
    }
    out += '\n';
  }
  return out;
}

std::string graph_hash(const EmbeddedGraph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : serialize_rotation_graph(g)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// Structural queries

FaceList faces(const EmbeddedGraph& g) {
  FaceList out;
  auto rev = reverse_index(g);
  std::vector<std::vector<char>> used(g.capacity());
  for (Vertex v = 0; v < g.capacity(); ++v) used[v].assign(g.rotation(v).size(), 0);
  for (Vertex v = 0; v < g.capacity(); ++v) {
    for (std::size_t i = 0; i < g.rotation(v).size(); ++i) {
      if (used[v][i]) continue;
      std::vector<Vertex> walk;
      Vertex x = v;
      std::size_t j = i;
      while (!used[x][j]) {
        used[x][j] = 1;
        walk.push_back(x);
        Vertex y = g.rotation(x)[j];
        j = static_cast<std::size_t>((rev[x][j] + 1) % g.degree(y));
        x = y;
      }
      out.walks.push_back(std::move(walk));
    }
  }
  return out;
}

namespace {

// Adds chord walk[i] -- walk[j] inside the face bounded by `walk` and returns the
// two resulting face walks: [walk[i..j]] and [walk[j..], walk[..i]].
std::pair<std::vector<Vertex>, std::vector<Vertex>> add_chord(GraphBuilder& b, const std::vector<Vertex>& walk,
                                                              std::size_t i, std::size_t j) {
  const std::size_t len = walk.size();
  Vertex a = walk[i], c = walk[j];
  b.insert_after(a, walk[(i + len - 1) % len], c);
  b.insert_after(c, walk[(j + len - 1) % len], a);
  std::vector<Vertex> inner(walk.begin() + static_cast<std::ptrdiff_t>(i),
                            walk.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  std::vector<Vertex> outer(walk.begin() + static_cast<std::ptrdiff_t>(j), walk.end());
  outer.insert(outer.end(), walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  return {std::move(inner), std::move(outer)};
}

bool fan_is_simple(const EmbeddedGraph& g, const std::vector<Vertex>& walk, std::size_t i) {
  const std::size_t len = walk.size();
  Vertex a = walk[i];
  std::set<Vertex> seen;
  for (std::size_t k = 2; k + 2 <= len; ++k) {
    Vertex x = walk[(i + k) % len];
    if (x == a || g.adjacent(a, x) || !seen.insert(x).second) return false;
  }
  return true;
}

}  // namespace

TriangulationResult triangulate(const EmbeddedGraph& g) {
  if (g.vertex_count() < 3) fail(GraphErrorKind::precondition, "triangulate needs n >= 3");
  if (!g.connected()) fail(GraphErrorKind::precondition, "triangulate needs a connected graph");
  TriangulationResult result;
  GraphBuilder b(g);
  auto initial = faces(g);
  std::vector<std::vector<Vertex>> work;
  for (auto it = initial.walks.rbegin(); it != initial.walks.rend(); ++it)
    if (it->size() > 3) work.push_back(*it);
  while (!work.empty()) {
    auto walk = std::move(work.back());
    work.pop_back();
    if (walk.size() <= 3) continue;
    const auto& cur = b.peek();
    const std::size_t len = walk.size();

    std::vector<std::size_t> order(len);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return walk[x] < walk[y]; });
    std::optional<std::size_t> fan;
    for (std::size_t i : order)
      if (fan_is_simple(cur, walk, i)) {
        fan = i;
        break;
      }
    if (fan) {
      std::vector<Vertex> rest(walk.begin() + static_cast<std::ptrdiff_t>(*fan), walk.end());
      rest.insert(rest.end(), walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(*fan));
      while (rest.size() > 3) {
        result.added_edges.push_back({std::min(rest[0], rest[2]), std::max(rest[0], rest[2])});
        auto [tri, remaining] = add_chord(b, rest, 0, 2);
        // remaining starts at rest[2]; rotate the apex back to the front.
        std::rotate(remaining.begin(), remaining.end() - 1, remaining.end());
        rest = std::move(remaining);
      }
      continue;
    }
    // Ear insertion, then any simple chord.
    bool done = false;
    for (std::size_t i = 0; i < len && !done; ++i) {
      std::size_t p = (i + len - 1) % len, q = (i + 1) % len;
      Vertex x = walk[p], y = walk[q];
      if (x == y || cur.adjacent(x, y)) continue;
      std::size_t lo = std::min(p, q), hi = std::max(p, q);
      result.added_edges.push_back({std::min(x, y), std::max(x, y)});
      auto [f1, f2] = add_chord(b, walk, lo, hi);
      work.push_back(std::move(f1));
      work.push_back(std::move(f2));
      done = true;
    }
    for (std::size_t i = 0; i < len && !done; ++i)
      for (std::size_t j = i + 2; j < len && !done; ++j) {
        if (i == 0 && j == len - 1) continue;
        Vertex x = walk[i], y = walk[j];
        if (x == y || cur.adjacent(x, y)) continue;
        result.added_edges.push_back({std::min(x, y), std::max(x, y)});
        auto [f1, f2] = add_chord(b, walk, i, j);
        work.push_back(std::move(f1));
        work.push_back(std::move(f2));
        done = true;
      }
    if (!done) fail(GraphErrorKind::precondition, "face admits no simple chord");
  }
  result.graph = b.finish();
  return result;
}

std::vector<Triangle> separating_triangles(const EmbeddedGraph& g) {
  std::vector<Triangle> out;
  const bool tri = g.vertex_count() >= 4 && g.is_triangulation();
  std::set<Triangle> facial;
  if (tri)
    for (auto w : faces(g).walks) {
      std::sort(w.begin(), w.end());
      facial.insert({w[0], w[1], w[2]});
    }
  const std::size_t base_components = g.components().size();
  for (Vertex u = 0; u < g.capacity(); ++u) {
    for (Vertex v : g.rotation(u)) {
      if (v <= u) continue;
      for (Vertex w : g.rotation(v)) {
        if (w <= v || !g.adjacent(u, w)) continue;
        Triangle t{u, v, w};
        bool sep;
        if (tri) {
          sep = !facial.count(t);
        } else {
          std::vector<Vertex> keep;
          for (Vertex x : g.vertices())
            if (x != u && x != v && x != w) keep.push_back(x);
          sep = g.induced(keep).components().size() > base_components;
        }
        if (sep) out.push_back(t);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CommonNeighbors common_neighbors(const EmbeddedGraph& g, Vertex u, Vertex v) {
  if (u == v) fail(GraphErrorKind::precondition, "common_neighbors needs distinct vertices");
  CommonNeighbors out;
  for (Vertex x : g.rotation(u))
    if (g.adjacent(x, v)) out.vertices.push_back(x);
  std::sort(out.vertices.begin(), out.vertices.end());
  std::vector<char> done(out.vertices.size(), 0);
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    if (done[i]) continue;
    std::vector<Vertex> comp{out.vertices[i]};
    done[i] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (std::size_t j = 0; j < out.vertices.size(); ++j)
        if (!done[j] && g.adjacent(comp[k], out.vertices[j])) {
          done[j] = 1;
          comp.push_back(out.vertices[j]);
        }
    std::sort(comp.begin(), comp.end());
    if (comp.size() > 2 || (comp.size() == 2 && !g.adjacent(comp[0], comp[1]))) out.only_k1_k2 = false;
    out.components.push_back(std::move(comp));
  }
  return out;
}

NeighborCycle neighbor_cycle(const EmbeddedGraph& g, Vertex v) {
  NeighborCycle out;
  out.order = g.rotation(v);
  const std::size_t d = out.order.size();
  if (d < 3) return out;
  int edges = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (g.adjacent(out.order[i], out.order[j])) ++edges;
  bool ring = true;
  for (std::size_t i = 0; i < d; ++i)
    if (!g.adjacent(out.order[i], out.order[(i + 1) % d])) ring = false;
  out.induced_cycle = ring && edges == static_cast<int>(d);
  return out;
}

EmbeddedGraph delete_set(const EmbeddedGraph& g, std::span<const Vertex> s) {
  GraphBuilder b(g);
  for (Vertex v : s) b.remove_vertex(v);
  return b.finish();
}

std::pair<EmbeddedGraph, Vertex> contract_set(const EmbeddedGraph& g, std::span<const Vertex> s) {
  if (s.empty()) fail(GraphErrorKind::precondition, "contract_set: empty set");
  for (Vertex v : s)
    if (!g.alive(v)) fail(GraphErrorKind::bad_vertex, "contract_set: unknown vertex " + id_str(v));
  if (!induces_connected(g, s)) fail(GraphErrorKind::precondition, "contract_set: set does not induce a connected subgraph");

  std::vector<char> in_s(g.capacity(), 0), merged(g.capacity(), 0);
  for (Vertex v : s) in_s[v] = 1;
  // Darts (origin, target) around the growing super-vertex, in clockwise order.
  using Dart = std::pair<Vertex, Vertex>;
  Vertex root = *std::min_element(s.begin(), s.end());
  std::vector<Dart> ring;
  for (Vertex u : g.rotation(root)) ring.push_back({root, u});
  merged[root] = 1;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t k = 0; k < ring.size(); ++k) {
      auto [from, to] = ring[k];
      if (!in_s[to] || merged[to]) continue;
      // Contract tree edge from--to: splice to's rotation, starting after `from`.
      const auto& r = g.rotation(to);
      int p = g.position(to, from);
      std::vector<Dart> splice;
      for (std::size_t q = 1; q < r.size(); ++q) splice.push_back({to, r[(p + q) % r.size()]});
      ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(k));
      ring.insert(ring.begin() + static_cast<std::ptrdiff_t>(k), splice.begin(), splice.end());
      merged[to] = 1;
      progress = true;
      break;
    }
  }

  GraphBuilder b(g);
  Vertex w = b.add_vertex();
  std::vector<Vertex> wrot;
  std::vector<char> taken(g.capacity() + 1, 0);
  std::vector<Dart> kept;
  for (const auto& [from, to] : ring) {
    if (in_s[to]) continue;  // loop
    if (taken[to]) continue;  // parallel edge
    taken[to] = 1;
    kept.push_back({from, to});
    wrot.push_back(to);
  }
  // Outside endpoints: replace the kept dart's origin by w, drop the parallel copies.
  for (Vertex t = 0; t < g.capacity(); ++t) {
    if (!taken[t]) continue;
    Vertex keep_from = -1;
    for (const auto& [from, to] : kept)
      if (to == t) keep_from = from;
    std::vector<Vertex> r;
    for (Vertex x : g.rotation(t)) {
      if (!in_s[x]) r.push_back(x);
      else if (x == keep_from) r.push_back(w);
    }
    b.set_rotation(t, std::move(r));
  }
  // Neighbor rotations no longer mention S, so removal only clears S itself.
  for (Vertex v : s) {
    b.set_rotation(v, {});
    b.remove_vertex(v);
  }
  b.set_rotation(w, std::move(wrot));
  return {b.finish(), w};
}

EmbeddedGraph flip_edge(const EmbeddedGraph& g, Vertex u, Vertex v) {
  if (!g.adjacent(u, v)) fail(GraphErrorKind::precondition, "flip_edge: not an edge");
  Vertex x = g.next_around(v, u), y = g.next_around(u, v);
  if (x == y || g.adjacent(x, y)) fail(GraphErrorKind::precondition, "flip_edge: flip would create a parallel edge");
  GraphBuilder b(g);
  b.flip(u, v);
  return b.finish();
}

std::vector<Vertex> open_neighborhood(const EmbeddedGraph& g, std::span<const Vertex> s) {
  std::vector<char> in_s(g.capacity(), 0), in_n(g.capacity(), 0);
  for (Vertex v : s) in_s[v] = 1;
  std::vector<Vertex> out;
  for (Vertex v : s)
    for (Vertex u : g.rotation(v))
      if (!in_s[u] && !in_n[u]) {
        in_n[u] = 1;
        out.push_back(u);
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> interior(const EmbeddedGraph& g, std::span<const Vertex> s) {
  std::vector<char> in_s(g.capacity(), 0);
  for (Vertex v : s) in_s[v] = 1;
  std::vector<Vertex> out;
  for (Vertex v : s) {
    bool inside = true;
    for (Vertex u : g.rotation(v))
      if (!in_s[u]) {
        inside = false;
        break;
      }
    if (inside) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool induces_connected(const EmbeddedGraph& g, std::span<const Vertex> s) {
  if (s.empty()) return false;
  std::vector<char> in_s(g.capacity(), 0), seen(g.capacity(), 0);
  for (Vertex v : s) in_s[v] = 1;
  std::vector<Vertex> stack{s[0]};
  seen[s[0]] = 1;
  std::size_t count = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++count;
    for (Vertex u : g.rotation(v))
      if (in_s[u] && !seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
  }
  std::size_t distinct = 0;
  for (Vertex v : s)
    if (in_s[v]) {
      in_s[v] = 0;
      ++distinct;
    }
  return count == distinct;
}

}  // namespace pig
