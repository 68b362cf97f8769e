#include <algorithm>
#include <random>

#include "pig/graph.hpp"

namespace pig {

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t k) { return static_cast<std::size_t>(rng() % k); }

EmbeddedGraph k4() {
  const std::array<Triangle, 4> t{{{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3}}};
  return EmbeddedGraph::from_triangles(4, t);
}

// Stacked insertions into random faces followed by random diagonal flips.
EmbeddedGraph random_triangulation(Rng& rng, int n) {
  GraphBuilder b(k4());
  std::vector<Triangle> tris{{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3}};
  for (int k = 4; k < n; ++k) {
    std::size_t f = pick(rng, tris.size());
    auto [u, v, w] = tris[f];
    Vertex x = b.add_vertex();
    b.insert_after(u, w, x);
    b.insert_after(v, u, x);
    b.insert_after(w, v, x);
    b.set_rotation(x, {v, u, w});
    tris[f] = {u, v, x};
    tris.push_back({v, w, x});
    tris.push_back({w, u, x});
  }
  const auto& g = b.peek();
  const long long steps = 10LL * (3LL * n - 6);
  for (long long s = 0; s < steps; ++s) {
    Vertex u = static_cast<Vertex>(pick(rng, static_cast<std::size_t>(n)));
    Vertex v = g.rotation(u)[pick(rng, g.rotation(u).size())];
    if (g.degree(u) <= 3 || g.degree(v) <= 3) continue;
    Vertex x = g.next_around(v, u), y = g.next_around(u, v);
    if (x == y || g.adjacent(x, y)) continue;
    b.flip(u, v);
  }
  return b.finish();
}

// Layered antiprism: `layers` cycles of length `ring`, capped at both ends.
// Layer vertices touching a cap have degree 5, inner layers degree 6, caps degree `ring`.
EmbeddedGraph capped_antiprism(int layers, int ring) {
  const int n = layers * ring + 2;
  const Vertex top = n - 2, bottom = n - 1;
  auto at = [ring](int l, int i) { return l * ring + ((i % ring) + ring) % ring; };
  std::vector<Triangle> t;
  for (int i = 0; i < ring; ++i) {
    t.push_back({top, at(0, i), at(0, i + 1)});
    for (int l = 0; l + 1 < layers; ++l) {
      t.push_back({at(l, i), at(l + 1, i), at(l, i + 1)});
      t.push_back({at(l, i + 1), at(l + 1, i), at(l + 1, i + 1)});
    }
    t.push_back({bottom, at(layers - 1, i + 1), at(layers - 1, i)});
  }
  return EmbeddedGraph::from_triangles(n, t);
}

// Splits v into v and a new vertex taking the rotation arc r[i..i+arc-1].
// With arc >= 4 and deg(v) + 2 - arc >= 4 both halves keep degree >= 5, and no
// separating triangle appears when none existed before.
void split_vertex(GraphBuilder& b, Vertex v, std::size_t i, std::size_t arc) {
  const auto rot = b.peek().rotation(v);
  const std::size_t d = rot.size();
  const std::size_t j = (i + arc - 1) % d;
  Vertex ui = rot[i], uj = rot[j], ui1 = rot[(i + 1) % d];
  Vertex x = b.add_vertex();
  std::vector<Vertex> rx, rv;
  for (std::size_t k = 0; k < arc; ++k) rx.push_back(rot[(i + k) % d]);
  rx.push_back(v);
  for (std::size_t k = 0; k < d + 2 - arc; ++k) rv.push_back(rot[(j + k) % d]);
  rv.push_back(x);
  for (std::size_t k = 1; k + 1 < arc; ++k) {
    Vertex u = rot[(i + k) % d];
    auto r = b.peek().rotation(u);
    std::replace(r.begin(), r.end(), v, x);
    b.set_rotation(u, std::move(r));
  }
  b.insert_after(uj, v, x);
  b.insert_after(ui, ui1, x);
  b.set_rotation(x, std::move(rx));
  b.set_rotation(v, std::move(rv));
}

bool no_extra_common_neighbor(const EmbeddedGraph& g, Vertex x, Vertex y, Vertex u, Vertex v) {
  for (Vertex z : g.rotation(x))
    if (z != u && z != v && g.adjacent(z, y)) return false;
  return true;
}

std::optional<EmbeddedGraph> structured_attempt(Rng& rng, int n, int attempt) {
  const int ring = 5 + attempt % 5;
  const int layers = (n - 2) / ring;
  if (layers < 2) return std::nullopt;
  GraphBuilder b(capped_antiprism(layers, ring));
  int have = layers * ring + 2;
  while (have < n) {
    const auto& g = b.peek();
    std::vector<Vertex> big;
    for (Vertex v = 0; v < g.capacity(); ++v)
      if (g.degree(v) >= 6) big.push_back(v);
    if (big.empty()) return std::nullopt;
    Vertex v = big[pick(rng, big.size())];
    const std::size_t d = static_cast<std::size_t>(g.degree(v));
    std::size_t arc = 4 + pick(rng, d + 2 - 8 + 1);
    split_vertex(b, v, pick(rng, d), arc);
    ++have;
  }
  const auto& g = b.peek();
  const long long steps = 10LL * (3LL * n - 6);
  for (long long s = 0; s < steps; ++s) {
    Vertex u = static_cast<Vertex>(pick(rng, static_cast<std::size_t>(n)));
    Vertex v = g.rotation(u)[pick(rng, g.rotation(u).size())];
    if (g.degree(u) < 6 || g.degree(v) < 6) continue;
    Vertex x = g.next_around(v, u), y = g.next_around(u, v);
    if (x == y || g.adjacent(x, y) || !no_extra_common_neighbor(g, x, y, u, v)) continue;
    b.flip(u, v);
  }
  return b.finish();
}

}  // namespace

EmbeddedGraph generate(const GenSpec& spec) {
  if (spec.n < 4) throw GraphError(GraphErrorKind::precondition, "generate needs n >= 4");
  Rng rng(spec.seed);
  if (!spec.min_degree_5 && !spec.no_separating_triangle) return random_triangulation(rng, spec.n);
  constexpr int kBudget = 1000;
  for (int attempt = 0; attempt < kBudget; ++attempt) {
    auto g = structured_attempt(rng, spec.n, attempt);
    if (!g) continue;
    if (spec.min_degree_5 && g->min_degree() < 5) continue;
    if (spec.no_separating_triangle && !separating_triangles(*g).empty()) continue;
    return *std::move(g);
  }
  throw GraphError(GraphErrorKind::precondition,
                   "generator could not satisfy the requested flags for n = " + std::to_string(spec.n) +
                       " within " + std::to_string(kBudget) + " attempts");
}

}  // namespace pig
