#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "pig/mis.hpp"
#include "support.hpp"

using namespace pig;
using pigtest::fixture;

namespace {

// Lexicographically smallest maximum independent set by full enumeration.
VertexSet brute_lexmin(const EmbeddedGraph& g) {
  auto vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  VertexSet best;
  bool have = false;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    VertexSet s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(vs[i]);
    if (!pigtest::independent_in(g, s)) continue;
    if (!have || s.size() > best.size() || (s.size() == best.size() && s < best)) {
      best = s;
      have = true;
    }
  }
  return best;
}

EmbeddedGraph thinned(std::uint64_t seed, int n, int keep_percent) {
  auto g = generate({seed, n, false, false});
  std::mt19937_64 rng(seed * 31 + 7);
  GraphBuilder b(g);
  for (auto [u, v] : g.edges())
    if (static_cast<int>(rng() % 100) >= keep_percent) {
      b.erase_neighbor(u, v);
      b.erase_neighbor(v, u);
    }
  return b.finish();
}

}  // namespace

TEST_CASE("fixture optima") {
  auto ico = fixture("icosahedron");
  CHECK(mis_exact(ico).size() == 3);
  CHECK(pigtest::brute_alpha(ico) == 3);
  CHECK(mis_exact(fixture("k4")).size() == 1);
  auto empty7 = parse_rotation_graph("7 0\n1:\n2:\n3:\n4:\n5:\n6:\n7:\n");
  CHECK(mis_exact(empty7).size() == 7);
  CHECK(mis_exact(fixture("octahedron")).size() == 2);
  CHECK(mis_exact(fixture("cube")).size() == 4);
}

TEST_CASE("alpha_at_least") {
  auto ico = fixture("icosahedron");
  CHECK(alpha_at_least(ico, 3));
  CHECK_FALSE(alpha_at_least(ico, 4));
  auto c7 = parse_rotation_graph("7 7\n1: 2 7\n2: 3 1\n3: 4 2\n4: 5 3\n5: 6 4\n6: 7 5\n7: 1 6\n");
  CHECK(alpha_at_least(c7, 3));
  CHECK_FALSE(alpha_at_least(c7, 4));
  CHECK_FALSE(alpha_at_least(fixture("k4"), 2));
  CHECK(alpha_at_least(fixture("k4"), 0));
}

TEST_CASE("verify_independent") {
  auto k4 = fixture("k4");
  CHECK_FALSE(verify_independent(k4, std::vector<Vertex>{0, 1}));
  CHECK(verify_independent(k4, std::vector<Vertex>{}));
  CHECK(verify_independent(k4, std::vector<Vertex>{2}));
  CHECK_THROWS_AS(verify_independent(k4, std::vector<Vertex>{9}), GraphError);
}

TEST_CASE("oracle agrees with enumeration on small graphs") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    int n = 6 + static_cast<int>(seed % 15);
    auto g = thinned(seed, n, 40 + static_cast<int>(seed % 5) * 15);
    auto expect = brute_lexmin(g);
    auto got = mis_exact(g);
    CHECK(got == expect);
    CHECK(verify_independent(g, got));
    const int a = static_cast<int>(got.size());
    CHECK(alpha_at_least(g, a));
    CHECK_FALSE(alpha_at_least(g, a + 1));
    auto vs = g.vertices();
    CHECK(alpha(g, vs) == a);
  }
}

TEST_CASE("subset queries match induced graphs") {
  auto g = generate({5, 40, false, false});
  std::vector<Vertex> subset;
  for (Vertex v = 0; v < 40; v += 2) subset.push_back(v);
  auto h = g.induced(subset);
  CHECK(mis_exact(g, subset) == mis_exact(h));
}

TEST_CASE("wide graphs use the dynamic path") {
  auto g = generate({3, 300, false, false});
  auto s = mis_exact(g);
  CHECK(verify_independent(g, s));
  // Planar graphs have alpha >= n/4.
  CHECK(s.size() >= 75);
  auto mid = generate({4, 100, false, false});
  auto t = mis_exact(mid);
  CHECK(verify_independent(mid, t));
  CHECK(alpha_at_least(mid, static_cast<int>(t.size())));
  CHECK_FALSE(alpha_at_least(mid, static_cast<int>(t.size()) + 1));
}

TEST_CASE("budget exhaustion throws") {
  auto g = generate({3, 120, false, false});
  CHECK_THROWS_AS(mis_exact(g, 5), BudgetExceeded);
}

TEST_CASE("closed neighborhood of a 7+-vertex plus more has alpha >= 4") {
  int checked = 0;
  for (int n : {20, 26, 34}) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      auto g = generate({seed, n, true, true});
      for (Vertex v : g.vertices()) {
        if (g.degree(v) < 7) continue;
        std::vector<Vertex> closed{v};
        for (Vertex u : g.rotation(v)) closed.push_back(u);
        std::vector<Vertex> outside;
        for (Vertex x : open_neighborhood(g, std::vector<Vertex>(g.rotation(v)))) {
          if (x != v) outside.push_back(x);
        }
        const std::size_t need = closed.size() >= 10 ? 0 : 10 - closed.size();
        for (std::size_t start = 0; start + need <= outside.size(); ++start) {
          auto s = closed;
          for (std::size_t k = 0; k < need; ++k) s.push_back(outside[start + k]);
          CHECK(alpha_at_least(g, s, 4));
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 0);
}
