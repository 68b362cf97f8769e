#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pig/reduce.hpp"
#include "support.hpp"

using namespace pig;
using pigtest::brute_alpha;
using pigtest::fixture;
using pigtest::independent_in;

namespace {

// Lifts the exact solution of the reduced graph and checks the guarantee directly.
void check_round_trip(const EmbeddedGraph& g, const CertifiedPlan& cp) {
  AppliedPlan ap = apply_plan(g, cp);
  CHECK(ap.reduced.vertex_count() == g.vertex_count() - static_cast<int>(cp.plan.S.size()) + cp.plan.t());
  VertexSet sub = mis_exact(ap.reduced);
  LiftResult lr = lift(sub, ap.ctx);
  CHECK(independent_in(g, lr.set));
  CHECK(static_cast<long long>(lr.set.size()) >= static_cast<long long>(sub.size()) + cp.plan.gain());
  for (const auto& r : lift_every_w(ap.reduced, sub, ap.ctx)) CHECK(independent_in(g, r.set));
}

// Brute-force check of the certification condition, independent of certify_plan.
bool certified_by_brute_force(const EmbeddedGraph& g, const ReductionPlan& p) {
  VertexSet inner = interior(g, p.S);
  const int t = p.t();
  for (int mask = 0; mask < (1 << t); ++mask) {
    VertexSet keep = inner;
    bool ok = true;
    for (int i = 0; i < t && ok; ++i)
      for (int j = i + 1; j < t && ok; ++j)
        if ((mask >> i & 1) && (mask >> j & 1))
          for (Vertex u : p.parts[i])
            for (Vertex v : p.parts[j])
              if (g.adjacent(u, v)) ok = false;
    if (!ok) continue;
    for (int i = 0; i < t; ++i)
      if (mask >> i & 1) keep.insert(keep.end(), p.parts[i].begin(), p.parts[i].end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (brute_alpha(g.induced(keep)) < __builtin_popcount(mask) + p.gain()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("ratio arithmetic") {
  CHECK(Ratio::parse("6/26") == kThreeThirteenths);
  CHECK(Ratio::parse("2/9").str() == "2/9");
  CHECK_THROWS_AS(Ratio::parse("1/1"), std::invalid_argument);
  CHECK_THROWS_AS(Ratio::parse("x"), std::invalid_argument);
  CHECK(kThreeThirteenths.ceil_of(13) == 3);
  CHECK(kThreeThirteenths.ceil_of(14) == 4);
  CHECK(kThreeThirteenths.ceil_of(0) == 0);
  CHECK(crunch_bound(1, kThreeThirteenths) == 5);
  CHECK(crunch_bound(2, kThreeThirteenths) == 8);
  CHECK(crunch_bound(3, kThreeThirteenths) == 12);
  CHECK(crunch_bound(1, kTwoNinths) == 5);
  CHECK(crunch_bound(2, kOneFifth) == 10);
}

TEST_CASE("certify_plan rejects malformed plans") {
  auto oct = fixture("octahedron");
  ReductionPlan p;
  p.c = kThreeThirteenths;
  p.S = {0};
  p.parts = {{0}};
  CHECK_THROWS_AS(certify_plan(oct, p), PlanError);  // t = |S|
  p.S = {0, 1, 2};
  p.parts = {{0}, {0, 1}};
  CHECK_THROWS_AS(certify_plan(oct, p), PlanError);  // overlapping parts
  p.parts = {{0, 5}};
  CHECK_THROWS_AS(certify_plan(oct, p), PlanError);  // part leaves S
  p.S.clear();
  p.parts.clear();
  CHECK_THROWS_AS(certify_plan(oct, p), PlanError);  // empty S

  // A closed neighborhood in the icosahedron gains 2 at 3/13 but only one vertex is interior.
  auto ico = fixture("icosahedron");
  ReductionPlan q;
  q.c = kThreeThirteenths;
  q.S = {0};
  for (Vertex u : ico.rotation(0)) q.S.push_back(u);
  std::sort(q.S.begin(), q.S.end());
  CHECK_FALSE(certified_by_brute_force(ico, q));
  CHECK_THROWS_AS(certify_plan(ico, q), PlanError);
}

TEST_CASE("ind-red parts must be private neighbor pairs") {
  auto oct = fixture("octahedron");
  auto lp = find_low_degree_plan(oct, kThreeThirteenths);
  REQUIRE(lp);
  const Vertex v = lp->parts[0][0];
  Vertex common = -1;
  for (Vertex w : oct.vertices())
    if (w != v && !oct.adjacent(v, w)) common = w;
  REQUIRE(common >= 0);
  // Using the opposite vertex as J too makes every neighbor shared.
  ReductionPlan bad = *lp;
  bad.J = {std::min(v, common), std::max(v, common)};
  bad.S = oct.vertices();
  bad.k = 1;
  CHECK_THROWS_AS(certify_plan(oct, bad), PlanError);
}

TEST_CASE("low-degree plans") {
  auto k4 = fixture("k4");
  auto p = find_low_degree_plan(k4, kThreeThirteenths);
  REQUIRE(p);
  CHECK(p->kind == PlanKind::delete_closed_nbhd);
  CHECK(p->S.size() == 4);
  auto cp = certify_plan(k4, *p);
  check_round_trip(k4, cp);

  auto oct = fixture("octahedron");
  auto q = find_low_degree_plan(oct, kThreeThirteenths);
  REQUIRE(q);
  CHECK(q->kind == PlanKind::ind_red_contract);
  CHECK(q->parts.size() == 1);
  CHECK(q->parts[0].size() == 3);
  auto cq = certify_plan(oct, *q);
  CHECK(certified_by_brute_force(oct, cq.plan));
  check_round_trip(oct, cq);

  CHECK_FALSE(find_low_degree_plan(fixture("icosahedron"), kThreeThirteenths));
  // Degree 5 is low enough at 1/5.
  CHECK(find_low_degree_plan(fixture("icosahedron"), kOneFifth));
}

TEST_CASE("plans on generated triangulations survive brute force and lifting") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto g = generate({seed, 40, false, false});
    if (auto p = find_low_degree_plan(g, kThreeThirteenths)) {
      auto cp = certify_plan(g, *p);
      CHECK(certified_by_brute_force(g, cp.plan));
      check_round_trip(g, cp);
    }
  }
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    auto g = generate({seed, 60, true, true});
    auto cp = find_config_plan(g, kThreeThirteenths);
    REQUIRE(cp);
    CHECK(certified_by_brute_force(g, cp->plan));
    check_round_trip(g, *cp);
  }
}

TEST_CASE("split guarantees and residues") {
  auto gs = split_guarantees(16, 10, kThreeThirteenths);
  CHECK(gs[1] == 6);
  for (const auto& c : {kOneFifth, kTwoNinths, kThreeThirteenths})
    for (long long N1 = 1; N1 <= 200; ++N1)
      for (long long N2 = 1; N1 + N2 + 3 <= 200; ++N2) {
        auto g4 = split_guarantees(N1, N2, c);
        const long long target = c.ceil_of(N1 + N2 + 3);
        bool some = false;
        for (long long x : g4) some = some || x >= target;
        REQUIRE(some);
        for (int j = 0; j < 4; ++j) {
          const long long k = residue(N1, j, c);
          CHECK(k >= 1);
          CHECK(k <= c.b);
          REQUIRE(c.ceil_of(N1 + j) * c.b == c.a * (N1 + j) + c.b - k);
        }
      }
}

TEST_CASE("stacked tetrahedra split") {
  auto g = fixture("stacked_k4");
  auto seps = separating_triangles(g);
  REQUIRE(seps.size() == 1);
  auto sp = split_plan(g, seps[0], kThreeThirteenths);
  CHECK(sp.N1 == 1);
  CHECK(sp.N2 == 1);
  CHECK(sp.chosen == SplitClaim::one);
  CHECK(sp.candidates.size() == 7);
  CHECK(sp.candidates[0].guarantee == 2);
  auto labels = split_labels(sp.chosen);
  auto a = split_instance(g, sp, labels[0]), b = split_instance(g, sp, labels[1]);
  CHECK(a.graph.vertex_count() == 1);
  auto set = recombine(g, sp, mis_exact(a.graph), mis_exact(b.graph));
  CHECK(set.size() == 2);
  CHECK(independent_in(g, set));
  CHECK_THROWS_AS(split_plan(g, {0, 1, 3}, kThreeThirteenths), PlanError);
}

TEST_CASE("split instances recombine for every claim") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto g = generate({seed, 30, false, false});
    for (const auto& X : separating_triangles(g)) {
      SplitPlan sp;
      try {
        sp = split_plan(g, X, kThreeThirteenths);
      } catch (const PlanError&) {
        continue;
      }
      for (SplitClaim claim : {SplitClaim::one, SplitClaim::two_12, SplitClaim::two_21, SplitClaim::three}) {
        auto labels = split_labels(claim);
        std::vector<VertexSet> sets;
        for (const auto& l : labels) sets.push_back(mis_exact(split_instance(g, sp, l).graph));
        auto set = recombine(g, sp, sets[0], sets[1]);
        CHECK(independent_in(g, set));
        const int idx = static_cast<int>(claim);
        CHECK(static_cast<long long>(set.size()) >= split_guarantees(sp.N1, sp.N2, kThreeThirteenths)[idx]);
      }
    }
  }
}

TEST_CASE("configuration detectors") {
  CHECK(find_configs(fixture("k4")).empty());
  auto ico = fixture("icosahedron");
  auto hs = detect(ico, ConfigId::H);
  CHECK_FALSE(hs.empty());
  for (const auto& m : hs) CHECK(check_match(ico, m));
  CHECK(detect(ico, ConfigId::alpha666).empty());

  int seen[9] = {0};
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto g = generate({seed, 150, true, false});
    for (int i = 0; i < 9; ++i)
      for (const auto& m : detect(g, static_cast<ConfigId>(i))) {
        ++seen[i];
        REQUIRE(check_match(g, m));
        auto J = m.J();
        CHECK(independent_in(g, J));
      }
  }
  CHECK(seen[static_cast<int>(ConfigId::alpha666)] > 0);
  CHECK(seen[static_cast<int>(ConfigId::JIsTwo)] > 0);

  auto g = generate({1, 150, true, false});
  auto ms = detect(g, ConfigId::alpha666);
  REQUIRE_FALSE(ms.empty());
  auto broken = ms.front();
  broken.roles[0].second = broken.roles[1].second;
  CHECK_FALSE(check_match(g, broken));
  CHECK(config_from_name("JIsTwo/alpha55") == ConfigId::JIsTwo);
}

TEST_CASE("plans around a distance-two pair") {
  auto ico = fixture("icosahedron");
  auto ms = detect(ico, ConfigId::JIsTwo);
  REQUIRE_FALSE(ms.empty());
  auto cp = plan_from_match(ico, ms.front(), kThreeThirteenths);
  REQUIRE(cp);
  CHECK(cp->plan.S.size() == 10);
  CHECK(cp->plan.t() == 2);
  CHECK(certified_by_brute_force(ico, cp->plan));
  check_round_trip(ico, *cp);
}
