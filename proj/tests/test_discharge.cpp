#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pig/discharge.hpp"
#include "support.hpp"

using namespace pig;
using pigtest::fixture;
using pigtest::wheel;

namespace {

Charge final_charge(const EmbeddedGraph& g, RuleSet rules, Vertex v) { return run_rules(g, rules).back().charge[v]; }

Charge sent(const ChargeState& cs, Vertex from, Vertex to) {
  Charge sum(0);
  for (const auto& t : cs.ledger)
    if (t.giver == from && t.receiver == to) sum += t.amount;
  return sum;
}

// Compared outside doctest's expression decomposition, which loops on rationals.
bool same(const Charge& a, const Charge& b) { return a == b; }

}  // namespace

TEST_CASE("initial charges") {
  auto ico = fixture("icosahedron");
  auto cs = initial_charges(ico);
  for (Vertex v = 0; v < 12; ++v) CHECK(same(cs.charge[v], Charge(-1)));
  CHECK(same(cs.total(), Charge(-12)));
  CHECK(negative_vertices(cs).size() == 12);
  auto w = wheel({6, 6, 6, 6, 6});
  auto c2 = initial_charges(w);
  CHECK(same(c2.charge[0], Charge(-1)));
  CHECK(same(c2.charge[1], Charge(0)));
}

TEST_CASE("negative_vertices picks the negative ones") {
  ChargeState cs;
  cs.charge.assign(5, Charge(0));
  cs.charge[3] = Charge(-12);
  CHECK(negative_vertices(cs) == std::vector<Vertex>{3});
}

TEST_CASE("classification") {
  // Neighborhood 6, 5, 6, 7+, 6, 6, 7+ around a 7-vertex.
  auto g = wheel({6, 5, 6, 7, 6, 6, 7});
  auto p = classify(g, 0);
  CHECK(p.induced_cycle);
  CHECK(p.five == std::vector<Vertex>{2});
  CHECK(p.six.size() == 4);
  CHECK(p.seven.size() == 2);
  CHECK(p.five_class.at(2) == FiveClass::crowded);
  auto main = run_main(g);
  CHECK(same(sent(main[1], 0, 2), Charge(0)));

  // 5-neighbor flanked by 7+-neighbors only: isolated.
  auto iso = classify(wheel({7, 5, 7, 6, 6, 6, 7}), 0);
  CHECK(iso.five_class.at(2) == FiveClass::isolated);
  // One 6-neighbor in H_v: plain.
  auto plain = classify(wheel({6, 5, 7, 6, 7, 6, 7}), 0);
  CHECK(plain.five_class.at(2) == FiveClass::plain);
  // 6-neighbors never receive a 5-neighbor class.
  for (auto [w, c] : p.five_class) CHECK(g.degree(w) == 5);
}

TEST_CASE("warmup case table") {
  // (5,0): five 6-neighbors give 2/7 each.
  CHECK(same(final_charge(wheel({6, 6, 6, 6, 6}), RuleSet::warmup, 0), Charge(3, 7)));
  // (5,2) with three 7+-neighbors: -1 + 3(1/3) = 0.
  CHECK(same(final_charge(wheel({5, 7, 5, 7, 7}), RuleSet::warmup, 0), Charge(0)));
  // (5,1) with two 7+- and two 6-neighbors: -1 + 2/3 + 4/7.
  CHECK(same(final_charge(wheel({5, 7, 6, 6, 7}), RuleSet::warmup, 0), Charge(-1) + Charge(2, 3) + Charge(4, 7)));
  // (6,1) with two 7+-neighbors: 0 + 2(1/7) - 2/7 = 0.
  CHECK(same(final_charge(wheel({5, 7, 6, 6, 6, 7}), RuleSet::warmup, 0), Charge(0)));
  // (6,2) with four 7+-neighbors: 0 + 4(1/7) - 2(2/7) = 0.
  CHECK(same(final_charge(wheel({5, 7, 7, 5, 7, 7}), RuleSet::warmup, 0), Charge(0)));
  // (7,3) with four 7+-neighbors: 1 - 3(1/3) = 0.
  CHECK(same(final_charge(wheel({5, 7, 5, 7, 5, 7, 7}), RuleSet::warmup, 0), Charge(0)));
  // (7,2): 1 - 2(1/3) - 2(1/7) when both 6-neighbors qualify for R2.
  auto g72 = wheel({5, 6, 7, 5, 6, 7, 7});
  CHECK(same(final_charge(g72, RuleSet::warmup, 0), Charge(1) - Charge(2, 3) - Charge(2, 7)));
  // (8,4): 2 - 4(1/3) when the other neighbors are 7+.
  CHECK(same(final_charge(wheel({5, 7, 5, 7, 5, 7, 5, 7}), RuleSet::warmup, 0), Charge(2) - Charge(4, 3)));
  // (9,4): d(v) - 6 - d(v)/3 bound holds with equality only when every neighbor takes 1/3.
  CHECK(same(final_charge(wheel({5, 7, 5, 7, 5, 7, 5, 7, 7}), RuleSet::warmup, 0), Charge(3) - Charge(4, 3)));
}

TEST_CASE("main rules on local fixtures") {
  // R2: an 8-vertex gives 1/4 + h_w/8; here w = 1 sits between two 7+-neighbors.
  auto g8 = wheel({6, 7, 6, 6, 6, 6, 6, 8});
  auto s8 = run_main(g8);
  CHECK(same(classify(g8, 0).h_w.at(1), Charge(2)));
  CHECK(same(sent(s8[1], 0, 1), Charge(1, 2)));
  CHECK(same(sent(s8[1], 0, 4), Charge(1, 4)));

  // 5-vertex with five 6-neighbors: each shares 6-neighbors, so gives 1/4.
  auto g5 = wheel({6, 6, 6, 6, 6});
  auto s5 = run_main(g5);
  for (Vertex u = 1; u <= 5; ++u) CHECK(same(sent(s5[1], u, 0), Charge(1, 4)));
  CHECK(same(s5.back().charge[0], Charge(1, 4)));

  // 5-vertex with three consecutive 6+-neighbors, outer two 7+: 1/4 + 1/2 + 1/4.
  auto g3 = wheel({7, 6, 7, 5, 5});
  auto s3 = run_main(g3);
  CHECK(same(sent(s3[1], 2, 0), Charge(1, 2)));
  CHECK(same(s3[1].charge[0], Charge(0)));

  // R3 to a 6-neighbor needs a 5-neighbor on one side.
  auto g76 = wheel({6, 7, 7, 7, 7, 7, 7});
  CHECK(same(sent(run_main(g76)[1], 0, 1), Charge(0)));
  auto g765 = wheel({6, 7, 5, 7, 7, 7, 7});
  CHECK(same(sent(run_main(g765)[1], 0, 1), Charge(1, 4)));

  // Isolated 5-neighbor of a 7-vertex gets 1/2; plain gets 1/4.
  CHECK(same(sent(run_main(wheel({7, 5, 7, 6, 6, 6, 7}))[1], 0, 2), Charge(1, 2)));
  CHECK(same(sent(run_main(wheel({6, 5, 7, 6, 7, 6, 7}))[1], 0, 2), Charge(1, 4)));
}

TEST_CASE("R4 and R5") {
  // 5-vertex v with five 6-neighbors whose only common 6-neighbor pattern is broken
  // by 7+-vertices: neighbors 6,7,6,7,7 give 1/2, 1/4, 1/2, 1/4, 1/4 = 7/4 > 1.
  auto g = wheel({6, 7, 6, 7, 7});
  auto s = run_main(g);
  CHECK(same(sent(s[1], 1, 0), Charge(1, 4)));  // five senders structurally
  // With exactly three senders the 6-vertices give 1/2, and the 8-vertex 1/4.
  auto g2 = wheel({6, 8, 6, 5, 5});
  auto s2 = run_main(g2);
  CHECK(same(sent(s2[1], 1, 0), Charge(1, 2)));
  CHECK(same(sent(s2[1], 3, 0), Charge(1, 2)));
  CHECK(same(s2[1].charge[0], Charge(1, 4)));
  // A 7-vertex there instead sees the 5-vertex as crowded and gives nothing.
  auto g3 = wheel({6, 7, 6, 5, 5});
  auto s3 = run_main(g3);
  CHECK(same(sent(s3[1], 2, 0), Charge(0)));
  CHECK(same(s3[1].charge[0], Charge(0)));
  // R4 returns the 1/4 surplus split over the two half-givers.
  CHECK(same(sent(s2[2], 0, 1), Charge(1, 8)));
  CHECK(same(sent(s2[2], 0, 3), Charge(1, 8)));
  CHECK(same(s2[2].charge[0], Charge(0)));
  CHECK(s2[3].phase == Phase::after_r5);
}

TEST_CASE("conservation and replay on generated triangulations") {
  for (int n : {12, 16, 20, 27, 40, 64}) {
    auto g = generate({static_cast<std::uint64_t>(n) * 3 + 1, n, true, true});
    for (auto rules : {RuleSet::warmup, RuleSet::main}) {
      auto states = run_rules(g, rules);
      CHECK(states.size() == (rules == RuleSet::warmup ? 2u : 4u));
      for (const auto& st : states) {
        CHECK(same(st.total(), Charge(2 * g.edge_count() - 6 * g.vertex_count())));
        CHECK(same(st.total(), Charge(-12)));
        CHECK(replay(g, st.ledger) == st.charge);
        for (const auto& t : st.ledger) CHECK(t.amount > 0);
      }
    }
    // 7-vertex transfers to 5-neighbors follow the class exactly.
    auto main = run_main(g);
    for (Vertex v : g.vertices()) {
      if (g.degree(v) != 7) continue;
      auto p = classify(g, v);
      CHECK(p.induced_cycle);
      for (auto [w, c] : p.five_class) {
        Charge expect = c == FiveClass::isolated ? Charge(1, 2) : c == FiveClass::crowded ? Charge(0) : Charge(1, 4);
        CHECK(sent(main[1], v, w) == expect);
      }
      for (auto [w, h] : p.h_w) CHECK(h <= 2);
    }
  }
}
