#include <doctest.h>

#include "helpers.hpp"

using namespace mapkit;

TEST_SUITE("kripke") {
  TEST_CASE("belief and common-belief satisfaction on a two-world structure") {
    auto sig = th::make_sig(2, 1);
    // A cannot tell the worlds apart, B can.
    KripkeStructure m(sig);
    WorldId u = m.add_world(Interpretation{0});
    WorldId v = m.add_world(Interpretation{1});
    for (auto x : {u, v})
      for (auto y : {u, v}) m.add_edge(x, 0, y);
    m.add_edge(u, 1, u);
    m.add_edge(v, 1, v);

    Formula f = Formula::atom(0);
    CHECK_FALSE(satisfies(m, u, f));
    CHECK(satisfies(m, u, Formula::believes(1, Formula::negation(f))));
    CHECK_FALSE(satisfies(m, u, Formula::believes(0, f)));
    CHECK_FALSE(satisfies(m, u, Formula::believes(0, Formula::negation(f))));
    CHECK(satisfies(m, u, Formula::everyone({0, 1},
                                            Formula::disjunction(f, Formula::negation(f)))));
    // Common belief over both agents reaches v from u, so B_B !f is not common.
    CHECK_FALSE(satisfies(m, u, Formula::common({0, 1}, Formula::believes(1, Formula::negation(f)))));
    CHECK(satisfies(m, u, Formula::common({1}, Formula::negation(f))));
  }

  TEST_CASE("frame_class recognizes equivalence relations") {
    auto sig = th::make_sig(2, 1);
    PointedStructure total = th::total_state(sig, {0, 1});
    CHECK(frame_class(total.structure).s5());

    KripkeStructure m(sig);
    WorldId u = m.add_world(Interpretation{0});
    WorldId v = m.add_world(Interpretation{1});
    m.add_edge(u, 0, v);
    FrameClass fc = frame_class(m);
    CHECK_FALSE(fc.reflexive);
    CHECK_FALSE(fc.serial);
  }

  TEST_CASE("world and edge surgery") {
    auto sig = th::make_sig(1, 1);
    PointedStructure st = th::total_state(sig, {0, 1});
    KripkeStructure cut = world_subtract(st.structure, {1});
    CHECK(cut.world_count() == 1);
    CHECK(cut.relation(0).size() == 1);

    KripkeStructure fewer = edge_subtract(st.structure, {Edge{0, 0, 1}});
    CHECK_FALSE(fewer.related(0, 0, 1));
    CHECK(fewer.related(1, 0, 0));
    KripkeStructure back = edge_add(fewer, {Edge{0, 0, 1}});
    CHECK(back == st.structure);
    CHECK_THROWS_AS(edge_add(fewer, {Edge{0, 0, 9}}), ArgumentError);
  }

  TEST_CASE("replica is equivalent under renamed satisfaction") {
    auto sig = th::make_sig(2, 2);
    Rng rng(5);
    for (int k = 0; k < 50; ++k) {
      PointedStructure st = random_state(rng, sig, 4);
      Replica rep = replica(st, st.structure.next_id());
      CHECK(bisimilar(st, rep.state));
      Formula phi = random_belief_formula(rng, *sig, 3);
      CHECK(satisfies(st, phi) == satisfies(rep.state, phi));
    }
  }

  TEST_CASE("bisimilarity is invariant for sampled belief formulas") {
    auto sig = th::make_sig(2, 2);
    Rng rng(7);
    int bisimilar_pairs = 0;
    for (int k = 0; k < 200; ++k) {
      PointedStructure a = random_state(rng, sig, 3);
      PointedStructure b = random_state(rng, sig, 3);
      if (!bisimilar(a, b)) continue;
      ++bisimilar_pairs;
      for (int j = 0; j < 5; ++j) {
        Formula phi = random_belief_formula(rng, *sig, 3);
        CHECK(satisfies(a, phi) == satisfies(b, phi));
      }
    }
    // The sample must actually exercise the invariant.
    CHECK(bisimilar_pairs > 0);
  }

  TEST_CASE("quotient merges valuation-identical worlds and stays bisimilar") {
    auto sig = th::make_sig(1, 1);
    PointedStructure st = th::total_state(sig, {1, 1, 0});
    PointedStructure q = quotient(st);
    CHECK(q.structure.world_count() == 2);
    CHECK(bisimilar(st, q));
  }

  TEST_CASE("reachable_restriction drops disconnected worlds") {
    auto sig = th::make_sig(1, 1);
    KripkeStructure m(sig);
    WorldId u = m.add_world(Interpretation{1});
    WorldId v = m.add_world(Interpretation{0});
    m.add_world(Interpretation{0});  // unreachable
    m.add_edge(u, 0, v);
    PointedStructure r = reachable_restriction({m, u});
    CHECK(r.structure.world_count() == 2);
    CHECK(bisimilar(r, PointedStructure{m, u}));
  }

  TEST_CASE("union_k rejects valuation conflicts on shared worlds") {
    auto sig = th::make_sig(1, 1);
    KripkeStructure m1(sig), m2(sig);
    m1.add_world_with_id(0, Interpretation{1});
    m2.add_world_with_id(0, Interpretation{0});
    CHECK_THROWS_AS(union_k(m1, m2), CompatibilityError);
  }

  TEST_CASE("dot output names worlds and doubles the designated border") {
    auto sig = th::make_sig(1, 2);
    PointedStructure st = th::total_state(sig, {0b01});
    std::string dot = to_dot(st);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("doublecircle") != std::string::npos);
    CHECK(dot.find("f, !g") != std::string::npos);
  }
}
