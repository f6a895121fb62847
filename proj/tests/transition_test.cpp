#include <doctest.h>

#include "helpers.hpp"

using namespace mapkit;

namespace {

Theory flip_theory() {
  return parse_theory(R"(
agents A, B
fluents on
actions flip
flip causes on if !on
flip causes !on if on
B observes flip
)");
}

/// Light off, A cannot tell, B can.
PointedStructure flip_state(const SignaturePtr& sig) {
  KripkeStructure m(sig);
  WorldId s1 = m.add_world(Interpretation{0});
  WorldId s2 = m.add_world(Interpretation{1});
  for (auto u : {s1, s2})
    for (auto v : {s1, s2}) m.add_edge(u, 0, v);
  m.add_edge(s1, 1, s1);
  m.add_edge(s2, 1, s2);
  return {std::move(m), s1};
}

}  // namespace

TEST_SUITE("transition") {
  TEST_CASE("frame of reference partitions the agents at the point") {
    Theory d = parse_theory(R"(
agents A, B, C
fluents f
actions act
act determines f
A observes act
B aware_of act if f
)");
    PointedStructure st = th::total_state(d.sig, {1, 0});
    FrameOfReference rho = frame_of_reference(d, 0, st);
    CHECK(rho.full == AgentSet{0});
    CHECK(rho.partial == AgentSet{1});
    CHECK(rho.oblivious == AgentSet{2});

    PointedStructure other = th::total_state(d.sig, {1, 0}, 1);
    FrameOfReference rho2 = frame_of_reference(d, 0, other);
    CHECK(rho2.partial.empty());  // condition f is false at the point
  }

  TEST_CASE("overlapping observability raises ObservabilityError") {
    Theory d = parse_theory(R"(
agents A
fluents f
actions act
act determines f
A observes act
A aware_of act
)");
    PointedStructure st = th::total_state(d.sig, {1});
    CHECK_THROWS_AS(frame_of_reference(d, 0, st), ObservabilityError);
  }

  TEST_CASE("effects collect triggered literals and reject contradictions") {
    Theory d = parse_theory(R"(
agents A
fluents f, g
actions act
act causes f if g
act causes !g
)");
    PointedStructure st = th::total_state(d.sig, {0b10});
    EffectSet e = effects(d, 0, st.structure, st.real);
    REQUIRE(e.size() == 2);

    Theory bad = parse_theory("agents A\nfluents f\nactions act\nact causes f\nact causes !f");
    PointedStructure st2 = th::total_state(bad.sig, {0});
    CHECK_THROWS_AS(effects(bad, 0, st2.structure, st2.real), EffectConsistencyError);
  }

  TEST_CASE("world-altering step keeps the old structure and adds updated copies") {
    Theory d = flip_theory();
    PointedStructure st = flip_state(d.sig);
    auto out = step_world(d, 0, st);
    REQUIRE(out.size() == 1);
    const PointedStructure& next = out[0];
    CHECK(next.structure.world_count() == 4);
    Formula on = Formula::atom(0);
    CHECK(satisfies(next, on));
    CHECK(satisfies(next, Formula::believes(1, on)));
    CHECK_FALSE(satisfies(next, Formula::believes(0, on)));
    CHECK_FALSE(satisfies(next, Formula::believes(0, Formula::negation(on))));
  }

  TEST_CASE("inexecutable actions yield the empty result") {
    Theory d = parse_theory(R"(
agents A
fluents f, g
actions act
executable act if g
act causes f
)");
    PointedStructure st = th::total_state(d.sig, {0});
    CHECK(step_world(d, 0, st).empty());
    std::string why;
    CHECK(step(d, 0, st, &why).empty());
    CHECK(!why.empty());
  }

  TEST_CASE("partial observers are rejected for world-altering actions on both routes") {
    Theory d = parse_theory(R"(
agents A, B
fluents f
actions act
act causes f
B aware_of act
)");
    PointedStructure st = th::total_state(d.sig, {0});
    CHECK_THROWS_AS(step_world(d, 0, st), ObservabilityError);
    CHECK_THROWS_AS(omega_world(d, 0, frame_of_reference(d, 0, st)), ObservabilityError);
  }

  TEST_CASE("sensing separates full, partial and oblivious observers") {
    Theory d = parse_theory(R"(
agents A, B, C
fluents tail
actions peek
peek determines tail
A observes peek
B aware_of peek
)");
    PointedStructure st = th::total_state(d.sig, {0, 1});
    auto out = step_sense(d, 0, st);
    REQUIRE(out.size() == 1);
    const PointedStructure& next = out[0];
    Formula tail = Formula::atom(0);
    Formula knows_tail = Formula::disjunction(Formula::believes(0, tail),
                                              Formula::believes(0, Formula::negation(tail)));
    CHECK(satisfies(next, Formula::believes(0, Formula::negation(tail))));
    CHECK(satisfies(next, Formula::believes(1, knows_tail)));
    CHECK_FALSE(satisfies(next, Formula::believes(1, tail)));
    CHECK_FALSE(satisfies(next, Formula::believes(1, Formula::negation(tail))));
    // C is oblivious: beliefs unchanged, still considers A ignorant.
    Formula ignorant_a = Formula::conjunction(Formula::negation(Formula::believes(0, tail)),
                                              Formula::negation(Formula::believes(0, Formula::negation(tail))));
    CHECK(satisfies(next, Formula::believes(2, ignorant_a)));
  }

  TEST_CASE("announcements require truth at the designated world") {
    Theory d = parse_theory(R"(
agents A, B
fluents f
actions tell
tell announces f
A observes tell
B observes tell
)");
    PointedStructure holds = th::total_state(d.sig, {1, 0});
    auto out = step_announce(d, 0, holds);
    REQUIRE(out.size() == 1);
    CHECK(satisfies(out[0], Formula::common({0, 1}, Formula::atom(0))));

    PointedStructure fails = th::total_state(d.sig, {1, 0}, 1);
    std::string why;
    CHECK(step_announce(d, 0, fails, &why).empty());
    CHECK(why.find("untruthful") != std::string::npos);
  }

  TEST_CASE("belief-state stepping fails when any member fails and folds over plans") {
    Theory d = parse_theory(R"(
agents A
fluents f, g
actions act
executable act if f
act causes g
A observes act
)");
    PointedStructure good = th::total_state(d.sig, {0b01});
    PointedStructure bad = th::total_state(d.sig, {0b00});

    BState both = BState::of({good, bad});
    std::string why;
    CHECK(step_bstate(d, 0, both, &why).failed);
    CHECK(why.find("act") != std::string::npos);

    BState ok = run_plan(d, {0}, BState::of({good}));
    REQUIRE_FALSE(ok.failed);
    CHECK(satisfies(ok.states[0], Formula::atom(1)));
    CHECK(run_plan(d, {0}, BState::fail()).failed);

    Query q = parse_query("g after act", d.sig);
    CHECK(entails(d, q, BState::of({good})));
    CHECK_FALSE(entails(d, q, both));
  }

  TEST_CASE("consistency preservation spots prior beliefs about the payload") {
    Theory d = parse_theory(R"(
agents A, B
fluents f
actions peek
peek determines f
A observes peek
)");
    CHECK(consistency_preserving_sense(d, 0, th::total_state(d.sig, {1, 0})));
    // A single-world structure already decides f for everyone.
    CHECK_FALSE(consistency_preserving_sense(d, 0, th::total_state(d.sig, {1})));
  }
}
