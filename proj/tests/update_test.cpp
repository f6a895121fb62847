#include <doctest.h>

#include "helpers.hpp"

using namespace mapkit;

namespace {

Theory peek_theory() {
  return parse_theory(R"(
agents A, B, C
fluents tail
actions peek
peek determines tail
A observes peek
B aware_of peek
)");
}

}  // namespace

TEST_SUITE("update") {
  TEST_CASE("product update multiplies worlds by applicable events") {
    auto sig = th::make_sig(1, 1);
    UpdateModel u;
    u.events = {"sigma", "epsilon"};
    u.pre.insert_or_assign("sigma", Formula::atom(0));
    u.pre.insert_or_assign("epsilon", Formula::top());
    u.sub["sigma"].insert_or_assign(0, Formula::bot());
    u.sub["epsilon"];
    u.relations[0] = {{"sigma", "sigma"}, {"epsilon", "epsilon"}};

    PointedStructure st = th::total_state(sig, {1, 0});
    KripkeStructure prod = product_update(st.structure, u);
    // sigma applies only where f holds; epsilon everywhere.
    CHECK(prod.world_count() == 3);
  }

  TEST_CASE("world-altering model carries the effect substitution") {
    Theory d = parse_theory(R"(
agents A, B
fluents on
actions flip
flip causes on if !on
flip causes !on if on
B observes flip
)");
    PointedStructure st = th::total_state(d.sig, {0, 1});
    UpdateInstance inst = omega_world(d, 0, frame_of_reference(d, 0, st));
    CHECK(inst.model.events.size() == 2);
    CHECK(inst.designated == "sigma");
    REQUIRE(inst.model.sub.at("sigma").count(0) == 1);
    // The substitution must flip the fluent on every interpretation.
    for (const auto& z : all_interpretations(*d.sig))
      CHECK(eval_fluent(z, inst.model.sub.at("sigma").at(0)) == !z.value(0));
    CHECK(inst.model.sub.at("epsilon").empty());
  }

  TEST_CASE("sensing template splits on the sensed fluent with two designated events") {
    Theory d = peek_theory();
    PointedStructure st = th::total_state(d.sig, {0, 1});
    FrameOfReference rho = frame_of_reference(d, 0, st);
    UpdateTemplate t = omega_sense(d, 0, rho);
    CHECK(t.model.events.size() == 3);
    CHECK(t.designated_set == std::vector<EventId>{"sigma", "tau"});
    // Partial observers cannot tell sigma from tau.
    CHECK(t.model.relations.at(1).count({"sigma", "tau"}) == 1);
    CHECK(t.model.relations.at(0).count({"sigma", "tau"}) == 0);
    // Oblivious agents see only the null event.
    CHECK(t.model.relations.at(2).count({"sigma", "epsilon"}) == 1);
  }

  TEST_CASE("multi-fluent sensing is an unsupported update shape") {
    Theory d = parse_theory(R"(
agents A
fluents f, g
actions scan
scan determines f
scan determines g
A observes scan
)");
    PointedStructure st = th::total_state(d.sig, {0});
    CHECK_THROWS_AS(omega_sense(d, 0, frame_of_reference(d, 0, st)), UnsupportedShapeError);
  }

  TEST_CASE("occurrence template is empty exactly when the action is inexecutable") {
    Theory d = parse_theory(R"(
agents A
fluents f, g
actions act
executable act if g
act causes f
A observes act
)");
    CHECK(omega(d, 0, th::total_state(d.sig, {0b00})).designated_set.empty());
    CHECK_FALSE(omega(d, 0, th::total_state(d.sig, {0b10})).designated_set.empty());
  }

  TEST_CASE("both routes agree on the peek example") {
    Theory d = peek_theory();
    PointedStructure st = th::total_state(d.sig, {0, 1});
    auto direct = step(d, 0, st);
    auto via_update = apply_template(st, omega(d, 0, st));
    REQUIRE(direct.size() == 1);
    REQUIRE(via_update.size() == 1);
    CHECK(bisimilar(direct[0], via_update[0]));
    CHECK(cross_check(d, 0, st));
  }

  TEST_CASE("update model dot output labels events with preconditions") {
    Theory d = peek_theory();
    PointedStructure st = th::total_state(d.sig, {0, 1});
    UpdateTemplate t = omega(d, 0, st);
    std::string dot = to_dot(t.model, t.designated_set, *d.sig);
    CHECK(dot.find("sigma") != std::string::npos);
    CHECK(dot.find("tail") != std::string::npos);
    CHECK(dot.find("peripheries=2") != std::string::npos);
  }
}
