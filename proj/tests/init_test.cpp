#include <doctest.h>

#include "helpers.hpp"

using namespace mapkit;

namespace {

Theory theory_with_initial(const std::string& initial_lines) {
  return parse_theory("agents A, B\nfluents f, g\nactions act\nact causes f\n" + initial_lines);
}

}  // namespace

TEST_SUITE("init") {
  TEST_CASE("classification sorts the admissible statement forms") {
    Theory t = theory_with_initial(R"(
initially f
initially C(!g)
initially C(B[A] f)
initially C(B[B] g | B[B] !g)
initially C(!B[A] g & !B[A] !g)
)");
    InitialClassification c = classify(t);
    CHECK(c.plain.size() == 1);
    CHECK(c.common.size() == 1);
    REQUIRE(c.known_value.size() == 2);
    CHECK(c.known_value[0].directed);
    CHECK_FALSE(c.known_value[1].directed);
    CHECK(c.ignorant.size() == 1);
  }

  TEST_CASE("statements outside the admissible forms are indefinite") {
    CHECK_THROWS_AS(classify(theory_with_initial("initially B[A] f")), DefinitenessError);
    CHECK_THROWS_AS(classify(theory_with_initial("initially C(B[A] B[B] f)")),
                    DefinitenessError);
    CHECK_THROWS_AS(classify(theory_with_initial("initially C[{A}] f")), DefinitenessError);
  }

  TEST_CASE("closed-world completion adds ignorance for unforced clauses and is idempotent") {
    Theory t = theory_with_initial("initially C(f)\ninitially C(g)");
    InitialClassification c = complete_cwa(*t.sig, classify(t));
    // Both fluents commonly known: every complete clause is entailed, no
    // ignorance is added.
    CHECK(c.ignorant.empty());

    Theory open = theory_with_initial("initially C(f)");
    InitialClassification c2 = complete_cwa(*open.sig, classify(open));
    CHECK_FALSE(c2.ignorant.empty());
    InitialClassification c3 = complete_cwa(*open.sig, c2);
    CHECK(c3.ignorant.size() == c2.ignorant.size());
  }

  TEST_CASE("known formulas reflect directed payloads") {
    Theory t = theory_with_initial("initially C(B[A] f)");
    InitialClassification c = classify(t);
    auto known = known_formulas(*t.sig, c, 0);
    // f survives everywhere, so every clause containing f is constant.
    bool has_f_clause = false;
    for (const auto& k : known)
      if (prop_entails(*t.sig, {Formula::atom(0)}, k)) has_f_clause = true;
    CHECK(has_f_clause);
  }

  TEST_CASE("whether-payloads refine an agent's known clauses") {
    Theory t = theory_with_initial("initially C(f | g)\ninitially C(B[A] f | B[A] !f)");
    InitialClassification c = classify(t);
    CHECK(known_formulas(*t.sig, c, 0).size() > known_formulas(*t.sig, c, 1).size());
  }

  TEST_CASE("generated states are S5 and satisfy every statement") {
    Theory t = theory_with_initial("initially !f\ninitially C(g)");
    CanonicalInitial init = generate_initial(t, true);
    CHECK(frame_class(init.structure).s5());
    REQUIRE_FALSE(init.designated.empty());
    for (const auto& st : init.states()) {
      CHECK(satisfies(st, Formula::negation(Formula::atom(0))));
      CHECK(satisfies(st, Formula::common({0, 1}, Formula::atom(1))));
    }
  }

  TEST_CASE("complete theories generate a unique initial state") {
    Theory t = theory_with_initial("initially f\ninitially !g\ninitially C(f)\ninitially C(!g)");
    CanonicalInitial init = generate_initial(t, true);
    CHECK(init.designated.size() == 1);
    CHECK(init.structure.world_count() <= 4);
  }

  TEST_CASE("contradictory initial statements raise InconsistencyError") {
    Theory t = theory_with_initial("initially C(f)\ninitially C(!f)");
    CHECK_THROWS_AS(generate_initial(t, true), InconsistencyError);
    Theory t2 = theory_with_initial("initially f\ninitially C(!f)");
    CHECK_THROWS_AS(generate_initial(t2, false), InconsistencyError);
  }

  TEST_CASE("reduce_state shrinks generator output while staying bisimilar") {
    Theory t = theory_with_initial("initially C(g)");
    for (const auto& st : generate_initial(t, true).states()) {
      PointedStructure small = reduce_state(st);
      CHECK(bisimilar(st, small));
      CHECK(small.structure.world_count() <= 4);
      CHECK(frame_class(small.structure).s5());
    }
  }

  TEST_CASE("world_formula pins exactly one interpretation") {
    Theory t = theory_with_initial("initially C(g)");
    CanonicalInitial init = generate_initial(t, true);
    PointedStructure st = init.states()[0];
    Formula pin = world_formula(st, st.real);
    for (const auto& [u, z] : st.structure.worlds())
      CHECK(eval_fluent(z, pin) == (z == st.structure.valuation(st.real)));
  }

  TEST_CASE("brute force oracle is guarded") {
    Theory t = theory_with_initial("initially C(f)");
    CHECK_THROWS_AS(brute_force_initials(t, 16), CapacityError);
  }
}
