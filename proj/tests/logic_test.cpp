#include <doctest.h>

#include "helpers.hpp"

using namespace mapkit;

TEST_SUITE("logic") {
  TEST_CASE("signature lookup round trip and duplicate rejection") {
    auto sig = th::make_sig(2, 3);
    CHECK(sig->agent("A") == 0);
    CHECK(sig->fluent("h") == 2);
    CHECK(sig->action("act0") == 0);
    CHECK_THROWS_AS((void)sig->agent("Z"), SignatureError);
    CHECK_THROWS_AS(Signature({"A", "A"}, {}, {}), SignatureError);
  }

  TEST_CASE("implication desugars to negation plus disjunction") {
    auto sig = th::make_sig(1, 2);
    Formula f = Formula::atom(0), g = Formula::atom(1);
    Formula imp = Formula::implication(f, g);
    CHECK(imp.same_as(Formula::disjunction(Formula::negation(f), g)));
    CHECK(imp.kind() == Formula::Kind::Or);
  }

  TEST_CASE("eval_fluent matches hand truth table") {
    auto sig = th::make_sig(1, 2);
    Formula f = Formula::atom(0), g = Formula::atom(1);
    Formula phi = Formula::conjunction(f, Formula::negation(g));
    CHECK(eval_fluent(Interpretation{0b01}, phi));
    CHECK_FALSE(eval_fluent(Interpretation{0b11}, phi));
    CHECK_FALSE(eval_fluent(Interpretation{0b00}, phi));
    CHECK(eval_fluent(Interpretation{0}, Formula::top()));
    CHECK_FALSE(eval_fluent(Interpretation{0}, Formula::bot()));
  }

  TEST_CASE("prop_entails agrees with an independent truth-table oracle") {
    auto sig = th::make_sig(2, 3);
    Rng rng(11);
    for (int k = 0; k < 300; ++k) {
      Formula a = random_fluent_formula(rng, *sig, 3);
      Formula b = random_fluent_formula(rng, *sig, 3);
      CHECK(prop_entails(*sig, {a}, b) == th::entails_oracle(*sig, {a}, b));
      CHECK(prop_entails(*sig, {}, a) == th::entails_oracle(*sig, {}, a));
    }
  }

  TEST_CASE("De Morgan dualities hold propositionally") {
    auto sig = th::make_sig(1, 2);
    Formula f = Formula::atom(0), g = Formula::atom(1);
    CHECK(th::equivalent(*sig, Formula::negation(Formula::conjunction(f, g)),
                         Formula::disjunction(Formula::negation(f), Formula::negation(g))));
    CHECK(th::equivalent(*sig, Formula::negation(Formula::disjunction(f, g)),
                         Formula::conjunction(Formula::negation(f), Formula::negation(g))));
  }

  TEST_CASE("complete clause k is falsified by exactly interpretation k") {
    auto sig = th::make_sig(1, 3);
    auto clauses = complete_clauses(*sig);
    auto zs = all_interpretations(*sig);
    REQUIRE(clauses.size() == 8);
    for (std::size_t k = 0; k < clauses.size(); ++k)
      for (std::size_t z = 0; z < zs.size(); ++z)
        CHECK(eval_fluent(zs[z], clauses[k]) == (z != k));
  }

  TEST_CASE("enumeration guard rejects oversized signatures") {
    std::vector<std::string> many;
    for (int k = 0; k < 17; ++k) many.push_back("f" + std::to_string(k));
    Signature big({"A"}, many, {"act0"});
    CHECK_THROWS_AS(check_enumeration_capacity(big), CapacityError);
  }

  TEST_CASE("conjoin_all of nothing is top") {
    auto sig = th::make_sig(1, 1);
    CHECK(Formula::conjoin_all({}).kind() == Formula::Kind::Top);
    CHECK(eval_fluent(Interpretation{0}, Formula::conjoin_all({Formula::atom(0)})) == false);
  }
}
