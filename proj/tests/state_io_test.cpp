#include <doctest.h>

#include "helpers.hpp"
#include "mapkit/state_io.hpp"

using namespace mapkit;

TEST_SUITE("state_io") {
  TEST_CASE("state round trip preserves the structure exactly") {
    auto sig = th::make_sig(2, 2);
    Rng rng(3);
    for (int k = 0; k < 30; ++k) {
      PointedStructure st = random_state(rng, sig, 4);
      PointedStructure back = state_from_json(state_to_json(st), sig);
      CHECK(back.structure == st.structure);
      CHECK(back.real == st.real);
    }
  }

  TEST_CASE("belief state round trip covers the failure value") {
    auto sig = th::make_sig(1, 1);
    BState failed = BState::fail();
    CHECK(bstate_from_json(bstate_to_json(failed), sig).failed);

    BState b = BState::of({th::total_state(sig, {0, 1})});
    BState back = bstate_from_json(bstate_to_json(b), sig);
    REQUIRE(back.states.size() == 1);
    CHECK(bisimilar(back.states[0], b.states[0]));
  }

  TEST_CASE("unknown names and malformed documents are parse errors") {
    auto sig = th::make_sig(1, 1);
    CHECK_THROWS_AS(
        state_from_json(nlohmann::json::parse(
                            R"({"worlds":[{"id":0,"literals":["nope"]}],"edges":{},"designated":0})"),
                        sig),
        Error);
    CHECK_THROWS_AS(state_from_json(nlohmann::json::parse("{}"), sig), Error);
  }
}
