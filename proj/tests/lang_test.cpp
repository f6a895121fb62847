#include <doctest.h>

#include "helpers.hpp"

using namespace mapkit;

namespace {

const char* kTinyTheory = R"(
agents A, B
fluents f, g
actions act0, act1

act0 causes f if B[A] g
act1 determines g
executable act1 if f
A observes act0
B aware_of act1 if g
initially C(!f)
)";

}  // namespace

TEST_SUITE("lang") {
  TEST_CASE("theory parse collects declarations and statements") {
    Theory t = parse_theory(kTinyTheory);
    CHECK(t.sig->agent_count() == 2);
    CHECK(t.sig->fluent_count() == 2);
    CHECK(t.kind_of(t.sig->action("act0")) == ActionKind::WorldAltering);
    CHECK(t.kind_of(t.sig->action("act1")) == ActionKind::Sensing);
    CHECK(t.executability(t.sig->action("act0")).kind() == Formula::Kind::Top);
    CHECK(t.initial.size() == 1);
  }

  TEST_CASE("parse then print then parse is a fixpoint") {
    Theory t1 = parse_theory(kTinyTheory);
    std::string printed = pretty_print(t1);
    Theory t2 = parse_theory(printed);
    CHECK(printed == pretty_print(t2));
    CHECK(t1.domain.size() == t2.domain.size());
    for (std::size_t k = 0; k < t1.domain.size(); ++k)
      CHECK(t1.domain[k].condition.same_as(t2.domain[k].condition));
  }

  TEST_CASE("formula grammar covers modal operators and precedence") {
    auto sig = th::make_sig(3, 2);
    Formula phi = parse_formula("!f & g | B[A] (f -> g)", sig);
    CHECK(phi.kind() == Formula::Kind::Or);
    Formula common = parse_formula("C[{A,B}] f", sig);
    CHECK(common.kind() == Formula::Kind::Common);
    CHECK(common.group() == AgentSet{0, 1});
    Formula full = parse_formula("C f", sig);
    CHECK(full.group() == sig->all_agents());
    CHECK(parse_formula("E[{A}] f", sig).kind() == Formula::Kind::Everyone);
  }

  TEST_CASE("queries parse plans with grounded action names") {
    auto sig = std::make_shared<const Signature>(
        std::vector<std::string>{"A"}, std::vector<std::string>{"f"},
        std::vector<std::string>{"go(A)", "stop"});
    Query q = parse_query("B[A] f after go(A); stop", sig);
    CHECK(q.plan.size() == 2);
    CHECK(q.plan[0] == sig->action("go(A)"));
    Query empty = parse_query("f after []", sig);
    CHECK(empty.plan.empty());
    CHECK(pretty_print(q, *sig) == pretty_print(parse_query(pretty_print(q, *sig), sig), *sig));
  }

  TEST_CASE("undeclared names and malformed statements are parse errors") {
    CHECK_THROWS_AS(parse_theory("agents A\nfluents f\nactions a\nb causes f"), ParseError);
    CHECK_THROWS_AS(parse_theory("agents A\nfluents f\nactions a\na causes f if if"), ParseError);
    CHECK_THROWS_AS(parse_theory("fluents f\nagents A\nactions a\na determines f\nfluents g"),
                    ParseError);
  }

  TEST_CASE("observability conditions must be fluent formulas") {
    CHECK_THROWS_AS(
        parse_theory("agents A\nfluents f\nactions a\na determines f\nA observes a if B[A] f"),
        ParseError);
  }

  TEST_CASE("announced payloads must be fluent formulas") {
    CHECK_THROWS_AS(parse_theory("agents A\nfluents f\nactions a\na announces B[A] f"),
                    ParseError);
  }

  TEST_CASE("validation flags category conflicts and duplicates") {
    Theory dual = parse_theory("agents A\nfluents f\nactions a\na causes f\na determines f");
    ValidationReport r = validate(dual);
    CHECK_FALSE(r.ok());
    CHECK_THROWS_AS((void)dual.kind_of(0), ValidationError);

    Theory multi =
        parse_theory("agents A\nfluents f\nactions a\na announces f\na announces !f");
    CHECK_FALSE(validate(multi).ok());

    Theory fine = parse_theory(kTinyTheory);
    CHECK(validate(fine).ok());
  }

  TEST_CASE("uncategorized actions warn instead of failing") {
    Theory t = parse_theory("agents A\nfluents f\nactions a\nexecutable a if f");
    ValidationReport r = validate(t);
    CHECK(r.ok());
    CHECK_FALSE(r.issues.empty());
  }
}
