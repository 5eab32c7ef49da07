#include "doctest.h"

#include <algorithm>
#include <map>

#include "jasonrs/logic/errors.hpp"
#include "jasonrs/logic/program.hpp"
#include "jasonrs/logic/solver.hpp"
#include "../support/logic_oracle.hpp"

using namespace jasonrs::logic;

namespace {

std::vector<Literal> beliefs_of(const char* src) { return parse_program(src).initial_beliefs; }

} // namespace

TEST_CASE("fact lookup") {
    auto beliefs = beliefs_of("cost(e1,10). cost(e2,7).");
    auto all = solve_all(parse_formula("cost(e1,X)"), beliefs, {});
    REQUIRE(all.size() == 1);
    CHECK(all[0].apply(Term::var("X")) == Term::num(10));
}

TEST_CASE("cheapest via negation as failure matches brute force") {
    AgentProgram p = parse_program(R"(
        cost(e1,10). cost(e2,7). cost(e3,12).
        cheapest(A) :- cost(A,C) & not (cost(B,D) & D < C).
    )");
    // Independent oracle: every A whose cost is <= every other cost.
    std::map<std::string, int> costs{{"e1", 10}, {"e2", 7}, {"e3", 12}};
    std::vector<std::string> expected;
    for (const auto& [a, c] : costs) {
        bool minimal = std::all_of(costs.begin(), costs.end(), [&](const auto& other) { return !(other.second < c); });
        if (minimal) expected.push_back(a);
    }
    REQUIRE(expected == std::vector<std::string>{"e2"});

    auto all = solve_all(parse_formula("cheapest(A)"), p.initial_beliefs, p.rules);
    REQUIRE(all.size() == 1);
    CHECK(all[0].apply(Term::var("A")) == Term::atom("e2"));
}

TEST_CASE("no matching fact yields an empty sequence") {
    auto beliefs = beliefs_of("cost(e1,10). cost(e2,7). cost(e3,12).");
    CHECK(solve_all(parse_formula("cost(e9,X)"), beliefs, {}).empty());
}

TEST_CASE("solutions come in source order and enumeration is lazy") {
    auto beliefs = beliefs_of("n(3). n(1). n(2).");
    auto all = solve_all(parse_formula("n(X)"), beliefs, {});
    REQUIRE(all.size() == 3);
    CHECK(all[0].apply(Term::var("X")) == Term::num(3));
    CHECK(all[2].apply(Term::var("X")) == Term::num(2));

    int seen = 0;
    solve(parse_formula("n(X)"), beliefs, {}, {}, [&](const Substitution&) { return ++seen < 2; });
    CHECK(seen == 2);
}

TEST_CASE("facts are tried before rules") {
    AgentProgram p = parse_program("q(rule) :- true. q(fact).");
    auto all = solve_all(parse_formula("q(X)"), p.initial_beliefs, p.rules);
    REQUIRE(all.size() == 2);
    CHECK(all[0].apply(Term::var("X")) == Term::atom("fact"));
}

TEST_CASE("relations") {
    CHECK(solve_first(parse_formula("X = 3 + 4 & X == 7"), {}, {}));
    CHECK_FALSE(solve_first(parse_formula("X = 3 & X \\== 3"), {}, {}));
    CHECK(solve_first(parse_formula("a < b"), {}, {}));
    CHECK(solve_first(parse_formula("2.5 >= 2.50"), {}, {}));
    auto s = solve_first(parse_formula("X = f(Y) & Y = 2"), {}, {});
    REQUIRE(s);
    CHECK(s->apply(Term::var("X")) == parse_term("f(2)"));
}

TEST_CASE("arithmetic errors are raised, not swallowed") {
    CHECK_THROWS_AS(solve_first(parse_formula("X + 1 > 2"), {}, {}), UnboundArithmetic);
    CHECK_THROWS_AS(solve_first(parse_formula("X = 1 / 0"), {}, {}), DivisionByZero);
    CHECK_THROWS_AS(solve_first(parse_formula("X = a + 1"), {}, {}), TypeMismatch);
}

TEST_CASE("negation with an unbound shared variable is an error") {
    AgentProgram p = parse_program("bad(X) :- not q(X) & r(X). r(1).");
    CHECK_THROWS_AS(solve_first(parse_formula("bad(Y)"), p.initial_beliefs, p.rules), UnboundNegation);
    // Purely local variables are existential inside the negation.
    CHECK(solve_first(parse_formula("not q(_)"), p.initial_beliefs, p.rules));
}

TEST_CASE("sibling negations may reuse local variable names") {
    AgentProgram p = parse_program(
        "e(a,1). e(b,2). c(a,5). c(b,5).\n"
        "best(E) :- e(E,I) & c(E,C) & not (e(F,_) & c(F,D) & D < C) & not (e(F,J) & J < I & c(F,C)).");
    auto all = solve_all(parse_formula("best(E)"), p.initial_beliefs, p.rules);
    REQUIRE(all.size() == 1);
    CHECK(all[0].apply(Term::var("E")) == Term::atom("a"));
}

TEST_CASE("resolution step bound turns loops into errors") {
    AgentProgram p = parse_program("loop(X) :- loop(X).");
    CHECK_THROWS_AS(solve_first(parse_formula("loop(1)"), {}, p.rules), DepthExceeded);
    try {
        solve_first(parse_formula("loop(1)"), {}, p.rules, {}, SolveOptions{50});
    } catch (const DepthExceeded& e) {
        CHECK(e.bound() == 50);
    }
}

TEST_CASE("strong negation is a separate namespace") {
    auto beliefs = beliefs_of("~open(door).");
    CHECK_FALSE(solve_first(parse_formula("open(door)"), beliefs, {}));
    CHECK(solve_first(parse_formula("~open(door)"), beliefs, {}));
}

TEST_CASE("eval_expr") {
    Substitution s;
    CHECK(eval_expr(Expr::binary(ArithOp::Add, Expr::of(Term::num(3)), Expr::of(Term::num(4))), s) ==
          Decimal::from_int(7));
    s.bind("X", Term::num(5));
    CHECK(eval_expr(Expr::binary(ArithOp::Mul, Expr::of(Term::var("X")), Expr::of(Term::num(2))), s) ==
          Decimal::from_int(10));
    CHECK_THROWS_AS(eval_expr(Expr::binary(ArithOp::Add, Expr::of(Term::var("Y")), Expr::of(Term::num(1))), s),
                    UnboundArithmetic);
}

TEST_CASE("solve agrees with the ground-enumeration oracle on small programs") {
    using namespace jasonrs::testing;
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        ProgramGenerator gen(seed);
        OProgram prog = gen.program();
        OQuery query = gen.query(prog);
        std::vector<int> vars;
        std::set<Tuple> expected = oracle_answers(prog, query, &vars);

        std::string text = render_program(prog);
        AgentProgram parsed = parse_program(text);
        std::set<Tuple> actual;
        solve(parse_formula(render_items(query.items)), parsed.initial_beliefs, parsed.rules, {},
              [&](const Substitution& s) {
                  Tuple t;
                  for (int v : vars) {
                      t.push_back(static_cast<int>(s.apply(Term::var(var_name(v))).number().units() /
                                                   Decimal::kUnit));
                  }
                  actual.insert(t);
                  return true;
              },
              SolveOptions{1'000'000});
        REQUIRE_MESSAGE(actual == expected, (text + "?- " + render_items(query.items)));
    }
}
