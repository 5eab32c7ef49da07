#include "doctest.h"

#include <random>

#include "jasonrs/logic/errors.hpp"
#include "jasonrs/logic/program.hpp"

using namespace jasonrs::logic;

TEST_CASE("single ground fact becomes an initial belief") {
    AgentProgram p = parse_program("cost(e1,10).");
    REQUIRE(p.initial_beliefs.size() == 1);
    CHECK(p.initial_beliefs[0] == Literal("cost", {Term::atom("e1"), Term::num(10)}));
    CHECK(p.rules.empty());
    CHECK(p.plans.empty());
}

TEST_CASE("plan with relational context and publish step") {
    AgentProgram p = parse_program("+data(X) : X > 3 <- .publish_decision(high).");
    REQUIRE(p.plans.size() == 1);
    const Plan& plan = p.plans[0];
    CHECK(plan.trigger.kind == TriggerKind::AddBelief);
    CHECK(plan.trigger.literal == Literal("data", {Term::var("X")}));
    CHECK(plan.context == Formula::relation(RelOp::Gt, Expr::of(Term::var("X")), Expr::of(Term::num(3))));
    REQUIRE(plan.body.size() == 1);
    CHECK(std::get<PublishDecisionStep>(plan.body[0]).content == Term::atom("high"));
}

TEST_CASE("unclosed argument list is reported at line 1") {
    try {
        parse_program("+data(X");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 8);
        CHECK(e.expected().find("close argument list") != std::string::npos);
    }
}

TEST_CASE("parse errors carry positions on later lines") {
    try {
        parse_program("a.\n% comment\nb(1,\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(parse_program("p(X)."), ParseError);           // non-ground belief
    CHECK_THROWS_AS(parse_program("p(1)[source(a),source(b)]."), ParseError);
    CHECK_THROWS_AS(parse_program("+a <- .send(b, ask, c)."), ParseError);
    CHECK_THROWS_AS(parse_program("p(\"open."), ParseError);
    CHECK_THROWS_AS(parse_program("p([1,2])."), ParseError);
    CHECK_THROWS_AS(parse_program("p(1) # q."), ParseError);
}

TEST_CASE("rules, goals, messages and external actions") {
    AgentProgram p = parse_program(R"(
        % waste disposal fragment
        cheapest(A) :- cost(A,C) & not (cost(B,D) & D < C).
        @decide +!choose : cheapest(E) <- .send(E, achieve, go); +chosen(E); actuate(1, true).
        -!choose <- .print("no choice").
        +go[source(S)] <- ?ready(S); !move; -ready(S).
        +p <- true.
    )");
    REQUIRE(p.rules.size() == 1);
    const Formula& body = p.rules[0].body;
    REQUIRE(body.kind == FormulaKind::And);
    const Formula& negation = body.children[1];
    REQUIRE(negation.kind == FormulaKind::Not);
    // C is shared with the rest of the clause, B and D are local.
    CHECK(negation.guarded == std::vector<std::string>{"C"});

    REQUIRE(p.plans.size() == 4);
    CHECK(p.plans[0].label == "decide");
    CHECK(p.plans[0].trigger.kind == TriggerKind::AddGoal);
    auto send = std::get<SendStep>(p.plans[0].body[0]);
    CHECK(send.to == Term::var("E"));
    CHECK(send.performative == Performative::Achieve);
    CHECK(std::get<ExternalActionStep>(p.plans[0].body[2]).name == "actuate");
    CHECK(p.plans[1].trigger.kind == TriggerKind::DelGoal);
    CHECK(std::get<ExternalActionStep>(p.plans[1].body[0]).name == ".print");
    CHECK(std::holds_alternative<TestStep>(p.plans[2].body[0]));
    CHECK(std::holds_alternative<AchieveStep>(p.plans[2].body[1]));
    CHECK(std::holds_alternative<DelBeliefStep>(p.plans[2].body[2]));
    CHECK(p.plans[3].body.empty());
}

TEST_CASE("parenthesised expressions and formulas are told apart") {
    Formula rel = parse_formula("(X + 1) * 2 > 3");
    CHECK(rel.kind == FormulaKind::Rel);
    CHECK(rel.sides[0].op == ArithOp::Mul);
    Formula grouped = parse_formula("a & (b & c)");
    REQUIRE(grouped.kind == FormulaKind::And);
    CHECK(grouped.children[1].kind == FormulaKind::And);
    Formula negated_rel = parse_formula("not (X > 3)");
    CHECK(negated_rel.kind == FormulaKind::Not);
}

TEST_CASE("anonymous variables are distinct") {
    Literal l = parse_literal("p(_, _)");
    CHECK(l.args[0] != l.args[1]);
    CHECK(l.args[0].is_var());
}

namespace {

// Random AST pieces for the round-trip property.
struct AstGen {
    std::mt19937_64 rng;
    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

    Term term(int depth) {
        switch (pick(depth > 0 ? 7 : 5)) {
        case 0: return Term::var(std::string(1, static_cast<char>('A' + pick(4))));
        case 1: return Term::atom(std::string(1, static_cast<char>('a' + pick(4))));
        case 2: return Term::num(jasonrs::logic::Decimal::from_units(pick(4001) * 250 - 500000));
        case 3: return Term::str(pick(2) ? "hi there" : "q\"uote");
        case 4: return Term::atom("Odd atom");
        default: {
            std::vector<Term> args;
            int n = 1 + pick(3);
            for (int i = 0; i < n; ++i) args.push_back(term(depth - 1));
            return Term::structure(pick(2) ? "f" : "g", std::move(args));
        }
        }
    }
    Literal literal() {
        std::vector<Term> args;
        int n = pick(3);
        for (int i = 0; i < n; ++i) args.push_back(term(2));
        std::vector<Term> ann;
        if (pick(3) == 0) ann.push_back(source_annotation(pick(2) ? Term::atom("percept") : Term::var("S")));
        return Literal(pick(2) ? "p" : "q", std::move(args), std::move(ann), pick(5) == 0);
    }
    Expr expr(int depth) {
        if (depth == 0 || pick(2) == 0) {
            return Expr::of(pick(2) ? Term::var("X") : Term::num(jasonrs::logic::Decimal::from_int(pick(21) - 10)));
        }
        ArithOp ops[] = {ArithOp::Add, ArithOp::Sub, ArithOp::Mul, ArithOp::Div};
        return Expr::binary(ops[pick(4)], expr(depth - 1), expr(depth - 1));
    }
    Formula formula(int depth) {
        switch (pick(depth > 0 ? 6 : 3)) {
        case 0: return Formula::lit(literal());
        case 1: {
            RelOp ops[] = {RelOp::Lt, RelOp::Le, RelOp::Gt, RelOp::Ge, RelOp::Eq, RelOp::Neq, RelOp::Unify};
            return Formula::relation(ops[pick(7)], expr(2), expr(2));
        }
        case 2: return Formula::lit(literal());
        case 3: return Formula::negation(formula(depth - 1));
        default: return Formula::conj(formula(depth - 1), formula(depth - 1));
        }
    }
    ActionStep step() {
        switch (pick(7)) {
        case 0: return AddBeliefStep{literal()};
        case 1: return DelBeliefStep{literal()};
        case 2: return AchieveStep{literal()};
        case 3: return TestStep{formula(2)};
        case 4: return SendStep{pick(2) ? Term::atom("bob") : Term::var("To"),
                                pick(2) ? Performative::Tell : Performative::Achieve, literal()};
        case 5: return PublishDecisionStep{term(2)};
        default: return ExternalActionStep{pick(2) ? "actuate" : ".print", {term(1), term(1)}};
        }
    }
    AgentProgram program() {
        AgentProgram p;
        for (int i = pick(3); i > 0; --i) {
            std::vector<Term> ann;
            if (pick(2)) ann.push_back(source_annotation(Term::atom("self")));
            p.initial_beliefs.push_back(Literal(pick(2) ? "p" : "q", {Term::atom("k"), Term::num(i)}, ann));
        }
        for (int i = pick(3); i > 0; --i) p.rules.push_back(Rule{literal(), formula(3)});
        for (int i = pick(4); i > 0; --i) {
            Plan plan;
            if (pick(2)) plan.label = "l" + std::to_string(i);
            TriggerKind kinds[] = {TriggerKind::AddBelief, TriggerKind::DelBelief, TriggerKind::AddGoal,
                                   TriggerKind::DelGoal};
            plan.trigger = Trigger{kinds[pick(4)], literal()};
            if (pick(2)) plan.context = formula(3);
            for (int k = pick(4); k > 0; --k) plan.body.push_back(step());
            p.plans.push_back(plan);
        }
        return p;
    }
};

} // namespace

TEST_CASE("parse . pretty_print . parse is the identity on the AST") {
    AstGen gen{std::mt19937_64(11)};
    for (int i = 0; i < 500; ++i) {
        AgentProgram ast = gen.program();
        std::string text = pretty_print(ast);
        AgentProgram first = parse_program(text);
        std::string again = pretty_print(first);
        AgentProgram second = parse_program(again);
        REQUIRE_MESSAGE(first == second, text);
        CHECK(again == pretty_print(second));
    }
}
