#include <set>

#include "jasonrs/logic/errors.hpp"
#include "jasonrs/logic/program.hpp"
#include "lexer.hpp"

namespace jasonrs::logic {
namespace {

using detail::Token;
using detail::TokenKind;

bool is_relop(const Token& t) {
    return t.kind == TokenKind::Punct &&
           (t.text == "<" || t.text == "<=" || t.text == ">" || t.text == ">=" || t.text == "==" ||
            t.text == "\\==" || t.text == "=");
}

bool is_arith(const Token& t) {
    return t.kind == TokenKind::Punct && (t.text == "+" || t.text == "-" || t.text == "*" || t.text == "/");
}

RelOp relop_of(const std::string& text) {
    if (text == "<") return RelOp::Lt;
    if (text == "<=") return RelOp::Le;
    if (text == ">") return RelOp::Gt;
    if (text == ">=") return RelOp::Ge;
    if (text == "==") return RelOp::Eq;
    if (text == "\\==") return RelOp::Neq;
    return RelOp::Unify;
}

class Parser {
public:
    explicit Parser(std::string_view source) : tokens_(detail::tokenize(source)) {}

    AgentProgram program() {
        AgentProgram out;
        while (!at_end()) {
            const Token& t = peek();
            if (t.is("@") || t.is("+") || t.is("-")) {
                out.plans.push_back(plan());
                continue;
            }
            Token start = t;
            Literal head = literal("a belief, rule or plan");
            if (accept(":-")) {
                Formula body = formula();
                std::set<std::string> outside;
                head.collect_vars(outside);
                prepare_negations(body, outside);
                expect(".", "expected '.' to end rule");
                out.rules.push_back(Rule{std::move(head), std::move(body)});
            } else {
                expect(".", "expected '.' or ':-' after literal");
                if (!head.is_ground()) {
                    throw ParseError(start.line, start.column, "initial belief must be ground");
                }
                out.initial_beliefs.push_back(std::move(head));
            }
        }
        return out;
    }

    Formula standalone_formula() {
        Formula f = formula();
        prepare_negations(f, {});
        expect_end();
        return f;
    }

    Term standalone_term() {
        Term t = term();
        expect_end();
        return t;
    }

    Literal standalone_literal() {
        Literal l = literal("a literal");
        expect_end();
        return l;
    }

private:
    // ---- token helpers -----------------------------------------------------

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[i];
    }
    bool at_end() const { return peek().kind == TokenKind::End; }
    const Token& next() {
        const Token& t = peek();
        if (pos_ < tokens_.size() - 1) {
            ++pos_;
        }
        return t;
    }
    bool accept(std::string_view punct) {
        if (peek().is(punct)) {
            next();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        throw ParseError(t.line, t.column, expected + ", found " + detail::describe(t));
    }
    void expect(std::string_view punct, const std::string& expected) {
        if (!accept(punct)) {
            fail(expected);
        }
    }
    void expect_end() {
        if (!at_end()) {
            fail("expected end of input");
        }
    }

    std::string fresh_anonymous() { return "_G" + std::to_string(++anonymous_); }

    // ---- terms and literals -----------------------------------------------

    std::vector<Term> argument_list(const char* what) {
        std::vector<Term> args;
        expect("(", std::string("expected '(' to open ") + what);
        args.push_back(term());
        while (accept(",")) {
            args.push_back(term());
        }
        expect(")", std::string("expected ',' or ')' to close ") + what);
        return args;
    }

    Term term() {
        const Token& t = peek();
        switch (t.kind) {
        case TokenKind::Var: {
            std::string name = next().text;
            return Term::var(name == "_" ? fresh_anonymous() : name);
        }
        case TokenKind::Number:
            return Term::num(number(next(), false));
        case TokenKind::String:
            return Term::str(next().text);
        case TokenKind::Ident:
        case TokenKind::QuotedAtom: {
            std::string name = next().text;
            if (peek().is("(")) {
                return Term::structure(std::move(name), argument_list("argument list"));
            }
            return Term::atom(std::move(name));
        }
        case TokenKind::Punct:
            if (t.is("-") && peek(1).kind == TokenKind::Number) {
                next();
                return Term::num(number(next(), true));
            }
            if (t.is("[")) {
                fail("lists are not supported; expected a term");
            }
            break;
        case TokenKind::End:
            break;
        }
        fail("expected a term");
    }

    Decimal number(const Token& t, bool negative) {
        auto d = Decimal::parse((negative ? "-" : "") + t.text);
        if (!d) {
            throw ParseError(t.line, t.column, "number out of range or too precise: " + t.text);
        }
        return *d;
    }

    Literal literal(const char* what) {
        Literal out;
        if (accept("~")) {
            out.negated = true;
        }
        const Token& t = peek();
        if (t.kind != TokenKind::Ident && t.kind != TokenKind::QuotedAtom) {
            fail(std::string("expected ") + what);
        }
        Token name = next();
        out.predicate = name.text;
        if (peek().is("(")) {
            out.args = argument_list("argument list");
        }
        if (accept("[")) {
            out.annotations.push_back(term());
            while (accept(",")) {
                out.annotations.push_back(term());
            }
            expect("]", "expected ',' or ']' to close annotation list");
            std::size_t sources = 0;
            for (const auto& a : out.annotations) {
                if (a.is_struct() && a.text() == "source" && a.arity() == 1) {
                    ++sources;
                }
            }
            if (sources > 1) {
                throw ParseError(name.line, name.column, "at most one source(_) annotation is allowed");
            }
            out.normalize_annotations();
        }
        return out;
    }

    // ---- expressions and formulas -----------------------------------------

    Expr expr() {
        Expr lhs = product();
        while (peek().is("+") || peek().is("-")) {
            ArithOp op = next().text == "+" ? ArithOp::Add : ArithOp::Sub;
            lhs = Expr::binary(op, std::move(lhs), product());
        }
        return lhs;
    }

    Expr product() {
        Expr lhs = primary();
        while (peek().is("*") || peek().is("/")) {
            ArithOp op = next().text == "*" ? ArithOp::Mul : ArithOp::Div;
            lhs = Expr::binary(op, std::move(lhs), primary());
        }
        return lhs;
    }

    Expr primary() {
        if (accept("(")) {
            Expr e = expr();
            expect(")", "expected ')' to close expression");
            return e;
        }
        if (peek().is("-") && peek(1).kind != TokenKind::Number) {
            next();
            return Expr::binary(ArithOp::Sub, Expr::of(Term::num(0)), primary());
        }
        return Expr::of(term());
    }

    Formula relation() {
        Expr lhs = expr();
        if (!is_relop(peek())) {
            fail("expected a relational operator");
        }
        RelOp op = relop_of(next().text);
        return Formula::relation(op, std::move(lhs), expr());
    }

    Formula formula() {
        Formula f = unary();
        while (accept("&")) {
            f = Formula::conj(std::move(f), unary());
        }
        return f;
    }

    Formula unary() {
        const Token& t = peek();
        if (t.is_ident("not") && !peek(1).is("(") ) {
            next();
            return Formula::negation(unary());
        }
        if (t.is_ident("not")) {
            next();
            next(); // '('
            Formula inner = formula();
            expect(")", "expected ')' to close negation");
            return Formula::negation(std::move(inner));
        }
        if (t.is_ident("true") && !peek(1).is("(") && !is_relop(peek(1)) && !is_arith(peek(1))) {
            next();
            return Formula::truth();
        }
        if (t.is("(")) {
            std::size_t save = pos_;
            try {
                next();
                Formula inner = formula();
                expect(")", "expected ')' to close formula");
                if (!is_relop(peek()) && !is_arith(peek())) {
                    return inner;
                }
            } catch (const ParseError&) {
            }
            pos_ = save;
            return relation();
        }
        if (t.is("~")) {
            return Formula::lit(literal("a literal"));
        }
        if (t.kind == TokenKind::Ident || t.kind == TokenKind::QuotedAtom) {
            std::size_t save = pos_;
            Literal l = literal("a literal");
            if (!is_relop(peek()) && !is_arith(peek())) {
                return Formula::lit(std::move(l));
            }
            pos_ = save;
        }
        return relation();
    }

    // ---- plans -------------------------------------------------------------

    Plan plan() {
        Plan p;
        if (accept("@")) {
            const Token& t = peek();
            if (t.kind != TokenKind::Ident && t.kind != TokenKind::QuotedAtom) {
                fail("expected a plan label after '@'");
            }
            p.label = next().text;
        }
        if (accept("+")) {
            p.trigger.kind = accept("!") ? TriggerKind::AddGoal : TriggerKind::AddBelief;
        } else if (accept("-")) {
            p.trigger.kind = accept("!") ? TriggerKind::DelGoal : TriggerKind::DelBelief;
        } else {
            fail("expected '+' or '-' to start a triggering event");
        }
        p.trigger.literal = literal("a triggering literal");
        if (accept(":")) {
            p.context = formula();
        }
        if (accept("<-")) {
            body(p.body);
        }
        expect(".", "expected '.' to end plan");

        std::set<std::string> trigger_vars;
        p.trigger.literal.collect_vars(trigger_vars);
        prepare_negations(p.context, trigger_vars);
        for (std::size_t i = 0; i < p.body.size(); ++i) {
            auto* test = std::get_if<TestStep>(&p.body[i]);
            if (test == nullptr) {
                continue;
            }
            std::set<std::string> outside = trigger_vars;
            p.context.collect_free_vars(outside);
            for (std::size_t j = 0; j < p.body.size(); ++j) {
                if (j != i) {
                    step_vars(p.body[j], outside);
                }
            }
            prepare_negations(test->goal, outside);
        }
        return p;
    }

    static void step_vars(const ActionStep& step, std::set<std::string>& out) {
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, AddBeliefStep> || std::is_same_v<T, DelBeliefStep>) {
                    s.literal.collect_vars(out);
                } else if constexpr (std::is_same_v<T, AchieveStep>) {
                    s.goal.collect_vars(out);
                } else if constexpr (std::is_same_v<T, TestStep>) {
                    s.goal.collect_free_vars(out);
                } else if constexpr (std::is_same_v<T, SendStep>) {
                    s.to.collect_vars(out);
                    s.content.collect_vars(out);
                } else if constexpr (std::is_same_v<T, PublishDecisionStep>) {
                    s.content.collect_vars(out);
                } else {
                    for (const auto& a : s.args) {
                        a.collect_vars(out);
                    }
                }
            },
            step);
    }

    void body(std::vector<ActionStep>& out) {
        do {
            if (peek().is_ident("true") && (peek(1).is(";") || peek(1).is("."))) {
                next();
                continue;
            }
            out.push_back(step());
        } while (accept(";"));
    }

    ActionStep step() {
        if (accept("+")) {
            return AddBeliefStep{literal("a literal to add")};
        }
        if (accept("-")) {
            return DelBeliefStep{literal("a literal to delete")};
        }
        if (accept("!")) {
            return AchieveStep{literal("a goal literal")};
        }
        if (accept("?")) {
            return TestStep{formula()};
        }
        if (accept(".")) {
            const Token& t = peek();
            if (t.kind != TokenKind::Ident) {
                fail("expected an internal action name after '.'");
            }
            Token name = next();
            if (name.text == "send") {
                return send_step();
            }
            if (name.text == "publish_decision") {
                expect("(", "expected '(' after .publish_decision");
                Term content = term();
                expect(")", "expected ')' to close .publish_decision");
                return PublishDecisionStep{std::move(content)};
            }
            ExternalActionStep ext{"." + name.text, {}};
            if (peek().is("(")) {
                ext.args = argument_list("argument list");
            }
            return ext;
        }
        const Token& t = peek();
        if (t.kind == TokenKind::Ident || t.kind == TokenKind::QuotedAtom) {
            ExternalActionStep ext{next().text, {}};
            if (peek().is("(")) {
                ext.args = argument_list("argument list");
            }
            return ext;
        }
        fail("expected a plan body step");
    }

    ActionStep send_step() {
        SendStep s;
        expect("(", "expected '(' after .send");
        s.to = term();
        if (!s.to.is_atom() && !s.to.is_var()) {
            fail("expected an agent name as first .send argument");
        }
        expect(",", "expected ',' after .send receiver");
        const Token& perf = peek();
        if (perf.is_ident("tell")) {
            s.performative = Performative::Tell;
        } else if (perf.is_ident("achieve")) {
            s.performative = Performative::Achieve;
        } else {
            fail("expected performative 'tell' or 'achieve'");
        }
        next();
        expect(",", "expected ',' after .send performative");
        s.content = literal("a message content literal");
        expect(")", "expected ')' to close .send");
        return s;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t anonymous_ = 0;
};

} // namespace

AgentProgram parse_program(std::string_view source) { return Parser(source).program(); }
Formula parse_formula(std::string_view source) { return Parser(source).standalone_formula(); }
Term parse_term(std::string_view source) { return Parser(source).standalone_term(); }
Literal parse_literal(std::string_view source) { return Parser(source).standalone_literal(); }

} // namespace jasonrs::logic
