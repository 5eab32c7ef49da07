#include "jasonrs/logic/formula.hpp"

#include <algorithm>

#include "jasonrs/logic/errors.hpp"
#include "jasonrs/logic/program.hpp"

namespace jasonrs::logic {

Expr Expr::of(Term t) {
    Expr e;
    e.leaf = std::move(t);
    return e;
}

Expr Expr::binary(ArithOp op, Expr lhs, Expr rhs) {
    Expr e;
    e.op = op;
    e.operands.push_back(std::move(lhs));
    e.operands.push_back(std::move(rhs));
    return e;
}

void Expr::collect_vars(std::set<std::string>& out) const {
    if (is_leaf()) {
        leaf.collect_vars(out);
        return;
    }
    for (const auto& o : operands) {
        o.collect_vars(out);
    }
}

Decimal eval_expr(const Expr& e, const Substitution& s) {
    if (e.is_leaf()) {
        Term t = s.apply(e.leaf);
        if (t.is_num()) {
            return t.number();
        }
        if (!t.is_ground()) {
            throw UnboundArithmetic("unbound variable in arithmetic: " + to_string(t));
        }
        throw TypeMismatch("non-numeric operand in arithmetic: " + to_string(t));
    }
    Decimal lhs = eval_expr(e.operands[0], s);
    Decimal rhs = eval_expr(e.operands[1], s);
    switch (e.op) {
    case ArithOp::Add: return lhs + rhs;
    case ArithOp::Sub: return lhs - rhs;
    case ArithOp::Mul: return lhs * rhs;
    case ArithOp::Div: return lhs / rhs;
    case ArithOp::Leaf: break;
    }
    return lhs;
}

Formula Formula::truth() { return Formula{}; }

Formula Formula::lit(Literal l) {
    Formula f;
    f.kind = FormulaKind::Lit;
    f.literal = std::move(l);
    return f;
}

Formula Formula::negation(Formula inner) {
    Formula f;
    f.kind = FormulaKind::Not;
    f.children.push_back(std::move(inner));
    return f;
}

Formula Formula::conj(Formula lhs, Formula rhs) {
    Formula f;
    f.kind = FormulaKind::And;
    f.children.push_back(std::move(lhs));
    f.children.push_back(std::move(rhs));
    return f;
}

Formula Formula::relation(RelOp op, Expr lhs, Expr rhs) {
    Formula f;
    f.kind = FormulaKind::Rel;
    f.rel = op;
    f.sides.push_back(std::move(lhs));
    f.sides.push_back(std::move(rhs));
    return f;
}

void Formula::collect_vars(std::set<std::string>& out) const {
    switch (kind) {
    case FormulaKind::True:
        break;
    case FormulaKind::Lit:
        literal.collect_vars(out);
        break;
    case FormulaKind::Rel:
        for (const auto& e : sides) {
            e.collect_vars(out);
        }
        break;
    case FormulaKind::Not:
    case FormulaKind::And:
        for (const auto& c : children) {
            c.collect_vars(out);
        }
        break;
    }
}

void Formula::collect_free_vars(std::set<std::string>& out) const {
    if (kind == FormulaKind::Not) {
        return;
    }
    if (kind == FormulaKind::And) {
        for (const auto& c : children) {
            c.collect_free_vars(out);
        }
        return;
    }
    collect_vars(out);
}

void prepare_negations(Formula& f, const std::set<std::string>& outside) {
    switch (f.kind) {
    case FormulaKind::Not: {
        std::set<std::string> inner;
        f.children[0].collect_vars(inner);
        f.guarded.clear();
        std::set_intersection(inner.begin(), inner.end(), outside.begin(), outside.end(),
                              std::back_inserter(f.guarded));
        prepare_negations(f.children[0], outside);
        break;
    }
    case FormulaKind::And: {
        std::set<std::string> left_out = outside;
        std::set<std::string> right_out = outside;
        f.children[1].collect_free_vars(left_out);
        f.children[0].collect_free_vars(right_out);
        prepare_negations(f.children[0], left_out);
        prepare_negations(f.children[1], right_out);
        break;
    }
    default:
        break;
    }
}

Term rename_vars(const Term& t, const std::string& suffix) {
    if (t.is_var()) {
        return Term::var(t.text() + suffix);
    }
    if (!t.is_struct()) {
        return t;
    }
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const auto& a : t.args()) {
        args.push_back(rename_vars(a, suffix));
    }
    return Term::structure(t.text(), std::move(args));
}

Literal rename_vars(const Literal& l, const std::string& suffix) {
    Literal out = l;
    for (auto& a : out.args) {
        a = rename_vars(a, suffix);
    }
    for (auto& a : out.annotations) {
        a = rename_vars(a, suffix);
    }
    out.normalize_annotations();
    return out;
}

Expr rename_vars(const Expr& e, const std::string& suffix) {
    if (e.is_leaf()) {
        return Expr::of(rename_vars(e.leaf, suffix));
    }
    return Expr::binary(e.op, rename_vars(e.operands[0], suffix), rename_vars(e.operands[1], suffix));
}

Formula rename_vars(const Formula& f, const std::string& suffix) {
    Formula out = f;
    switch (f.kind) {
    case FormulaKind::Lit:
        out.literal = rename_vars(f.literal, suffix);
        break;
    case FormulaKind::Rel:
        for (auto& e : out.sides) {
            e = rename_vars(e, suffix);
        }
        break;
    case FormulaKind::Not:
    case FormulaKind::And:
        for (auto& c : out.children) {
            c = rename_vars(c, suffix);
        }
        for (auto& g : out.guarded) {
            g += suffix;
        }
        break;
    case FormulaKind::True:
        break;
    }
    return out;
}

Rule rename_vars(const Rule& r, const std::string& suffix) {
    return Rule{rename_vars(r.head, suffix), rename_vars(r.body, suffix)};
}

Plan rename_vars(const Plan& p, const std::string& suffix) {
    Plan out;
    out.label = p.label;
    out.trigger = Trigger{p.trigger.kind, rename_vars(p.trigger.literal, suffix)};
    out.context = rename_vars(p.context, suffix);
    out.body.reserve(p.body.size());
    for (const auto& step : p.body) {
        out.body.push_back(std::visit(
            [&](const auto& s) -> ActionStep {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, AddBeliefStep>) {
                    return AddBeliefStep{rename_vars(s.literal, suffix)};
                } else if constexpr (std::is_same_v<T, DelBeliefStep>) {
                    return DelBeliefStep{rename_vars(s.literal, suffix)};
                } else if constexpr (std::is_same_v<T, AchieveStep>) {
                    return AchieveStep{rename_vars(s.goal, suffix)};
                } else if constexpr (std::is_same_v<T, TestStep>) {
                    return TestStep{rename_vars(s.goal, suffix)};
                } else if constexpr (std::is_same_v<T, SendStep>) {
                    return SendStep{rename_vars(s.to, suffix), s.performative, rename_vars(s.content, suffix)};
                } else if constexpr (std::is_same_v<T, PublishDecisionStep>) {
                    return PublishDecisionStep{rename_vars(s.content, suffix)};
                } else {
                    std::vector<Term> args;
                    for (const auto& a : s.args) {
                        args.push_back(rename_vars(a, suffix));
                    }
                    return ExternalActionStep{s.name, std::move(args)};
                }
            },
            step));
    }
    return out;
}

} // namespace jasonrs::logic
