#pragma once

#include <set>
#include <string>
#include <vector>

#include "jasonrs/logic/substitution.hpp"
#include "jasonrs/logic/term.hpp"

namespace jasonrs::logic {

enum class ArithOp { Leaf, Add, Sub, Mul, Div };

/// Arithmetic expression. Leaves hold any term; only numbers (or variables
/// bound to numbers) evaluate.
struct Expr {
    ArithOp op = ArithOp::Leaf;
    Term leaf;
    std::vector<Expr> operands; // two entries unless Leaf

    static Expr of(Term t);
    static Expr binary(ArithOp op, Expr lhs, Expr rhs);

    bool is_leaf() const { return op == ArithOp::Leaf; }
    void collect_vars(std::set<std::string>& out) const;

    friend bool operator==(const Expr&, const Expr&) = default;
};

/// Evaluates with exact decimal arithmetic.
/// Throws UnboundArithmetic, DivisionByZero, TypeMismatch, ArithmeticOverflow.
Decimal eval_expr(const Expr& e, const Substitution& s);

enum class RelOp { Lt, Le, Gt, Ge, Eq, Neq, Unify };

enum class FormulaKind { True, Lit, Not, And, Rel };

/// Context formula: conjunction, negation as failure, literal, relation.
struct Formula {
    FormulaKind kind = FormulaKind::True;
    Literal literal;               // Lit
    std::vector<Formula> children; // Not: 1, And: 2
    RelOp rel = RelOp::Eq;
    std::vector<Expr> sides;       // Rel: 2
    /// Not only: variables shared with the enclosing clause. They must be
    /// bound when the negation is evaluated. Filled by prepare_negations.
    std::vector<std::string> guarded;

    static Formula truth();
    static Formula lit(Literal l);
    static Formula negation(Formula inner);
    static Formula conj(Formula lhs, Formula rhs);
    static Formula relation(RelOp op, Expr lhs, Expr rhs);

    void collect_vars(std::set<std::string>& out) const;
    /// Variables that occur outside every negation (the ones a proof can bind).
    void collect_free_vars(std::set<std::string>& out) const;

    friend bool operator==(const Formula&, const Formula&) = default;
};

/// Computes the `guarded` lists of every Not node, given the variables that
/// occur outside `f` in its clause (head, trigger, ...).
void prepare_negations(Formula& f, const std::set<std::string>& outside);

/// Horn clause `head :- body`.
struct Rule {
    Literal head;
    Formula body;

    friend bool operator==(const Rule&, const Rule&) = default;
};

/// Renames every variable `V` to `V` + suffix.
Term rename_vars(const Term& t, const std::string& suffix);
Literal rename_vars(const Literal& l, const std::string& suffix);
Expr rename_vars(const Expr& e, const std::string& suffix);
Formula rename_vars(const Formula& f, const std::string& suffix);
Rule rename_vars(const Rule& r, const std::string& suffix);

} // namespace jasonrs::logic
