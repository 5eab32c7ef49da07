#include "jasonrs/logic/solver.hpp"

#include <memory>

#include "jasonrs/logic/errors.hpp"
#include "jasonrs/logic/program.hpp"

namespace jasonrs::logic {
namespace {

/// Persistent goal list. Nodes may hold the renamed rule their formula
/// points into, keeping it alive while the goal is pending.
struct GoalNode {
    const Formula* formula;
    std::shared_ptr<const Rule> owner;
    std::shared_ptr<const GoalNode> next;
};
using GoalList = std::shared_ptr<const GoalNode>;

GoalList push(const Formula* f, std::shared_ptr<const Rule> owner, GoalList rest) {
    return std::make_shared<const GoalNode>(GoalNode{f, std::move(owner), std::move(rest)});
}

/// Alternatives left for one literal goal.
struct ChoicePoint {
    const Literal* goal;
    std::shared_ptr<const Rule> owner;
    GoalList rest;
    std::size_t trail_mark;
    std::size_t next_belief = 0;
    std::size_t next_rule = 0;
};

struct SearchState {
    std::span<const Literal> beliefs;
    std::span<const Rule> rules;
    SolveOptions options;
    std::size_t steps = 0;
    std::size_t renames = 0;
};

/// Iterative depth-first search over one conjunction of goals. Negation
/// runs a nested Engine sharing the substitution and step budget.
class Engine {
public:
    Engine(SearchState& state, Substitution& subst, Trail& trail)
        : state_(state), subst_(subst), trail_(trail) {}

    /// Calls `sink` per solution until it returns false. Returns false if
    /// stopped by the sink. Bindings are undone before returning.
    template <typename Sink>
    bool run(const Formula& goal, Sink&& sink) {
        const std::size_t base = trail_.size();
        GoalList goals = push(&goal, nullptr, nullptr);
        bool keep_going = true;
        for (;;) {
            if (goals) {
                if (step(goals)) {
                    continue;
                }
            } else if (!sink(static_cast<const Substitution&>(subst_))) {
                keep_going = false;
                break;
            }
            if (!backtrack(goals)) {
                break;
            }
        }
        choices_.clear();
        undo_to(subst_, trail_, base);
        return keep_going;
    }

private:
    void count_step() {
        if (++state_.steps > state_.options.max_steps) {
            throw DepthExceeded(state_.options.max_steps);
        }
    }

    /// Reduces the first goal. Returns false when the branch fails.
    bool step(GoalList& goals) {
        GoalList node = goals;
        const Formula& f = *node->formula;
        goals = node->next;
        switch (f.kind) {
        case FormulaKind::True:
            return true;
        case FormulaKind::And:
            goals = push(&f.children[0], node->owner, push(&f.children[1], node->owner, goals));
            return true;
        case FormulaKind::Lit:
            choices_.push_back(ChoicePoint{&f.literal, node->owner, goals, trail_.size()});
            return resume(goals);
        case FormulaKind::Not:
            return negation(f);
        case FormulaKind::Rel:
            return relation(f);
        }
        return false;
    }

    /// Pops exhausted choice points and resumes the newest live one.
    bool backtrack(GoalList& goals) {
        while (!choices_.empty()) {
            undo_to(subst_, trail_, choices_.back().trail_mark);
            if (resume(goals)) {
                return true;
            }
        }
        return false;
    }

    /// Tries the next alternative of the top choice point; pops it when none
    /// remain.
    bool resume(GoalList& goals) {
        ChoicePoint& cp = choices_.back();
        const Literal& goal = *cp.goal;
        while (cp.next_belief < state_.beliefs.size()) {
            const Literal& belief = state_.beliefs[cp.next_belief++];
            if (belief.same_signature(goal) && unify_literal_trailed(goal, belief, subst_, trail_)) {
                count_step();
                goals = cp.rest;
                return true;
            }
        }
        while (cp.next_rule < state_.rules.size()) {
            const Rule& rule = state_.rules[cp.next_rule++];
            if (!rule.head.same_signature(goal)) {
                continue;
            }
            auto fresh = std::make_shared<const Rule>(rename_vars(rule, "__" + std::to_string(++state_.renames)));
            if (unify_literal_trailed(goal, fresh->head, subst_, trail_)) {
                count_step();
                goals = push(&fresh->body, fresh, cp.rest);
                return true;
            }
        }
        choices_.pop_back();
        return false;
    }

    bool negation(const Formula& f) {
        for (const auto& v : f.guarded) {
            if (subst_.walk(Term::var(v)).is_var()) {
                throw UnboundNegation("variable " + v + " is unbound in not (" + to_string(f.children[0]) + ")");
            }
        }
        Engine inner(state_, subst_, trail_);
        bool provable = !inner.run(f.children[0], [](const Substitution&) { return false; });
        return !provable;
    }

    bool relation(const Formula& f) {
        const Expr& lhs = f.sides[0];
        const Expr& rhs = f.sides[1];
        auto as_term = [&](const Expr& e) {
            return e.is_leaf() ? subst_.apply(e.leaf) : Term::num(eval_expr(e, subst_));
        };
        switch (f.rel) {
        case RelOp::Unify:
            return unify_trailed(as_term(lhs), as_term(rhs), subst_, trail_);
        case RelOp::Eq:
            return as_term(lhs) == as_term(rhs);
        case RelOp::Neq:
            return as_term(lhs) != as_term(rhs);
        default:
            break;
        }
        std::strong_ordering order = std::strong_ordering::equal;
        if (lhs.is_leaf() && rhs.is_leaf()) {
            Term a = subst_.apply(lhs.leaf);
            Term b = subst_.apply(rhs.leaf);
            if (a.is_ground() && b.is_ground() && !(a.is_num() && b.is_num())) {
                order = a <=> b; // standard order for non-numeric constants
            } else {
                order = eval_expr(lhs, subst_) <=> eval_expr(rhs, subst_);
            }
        } else {
            order = eval_expr(lhs, subst_) <=> eval_expr(rhs, subst_);
        }
        switch (f.rel) {
        case RelOp::Lt: return order < 0;
        case RelOp::Le: return order <= 0;
        case RelOp::Gt: return order > 0;
        case RelOp::Ge: return order >= 0;
        default: return false;
        }
    }

    SearchState& state_;
    Substitution& subst_;
    Trail& trail_;
    std::vector<ChoicePoint> choices_;
};

/// Keeps only the bindings visible from the caller: the goal's variables
/// and whatever the initial substitution already bound.
Substitution project(const Substitution& full, const std::set<std::string>& visible) {
    Substitution out;
    for (const auto& v : visible) {
        Term value = full.apply(Term::var(v));
        if (!(value.is_var() && value.text() == v)) {
            out.bind(v, std::move(value));
        }
    }
    return out;
}

} // namespace

void solve(const Formula& goal, std::span<const Literal> beliefs, std::span<const Rule> rules,
           const Substitution& initial, const SolutionSink& sink, const SolveOptions& options) {
    SearchState state{beliefs, rules, options};
    Substitution subst = initial;
    Trail trail;
    std::set<std::string> visible;
    goal.collect_vars(visible);
    for (const auto& [name, value] : initial.bindings()) {
        visible.insert(name);
        value.collect_vars(visible);
    }
    Engine engine(state, subst, trail);
    engine.run(goal, [&](const Substitution& s) { return sink(project(s, visible)); });
}

std::vector<Substitution> solve_all(const Formula& goal, std::span<const Literal> beliefs,
                                    std::span<const Rule> rules, const Substitution& initial,
                                    const SolveOptions& options) {
    std::vector<Substitution> out;
    solve(goal, beliefs, rules, initial, [&](const Substitution& s) {
        out.push_back(s);
        return true;
    }, options);
    return out;
}

std::optional<Substitution> solve_first(const Formula& goal, std::span<const Literal> beliefs,
                                        std::span<const Rule> rules, const Substitution& initial,
                                        const SolveOptions& options) {
    std::optional<Substitution> out;
    solve(goal, beliefs, rules, initial, [&](const Substitution& s) {
        out = s;
        return false;
    }, options);
    return out;
}

} // namespace jasonrs::logic
