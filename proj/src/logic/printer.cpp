#include <sstream>

#include "jasonrs/logic/program.hpp"

namespace jasonrs::logic {
namespace {

const char* relop_text(RelOp op) {
    switch (op) {
    case RelOp::Lt: return "<";
    case RelOp::Le: return "<=";
    case RelOp::Gt: return ">";
    case RelOp::Ge: return ">=";
    case RelOp::Eq: return "==";
    case RelOp::Neq: return "\\==";
    case RelOp::Unify: return "=";
    }
    return "?";
}

char arith_text(ArithOp op) {
    switch (op) {
    case ArithOp::Add: return '+';
    case ArithOp::Sub: return '-';
    case ArithOp::Mul: return '*';
    case ArithOp::Div: return '/';
    case ArithOp::Leaf: break;
    }
    return '?';
}

void write_expr(std::ostream& os, const Expr& e, bool nested) {
    if (e.is_leaf()) {
        os << e.leaf;
        return;
    }
    if (nested) {
        os << '(';
    }
    write_expr(os, e.operands[0], true);
    os << ' ' << arith_text(e.op) << ' ';
    write_expr(os, e.operands[1], true);
    if (nested) {
        os << ')';
    }
}

void write_formula(std::ostream& os, const Formula& f) {
    switch (f.kind) {
    case FormulaKind::True:
        os << "true";
        break;
    case FormulaKind::Lit:
        os << f.literal;
        break;
    case FormulaKind::Not:
        os << "not (";
        write_formula(os, f.children[0]);
        os << ')';
        break;
    case FormulaKind::And: {
        write_formula(os, f.children[0]);
        os << " & ";
        const Formula& rhs = f.children[1];
        if (rhs.kind == FormulaKind::And) {
            os << '(';
            write_formula(os, rhs);
            os << ')';
        } else {
            write_formula(os, rhs);
        }
        break;
    }
    case FormulaKind::Rel:
        write_expr(os, f.sides[0], false);
        os << ' ' << relop_text(f.rel) << ' ';
        write_expr(os, f.sides[1], false);
        break;
    }
}

void write_step(std::ostream& os, const ActionStep& step) {
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AddBeliefStep>) {
                os << '+' << s.literal;
            } else if constexpr (std::is_same_v<T, DelBeliefStep>) {
                os << '-' << s.literal;
            } else if constexpr (std::is_same_v<T, AchieveStep>) {
                os << '!' << s.goal;
            } else if constexpr (std::is_same_v<T, TestStep>) {
                os << '?';
                write_formula(os, s.goal);
            } else if constexpr (std::is_same_v<T, SendStep>) {
                os << ".send(" << s.to << ',' << (s.performative == Performative::Tell ? "tell" : "achieve")
                   << ',' << s.content << ')';
            } else if constexpr (std::is_same_v<T, PublishDecisionStep>) {
                os << ".publish_decision(" << s.content << ')';
            } else {
                os << s.name;
                if (!s.args.empty()) {
                    os << '(';
                    for (std::size_t i = 0; i < s.args.size(); ++i) {
                        if (i != 0) {
                            os << ',';
                        }
                        os << s.args[i];
                    }
                    os << ')';
                }
            }
        },
        step);
}

template <typename T, typename Fn>
std::string render(const T& value, Fn fn) {
    std::ostringstream os;
    fn(os, value);
    return os.str();
}

} // namespace

std::string to_string(const Expr& e) {
    return render(e, [](std::ostream& os, const Expr& x) { write_expr(os, x, false); });
}

std::string to_string(const Formula& f) { return render(f, write_formula); }

std::string to_string(const Rule& r) {
    std::ostringstream os;
    os << r.head << " :- ";
    write_formula(os, r.body);
    return os.str();
}

std::string to_string(const Trigger& t) {
    std::ostringstream os;
    switch (t.kind) {
    case TriggerKind::AddBelief: os << '+'; break;
    case TriggerKind::DelBelief: os << '-'; break;
    case TriggerKind::AddGoal: os << "+!"; break;
    case TriggerKind::DelGoal: os << "-!"; break;
    }
    os << t.literal;
    return os.str();
}

std::string to_string(const ActionStep& s) { return render(s, write_step); }

std::string to_string(const Plan& p) {
    std::ostringstream os;
    if (p.label) {
        os << '@' << Term::atom(*p.label) << ' ';
    }
    os << to_string(p.trigger);
    if (p.context.kind != FormulaKind::True) {
        os << " : ";
        write_formula(os, p.context);
    }
    if (!p.body.empty()) {
        os << " <- ";
        for (std::size_t i = 0; i < p.body.size(); ++i) {
            if (i != 0) {
                os << "; ";
            }
            write_step(os, p.body[i]);
        }
    }
    return os.str();
}

std::string pretty_print(const AgentProgram& p) {
    std::ostringstream os;
    for (const auto& b : p.initial_beliefs) {
        os << b << ".\n";
    }
    for (const auto& r : p.rules) {
        os << to_string(r) << ".\n";
    }
    for (const auto& plan : p.plans) {
        os << to_string(plan) << ".\n";
    }
    return os.str();
}

} // namespace jasonrs::logic
