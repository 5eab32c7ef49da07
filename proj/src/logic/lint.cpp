#include <set>

#include "jasonrs/logic/program.hpp"

namespace jasonrs::logic {
namespace {

/// Trigger literal with only distinct variables and no annotations: matches
/// every event of its signature.
bool matches_everything(const Literal& l) {
    if (!l.annotations.empty()) {
        return false;
    }
    std::set<std::string> seen;
    for (const auto& a : l.args) {
        if (!a.is_var() || !seen.insert(a.text()).second) {
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<Diagnostic> lint(const AgentProgram& p) {
    std::vector<Diagnostic> out;
    for (const auto& r : p.rules) {
        std::set<std::string> head;
        std::set<std::string> body;
        r.head.collect_vars(head);
        r.body.collect_vars(body);
        for (const auto& v : head) {
            if (!body.count(v)) {
                out.push_back({Diagnostic::Severity::Warning,
                               "rule '" + to_string(r) + "': head variable " + v + " does not occur in the body"});
            }
        }
    }
    for (std::size_t j = 0; j < p.plans.size(); ++j) {
        const Plan& later = p.plans[j];
        for (std::size_t i = 0; i < j; ++i) {
            const Plan& earlier = p.plans[i];
            if (earlier.trigger.kind == later.trigger.kind &&
                earlier.trigger.literal.same_signature(later.trigger.literal) &&
                earlier.context.kind == FormulaKind::True && matches_everything(earlier.trigger.literal)) {
                out.push_back({Diagnostic::Severity::Warning, "plan '" + to_string(later) +
                                                                  "' is unreachable: an earlier plan '" +
                                                                  to_string(earlier) + "' always applies"});
                break;
            }
        }
    }
    return out;
}

} // namespace jasonrs::logic
