#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jasonrs/logic/formula.hpp"

namespace jasonrs::logic {

enum class TriggerKind { AddBelief, DelBelief, AddGoal, DelGoal };

struct Trigger {
    TriggerKind kind = TriggerKind::AddBelief;
    Literal literal;

    friend bool operator==(const Trigger&, const Trigger&) = default;
};

enum class Performative { Tell, Achieve };

struct AddBeliefStep { Literal literal; friend bool operator==(const AddBeliefStep&, const AddBeliefStep&) = default; };
struct DelBeliefStep { Literal literal; friend bool operator==(const DelBeliefStep&, const DelBeliefStep&) = default; };
struct AchieveStep { Literal goal; friend bool operator==(const AchieveStep&, const AchieveStep&) = default; };
struct TestStep { Formula goal; friend bool operator==(const TestStep&, const TestStep&) = default; };
struct SendStep {
    Term to; // atom, or variable bound at run time
    Performative performative = Performative::Tell;
    Literal content;
    friend bool operator==(const SendStep&, const SendStep&) = default;
};
struct PublishDecisionStep { Term content; friend bool operator==(const PublishDecisionStep&, const PublishDecisionStep&) = default; };
/// Anything else: environment actions (`actuate(F, V)`) and unknown
/// internal actions (`.print(X)`, name kept with its leading dot).
struct ExternalActionStep {
    std::string name;
    std::vector<Term> args;
    friend bool operator==(const ExternalActionStep&, const ExternalActionStep&) = default;
};

using ActionStep = std::variant<AddBeliefStep, DelBeliefStep, AchieveStep, TestStep, SendStep,
                                PublishDecisionStep, ExternalActionStep>;

struct Plan {
    std::optional<std::string> label;
    Trigger trigger;
    Formula context;
    std::vector<ActionStep> body;

    friend bool operator==(const Plan&, const Plan&) = default;
};

Plan rename_vars(const Plan& p, const std::string& suffix);

struct AgentProgram {
    std::vector<Literal> initial_beliefs;
    std::vector<Rule> rules;
    std::vector<Plan> plans; // source order

    friend bool operator==(const AgentProgram&, const AgentProgram&) = default;
};

/// Throws ParseError. No partial programs.
AgentProgram parse_program(std::string_view source);

/// Parses a standalone context formula, e.g. a query typed by a user.
Formula parse_formula(std::string_view source);
Term parse_term(std::string_view source);
Literal parse_literal(std::string_view source);

std::string to_string(const Expr& e);
std::string to_string(const Formula& f);
std::string to_string(const Rule& r);
std::string to_string(const Trigger& t);
std::string to_string(const ActionStep& s);
std::string to_string(const Plan& p);
/// Canonical source text; parse_program(pretty_print(p)) == p.
std::string pretty_print(const AgentProgram& p);

struct Diagnostic {
    enum class Severity { Warning, Error };
    Severity severity = Severity::Warning;
    std::string message;
};

/// Static checks: unbound rule-head variables, sends to non-atom targets, ...
std::vector<Diagnostic> lint(const AgentProgram& p);

} // namespace jasonrs::logic
