#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jasonrs/gateway/http_types.hpp"
#include "jasonrs/logic/decimal.hpp"

namespace jasonrs::scenario {

using gateway::Json;

class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Evacuator {
    std::string name;
    logic::Decimal base_cost;
};

/// A sensor feature (by local key) feeding one evacuator's load.
struct SensorBinding {
    std::string feature;
    std::string evacuator;
};

struct PerceptStep {
    std::string feature;
    Json value;
};

struct ScenarioSpec {
    std::vector<Evacuator> evacuators;
    std::vector<SensorBinding> sensor_bindings;
    std::string decider = "agent_decider";
    std::vector<PerceptStep> percepts;
};

/// {"evacuators":[{"name","base_cost"}], "sensor_bindings":[{"feature","evacuator"}],
///  "decider": name, "percepts":[{"feature","value"}]}
/// Throws ScenarioError on schema or consistency violations.
ScenarioSpec parse_scenario(const Json& j);
ScenarioSpec load_scenario(const std::string& path);
Json to_json(const ScenarioSpec& spec);

/// Evacuator: effective cost = base_cost + latest load percept (0 without one),
/// told to the decider whenever either changes.
std::string evacuator_program(const Evacuator& e, const std::string& decider);

/// Decider: once every evacuator has reported, publishes allocate(E) for the
/// cheapest one (first in declaration order on ties) whenever the choice changes.
std::string decider_program(const std::vector<Evacuator>& evacuators);

struct ScenarioOptions {
    std::size_t max_rounds = 10000;
    std::int64_t start_ms = 1'700'000'000'000;
};

struct ScenarioResult {
    std::vector<std::string> decisions; // "allocate(e2)#1@<ms>"
    std::vector<std::string> requests;  // "PUT /feature/1 -> 202"
    std::vector<std::string> cycles;    // runtime cycle trace
    std::optional<std::string> final_decision;
    std::size_t rounds = 0;

    /// Stable text rendering of everything above.
    std::string to_text() const;
};

/// Runs the whole stack in-process with a deterministic clock: login, one
/// gauge feature per binding linked to its evacuator, then one PUT per
/// percept step, each followed by a run to quiescence.
/// Throws ScenarioError on unexpected statuses, QuiescenceTimeout on divergence.
ScenarioResult run_scenario(const ScenarioSpec& spec, const ScenarioOptions& options = {});

} // namespace jasonrs::scenario
