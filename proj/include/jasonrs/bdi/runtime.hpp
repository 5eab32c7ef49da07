#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <thread>
#include <vector>

#include "jasonrs/bdi/agent.hpp"

namespace jasonrs::bdi {

/// Environment action callback. Receives the calling agent's name and the
/// fully substituted arguments; returning false fails the intention.
using ActionHandler = std::function<bool(const std::string& agent, const std::vector<logic::Term>& args)>;

/// Observer of every published decision (tracing, tests).
using DecisionObserver = std::function<void(const std::string& agent, const Decision& decision)>;

struct RuntimeOptions {
    Clock clock = system_clock();
    logic::SolveOptions solve;
    /// Records every CycleReport that did something.
    bool keep_trace = false;
};

/// Registry of agents plus the cycle executor. Agents run one at a time,
/// round-robin in creation order, either driven explicitly
/// (run_until_quiescent) or by the background scheduler.
class Runtime {
public:
    explicit Runtime(RuntimeOptions options = {});
    ~Runtime();

    Runtime(const Runtime&) = delete;
    Runtime& operator=(const Runtime&) = delete;

    Agent& create_agent(const std::string& name, const logic::AgentProgram& program);

    Agent* find(const std::string& name) const;
    /// Throws UnknownAgent.
    Agent& agent(const std::string& name) const;
    std::vector<std::string> agent_names() const;

    void deliver_message(const std::string& to, const std::string& from, logic::Performative performative,
                         logic::Literal content);
    std::optional<Decision> read_decision(const std::string& agent) const;

    /// One cycle of every agent. Returns the reports of this round.
    std::vector<CycleReport> run_round();

    /// Rounds until everything is quiescent; returns rounds used.
    /// Throws QuiescenceTimeout when max_rounds is reached with work left.
    std::size_t run_until_quiescent(std::size_t max_rounds);

    bool quiescent() const;

    void register_action(const std::string& name, ActionHandler handler);
    void set_decision_observer(DecisionObserver observer);

    /// Background executor: cycles agents whenever input arrives.
    void start();
    void stop();

    std::vector<std::string> trace() const;

    // Used by agents.
    const Clock& clock() const { return options_.clock; }
    const logic::SolveOptions& solve_options() const { return options_.solve; }
    bool invoke_action(const std::string& agent, const std::string& name, const std::vector<logic::Term>& args);
    void on_decision(const std::string& agent, const Decision& decision);
    void notify();

private:
    std::vector<Agent*> snapshot_agents() const;

    RuntimeOptions options_;

    mutable std::shared_mutex agents_mutex_;
    std::map<std::string, std::unique_ptr<Agent>> agents_;
    std::vector<Agent*> order_;

    std::mutex executor_mutex_; // single writer: one cycle at a time

    mutable std::mutex hooks_mutex_;
    std::map<std::string, ActionHandler> actions_;
    DecisionObserver decision_observer_;
    std::vector<std::string> trace_;

    std::mutex wake_mutex_;
    std::condition_variable wake_;
    bool wake_pending_ = false;
    bool running_ = false;
    std::thread scheduler_;
};

} // namespace jasonrs::bdi
