#pragma once

#include <atomic>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jasonrs/bdi/types.hpp"
#include "jasonrs/logic/solver.hpp"

namespace jasonrs::bdi {

class Runtime;

/// A BDI agent. State changes only inside reasoning_cycle(), which the
/// runtime calls from one executor at a time. inject_percept(), deliver()
/// and retract_percepts() may be called from any thread: they queue input
/// that the next cycle folds into the belief base.
class Agent {
public:
    Agent(std::string name, const logic::AgentProgram& program, Runtime& runtime);

    Agent(const Agent&) = delete;
    Agent& operator=(const Agent&) = delete;

    const std::string& name() const { return name_; }

    /// Queues a ground percept; `literal` gets a source(percept) annotation.
    /// Returns the input sequence number (receipt).
    std::uint64_t inject_percept(logic::Literal literal);
    std::uint64_t retract_percepts(std::string predicate);
    std::uint64_t deliver(std::string from, logic::Performative performative, logic::Literal content);

    /// Folds queued input into beliefs and events. Called at the start of
    /// every cycle; exposed so tests can observe belief revision alone.
    void perceive();

    CycleReport reasoning_cycle();

    /// No queued input, no pending events, no live intentions.
    bool quiescent() const;

    std::optional<Decision> read_decision() const;
    std::vector<logic::Literal> beliefs() const;
    std::vector<Event> pending_events() const;
    /// Every event raised so far (capped at history_limit, oldest dropped).
    std::vector<Event> event_history() const;
    std::size_t intention_count() const;

    static constexpr std::size_t history_limit = 65536;

private:
    struct PerceptInput { logic::Literal literal; };
    struct RetractInput { std::string predicate; };
    struct MessageInput { std::string from; logic::Performative performative; logic::Literal content; };
    using Input = std::variant<PerceptInput, RetractInput, MessageInput>;

    struct Frame {
        std::shared_ptr<const logic::Plan> plan;
        std::size_t plan_index = 0;
        std::size_t step = 0;
        logic::Substitution subst;
        /// AddGoal frames: the goal literal as posted by the parent frame.
        std::optional<logic::Literal> goal;
    };

    struct Intention {
        std::uint64_t id = 0;
        std::vector<Frame> stack;
        bool suspended = false; // waiting for its subgoal event
    };

    std::uint64_t enqueue(Input input);

    // All below run under state_mutex_.
    void apply_input(Input& input);
    void raise(logic::TriggerKind kind, logic::Literal literal, EventOrigin origin);
    bool add_belief(const logic::Literal& l, EventOrigin origin);
    bool remove_belief(const logic::Literal& l, EventOrigin origin);
    /// Returns the intention that received the selected plan, if any.
    std::optional<std::uint64_t> handle_event(const Event& event, CycleReport& report);
    void run_intention_step(CycleReport& report, std::optional<std::uint64_t> focus);
    void execute(Intention& intention, CycleReport& report);
    void fail_intention(Intention& intention, const std::string& why, CycleReport& report);
    void pop_finished_frames(Intention& intention);
    Intention* find_intention(std::uint64_t id);

    std::string name_;
    Runtime& runtime_;
    std::vector<std::shared_ptr<const logic::Plan>> plans_;

    mutable std::mutex inbox_mutex_;
    std::deque<Input> inbox_;
    std::uint64_t input_seq_ = 0;
    std::atomic<bool> inbox_nonempty_{false};

    mutable std::mutex state_mutex_;
    std::vector<logic::Literal> beliefs_;
    std::vector<logic::Rule> rules_;
    std::deque<Event> events_;
    std::deque<Event> history_;
    std::vector<Intention> intentions_;
    std::size_t next_intention_ = 0; // round-robin cursor
    std::uint64_t intention_ids_ = 0;
    std::uint64_t renames_ = 0;
    std::uint64_t cycles_ = 0;

    mutable std::mutex decision_mutex_;
    std::optional<Decision> decision_;
};

} // namespace jasonrs::bdi
