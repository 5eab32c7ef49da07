#include "jasonrs/bdi/runtime.hpp"

#include <chrono>

#include <spdlog/spdlog.h>

namespace jasonrs::bdi {

Runtime::Runtime(RuntimeOptions options) : options_(std::move(options)) {}

Runtime::~Runtime() { stop(); }

Agent& Runtime::create_agent(const std::string& name, const logic::AgentProgram& program) {
    if (!logic::is_identifier(name)) {
        throw RuntimeError("invalid agent name: " + name);
    }
    std::unique_lock lock(agents_mutex_);
    if (agents_.count(name) != 0) {
        throw DuplicateAgentName(name);
    }
    auto agent = std::make_unique<Agent>(name, program, *this);
    Agent* raw = agent.get();
    agents_.emplace(name, std::move(agent));
    order_.push_back(raw);
    lock.unlock();
    notify();
    return *raw;
}

Agent* Runtime::find(const std::string& name) const {
    std::shared_lock lock(agents_mutex_);
    auto it = agents_.find(name);
    return it == agents_.end() ? nullptr : it->second.get();
}

Agent& Runtime::agent(const std::string& name) const {
    if (Agent* a = find(name)) {
        return *a;
    }
    throw UnknownAgent(name);
}

std::vector<std::string> Runtime::agent_names() const {
    std::shared_lock lock(agents_mutex_);
    std::vector<std::string> names;
    names.reserve(order_.size());
    for (const Agent* a : order_) {
        names.push_back(a->name());
    }
    return names;
}

std::vector<Agent*> Runtime::snapshot_agents() const {
    std::shared_lock lock(agents_mutex_);
    return order_;
}

void Runtime::deliver_message(const std::string& to, const std::string& from, logic::Performative performative,
                              logic::Literal content) {
    agent(to).deliver(from, performative, std::move(content));
}

std::optional<Decision> Runtime::read_decision(const std::string& name) const {
    return agent(name).read_decision();
}

std::vector<CycleReport> Runtime::run_round() {
    std::lock_guard exec(executor_mutex_);
    std::vector<CycleReport> reports;
    for (Agent* a : snapshot_agents()) {
        reports.push_back(a->reasoning_cycle());
    }
    if (options_.keep_trace) {
        std::lock_guard hooks(hooks_mutex_);
        for (const auto& r : reports) {
            if (!r.noop()) {
                trace_.push_back(to_string(r));
            }
        }
    }
    return reports;
}

bool Runtime::quiescent() const {
    for (const Agent* a : snapshot_agents()) {
        if (!a->quiescent()) {
            return false;
        }
    }
    return true;
}

std::size_t Runtime::run_until_quiescent(std::size_t max_rounds) {
    std::size_t rounds = 0;
    while (!quiescent()) {
        if (rounds == max_rounds) {
            throw QuiescenceTimeout(max_rounds);
        }
        run_round();
        ++rounds;
    }
    return rounds;
}

void Runtime::register_action(const std::string& name, ActionHandler handler) {
    std::lock_guard lock(hooks_mutex_);
    actions_[name] = std::move(handler);
}

void Runtime::set_decision_observer(DecisionObserver observer) {
    std::lock_guard lock(hooks_mutex_);
    decision_observer_ = std::move(observer);
}

bool Runtime::invoke_action(const std::string& agent, const std::string& name, const std::vector<logic::Term>& args) {
    ActionHandler handler;
    {
        std::lock_guard lock(hooks_mutex_);
        auto it = actions_.find(name);
        if (it != actions_.end()) {
            handler = it->second;
        }
    }
    if (!handler) {
        spdlog::info("[{}] action {} has no handler, ignored", agent, name);
        return true;
    }
    return handler(agent, args);
}

void Runtime::on_decision(const std::string& agent, const Decision& decision) {
    DecisionObserver observer;
    {
        std::lock_guard lock(hooks_mutex_);
        observer = decision_observer_;
    }
    spdlog::debug("[{}] decision #{} {}", agent, decision.seq, logic::to_string(decision.content));
    if (observer) {
        observer(agent, decision);
    }
}

std::vector<std::string> Runtime::trace() const {
    std::lock_guard lock(hooks_mutex_);
    return trace_;
}

void Runtime::notify() {
    {
        std::lock_guard lock(wake_mutex_);
        wake_pending_ = true;
    }
    wake_.notify_one();
}

void Runtime::start() {
    std::lock_guard lock(wake_mutex_);
    if (running_) {
        return;
    }
    running_ = true;
    scheduler_ = std::thread([this] {
        for (;;) {
            {
                std::unique_lock lock(wake_mutex_);
                wake_.wait_for(lock, std::chrono::milliseconds(50), [this] { return wake_pending_ || !running_; });
                if (!running_) {
                    return;
                }
                wake_pending_ = false;
            }
            while (!quiescent()) {
                run_round();
                std::lock_guard lock(wake_mutex_);
                if (!running_) {
                    return;
                }
            }
        }
    });
}

void Runtime::stop() {
    {
        std::lock_guard lock(wake_mutex_);
        if (!running_) {
            return;
        }
        running_ = false;
    }
    wake_.notify_all();
    if (scheduler_.joinable()) {
        scheduler_.join();
    }
}

} // namespace jasonrs::bdi
