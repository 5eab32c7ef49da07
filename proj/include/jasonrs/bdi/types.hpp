#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jasonrs/logic/program.hpp"

namespace jasonrs::bdi {

/// Milliseconds since the Unix epoch. Injected so tests control time.
using Clock = std::function<std::int64_t()>;

inline Clock system_clock() {
    return [] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::system_clock::now().time_since_epoch())
            .count();
    };
}

class RuntimeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DuplicateAgentName : public RuntimeError {
public:
    explicit DuplicateAgentName(const std::string& name) : RuntimeError("agent already exists: " + name) {}
};

class UnknownAgent : public RuntimeError {
public:
    explicit UnknownAgent(const std::string& name) : RuntimeError("unknown agent: " + name), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class NonGroundPercept : public RuntimeError {
public:
    explicit NonGroundPercept(const logic::Literal& l)
        : RuntimeError("percept must be ground: " + logic::to_string(l)) {}
};

class QuiescenceTimeout : public RuntimeError {
public:
    explicit QuiescenceTimeout(std::size_t cycles)
        : RuntimeError("agents still busy after " + std::to_string(cycles) + " rounds"), cycles_(cycles) {}
    std::size_t cycles() const { return cycles_; }

private:
    std::size_t cycles_;
};

struct EventOrigin {
    enum class Kind { Percept, Internal, Message };
    Kind kind = Kind::Internal;
    std::uint64_t intention = 0; // Internal: raising intention, 0 if none
    std::string sender;          // Message

    static EventOrigin percept() { return {Kind::Percept, 0, {}}; }
    static EventOrigin internal(std::uint64_t intention_id) { return {Kind::Internal, intention_id, {}}; }
    static EventOrigin message(std::string from) { return {Kind::Message, 0, std::move(from)}; }

    friend bool operator==(const EventOrigin&, const EventOrigin&) = default;
};

struct Event {
    logic::Trigger trigger;
    EventOrigin origin;

    friend bool operator==(const Event&, const Event&) = default;
};

std::string to_string(const Event& e);

struct Decision {
    logic::Term content;
    std::uint64_t seq = 0;
    std::int64_t timestamp_ms = 0;

    friend bool operator==(const Decision&, const Decision&) = default;
};

/// What one reasoning cycle did.
struct CycleReport {
    std::string agent;
    std::uint64_t cycle = 0;
    std::optional<std::string> event;       // event handled
    std::optional<std::size_t> plan;        // index of the plan fired, source order
    std::optional<std::uint64_t> intention; // intention that ran a step
    std::optional<std::string> step;        // step executed
    std::vector<std::string> notes;         // discarded events, failures, ...

    bool noop() const { return !event && !step && notes.empty(); }
};

/// One line, stable across runs: used for trace comparisons.
std::string to_string(const CycleReport& r);

} // namespace jasonrs::bdi
