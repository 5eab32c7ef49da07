#pragma once

#include <optional>
#include <string>

#include "jasonrs/bdi/runtime.hpp"
#include "jasonrs/gateway/http_types.hpp"

namespace jasonrs::gateway {

/// Agent-facing REST routes:
///   POST|PUT {base}/{agent}[/]             {"data": v}  -> 202 {"seq": n, "agent": name}
///   GET      {base}/{agent}/decision                    -> 200 | 204
///   GET      {base}/{agent}/beliefs                     -> 200 [rendered literals]
///   DELETE   {base}/{agent}/percepts/{predicate}        -> 204
class Gateway {
public:
    explicit Gateway(bdi::Runtime& runtime, std::string base = "");

    /// nullopt when the path is not an agent route.
    std::optional<Response> handle(const Request& request);

    /// Percept data(value) for `agent`. Throws HttpError 404 for unknown agents.
    std::uint64_t post_percept(const std::string& agent, const logic::Term& value);

    bdi::Runtime& runtime() { return runtime_; }
    const std::string& base() const { return base_; }

private:
    bdi::Agent& require_agent(const std::string& name);

    bdi::Runtime& runtime_;
    std::string base_;
};

} // namespace jasonrs::gateway
