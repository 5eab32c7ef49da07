#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "jasonrs/bdi/types.hpp"
#include "jasonrs/gateway/gateway.hpp"
#include "jasonrs/gateway/http_types.hpp"
#include "jasonrs/platform/accounts.hpp"

namespace jasonrs::platform {

using gateway::Json;
using gateway::Request;
using gateway::Response;

inline constexpr const char* kFeatureTypes[] = {"accelerometer", "button", "buzzer", "gauge", "gps", "switch"};

bool is_feature_type(const std::string& type);

struct Feature {
    std::uint64_t id = 0;
    std::string name;
    std::string path;
    std::string type;
    std::string details;
    std::string widget;
    bool mqtt = false;
    std::optional<Json> state;

    Json to_json() const;
};

struct Link {
    std::uint64_t id = 0;
    std::uint64_t source_feature = 0;
    std::string target_agent;
};

struct PlatformOptions {
    bdi::Clock clock = bdi::system_clock();
    std::int64_t session_ttl_ms = 3600 * 1000;
};

/// Object platform emulator:
///   POST   /login          {username, password, service}       -> 200 {token}
///   POST   /feature        feature body                        -> 201 {id}
///   GET    /feature/{id}                                       -> 200 feature
///   PUT    /feature/{id}   {"data": v}                         -> 202
///   DELETE /feature/{id}                                       -> 204
///   POST   /link           {source_feature, target_agent}      -> 201 {id}
/// Everything except /login needs `Authorization: Bearer <token>`.
class Platform {
public:
    Platform(std::vector<Account> accounts, gateway::Gateway& gateway, PlatformOptions options = {});

    /// nullopt when the path is not a platform route.
    std::optional<Response> handle(const Request& request);

    /// Registers the `actuate(FeatureId, Value)` action with the runtime.
    void install_actuation(bdi::Runtime& runtime);

    std::optional<Feature> feature(std::uint64_t id) const;
    std::optional<Link> link_of(std::uint64_t feature_id) const;

    /// Programmatic actuation; false if the feature is missing or the value
    /// does not type-check.
    bool actuate(std::uint64_t feature_id, const Json& value);

private:
    struct Session {
        std::string username;
        std::string service;
        std::int64_t created_ms = 0;
    };

    Response login(const Request& request);
    void authorize(const Request& request);
    Response create_feature(const Request& request);
    Response get_feature(std::uint64_t id);
    Response update_feature(std::uint64_t id, const Request& request);
    Response delete_feature(std::uint64_t id);
    Response create_link(const Request& request);

    std::vector<Account> accounts_;
    gateway::Gateway& gateway_;
    PlatformOptions options_;

    mutable std::mutex mutex_;
    std::map<std::string, Session> sessions_;
    std::map<std::uint64_t, Feature> features_;
    std::map<std::uint64_t, Link> links_; // keyed by feature id
    std::uint64_t next_feature_ = 0;
    std::uint64_t next_link_ = 0;
};

/// Checks `value` against a feature type and maps it to the percept term.
/// Throws HttpError 422 on mismatch.
logic::Term feature_value_term(const std::string& type, const Json& value);

} // namespace jasonrs::platform
