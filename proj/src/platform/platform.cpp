#include "jasonrs/platform/platform.hpp"

#include <algorithm>
#include <charconv>
#include <random>

#include <spdlog/spdlog.h>

#include "jasonrs/bdi/runtime.hpp"
#include "jasonrs/gateway/value_mapping.hpp"

namespace jasonrs::platform {

using gateway::HttpError;
using logic::Term;

namespace {

std::string mint_token() {
    static std::mutex m;
    static std::random_device rd;
    std::lock_guard lock(m);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (int i = 0; i < 4; ++i) { // 4 x 32 bits
        std::uint32_t w = rd();
        for (int k = 0; k < 8; ++k) {
            out.push_back(hex[(w >> (28 - 4 * k)) & 0xF]);
        }
    }
    return out;
}

std::optional<std::uint64_t> parse_id(const std::string& s) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || v == 0) {
        return std::nullopt;
    }
    return v;
}

const std::string& text_field(const Json& body, const char* key) {
    auto it = body.find(key);
    if (it == body.end() || !it->is_string()) {
        throw HttpError(400, "malformed_body", std::string("field '") + key + "' must be text");
    }
    return it->get_ref<const std::string&>();
}

void require_keys(const Json& body, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
    if (!body.is_object()) {
        throw HttpError(400, "malformed_body", "body must be a JSON object");
    }
    for (const char* k : required) {
        if (!body.contains(k)) {
            throw HttpError(400, "malformed_body", std::string("missing field '") + k + "'");
        }
    }
    for (const auto& [k, v] : body.items()) {
        bool known = std::any_of(required.begin(), required.end(), [&](const char* r) { return k == r; }) ||
                     std::any_of(optional.begin(), optional.end(), [&](const char* r) { return k == r; });
        if (!known) {
            throw HttpError(400, "malformed_body", "unexpected field '" + k + "'");
        }
    }
}

Term number_term(const Json& v, const std::string& type) {
    if (!v.is_number()) {
        throw HttpError(422, "type_mismatch", type + " expects a number, got " + v.dump());
    }
    return gateway::scalar_to_term(v);
}

std::optional<Json> term_to_json(const Term& t) {
    if (t.is_num()) {
        return Json::parse(t.number().to_string());
    }
    if (t.is_atom() && (t.text() == "true" || t.text() == "false")) {
        return Json(t.text() == "true");
    }
    if (t.is_struct() && t.text() == "vec") {
        Json arr = Json::array();
        for (const auto& a : t.args()) {
            if (!a.is_num()) {
                return std::nullopt;
            }
            arr.push_back(Json::parse(a.number().to_string()));
        }
        return arr;
    }
    if (t.is_str() || t.is_atom()) {
        return Json(t.text());
    }
    return std::nullopt;
}

} // namespace

bool is_feature_type(const std::string& type) {
    return std::any_of(std::begin(kFeatureTypes), std::end(kFeatureTypes), [&](const char* t) { return type == t; });
}

Json Feature::to_json() const {
    Json j{{"id", id},           {"name", name},     {"path", path}, {"type", type},
           {"details", details}, {"widget", widget}, {"mqtt", mqtt}};
    j["state"] = state ? *state : Json(nullptr);
    return j;
}

Term feature_value_term(const std::string& type, const Json& value) {
    if (type == "gauge" || type == "buzzer") {
        return number_term(value, type);
    }
    if (type == "button" || type == "switch") {
        if (!value.is_boolean()) {
            throw HttpError(422, "type_mismatch", type + " expects a boolean, got " + value.dump());
        }
        return gateway::scalar_to_term(value);
    }
    if (type == "accelerometer" || type == "gps") {
        if (value.is_number()) {
            return number_term(value, type);
        }
        if (value.is_array() && !value.empty()) {
            std::vector<Term> parts;
            for (const auto& v : value) {
                parts.push_back(number_term(v, type));
            }
            return Term::structure("vec", std::move(parts));
        }
        throw HttpError(422, "type_mismatch", type + " expects a number or a list of numbers");
    }
    throw HttpError(422, "type_mismatch", "unknown feature type " + type);
}

Platform::Platform(std::vector<Account> accounts, gateway::Gateway& gateway, PlatformOptions options)
    : accounts_(std::move(accounts)), gateway_(gateway), options_(std::move(options)) {}

std::optional<Response> Platform::handle(const Request& request) {
    auto segs = gateway::split_path(request.path);
    if (segs.empty()) {
        return std::nullopt;
    }
    const std::string& m = request.method;
    const std::string& head = segs[0];
    if (head == "login" && segs.size() == 1) {
        if (m != "POST") {
            return gateway::error_response(405, "method_not_allowed", "allowed: POST");
        }
        return login(request);
    }
    if (head == "link" && segs.size() == 1) {
        if (m != "POST") {
            return gateway::error_response(405, "method_not_allowed", "allowed: POST");
        }
        authorize(request);
        return create_link(request);
    }
    if (head != "feature" || segs.size() > 2) {
        return std::nullopt;
    }
    if (segs.size() == 1) {
        if (m != "POST") {
            return gateway::error_response(405, "method_not_allowed", "allowed: POST");
        }
        authorize(request);
        return create_feature(request);
    }
    if (m != "GET" && m != "PUT" && m != "DELETE") {
        return gateway::error_response(405, "method_not_allowed", "allowed: GET, PUT, DELETE");
    }
    authorize(request);
    auto id = parse_id(segs[1]);
    if (m == "DELETE") {
        return id ? delete_feature(*id) : Response::empty(204);
    }
    if (!id) {
        throw HttpError(404, "unknown_feature", "no feature " + segs[1]);
    }
    return m == "GET" ? get_feature(*id) : update_feature(*id, request);
}

Response Platform::login(const Request& request) {
    Json body = gateway::parse_json_body(request);
    require_keys(body, {"username", "password", "service"});
    const auto& user = text_field(body, "username");
    const auto& pass = text_field(body, "password");
    const auto& service = text_field(body, "service");
    bool ok = std::any_of(accounts_.begin(), accounts_.end(), [&](const Account& a) {
        return a.username == user && a.password == pass && a.service == service;
    });
    if (!ok) {
        throw HttpError(401, "bad_credentials", "unknown user, password or service");
    }
    std::string token = mint_token();
    std::lock_guard lock(mutex_);
    sessions_[token] = Session{user, service, options_.clock()};
    return Response::json(200, Json{{"token", token}});
}

void Platform::authorize(const Request& request) {
    auto auth = request.header("authorization");
    static const std::string prefix = "Bearer ";
    if (!auth || auth->rfind(prefix, 0) != 0) {
        throw HttpError(401, "unauthorized", "missing bearer token");
    }
    std::string token = auth->substr(prefix.size());
    std::lock_guard lock(mutex_);
    auto it = sessions_.find(token);
    if (it == sessions_.end()) {
        throw HttpError(401, "unauthorized", "unknown token");
    }
    if (options_.clock() - it->second.created_ms >= options_.session_ttl_ms) {
        sessions_.erase(it);
        throw HttpError(401, "unauthorized", "session expired");
    }
}

Response Platform::create_feature(const Request& request) {
    Json body = gateway::parse_json_body(request);
    require_keys(body, {"name", "path", "type"}, {"details", "widget", "mqtt"});
    Feature f;
    f.name = text_field(body, "name");
    f.path = text_field(body, "path");
    f.type = text_field(body, "type");
    if (body.contains("details")) {
        f.details = text_field(body, "details");
    }
    if (body.contains("widget")) {
        f.widget = text_field(body, "widget");
    }
    if (body.contains("mqtt")) {
        if (!body["mqtt"].is_boolean()) {
            throw HttpError(400, "malformed_body", "field 'mqtt' must be a boolean");
        }
        f.mqtt = body["mqtt"].get<bool>();
    }
    if (!is_feature_type(f.type)) {
        throw HttpError(422, "unknown_type", "feature type must be one of accelerometer, button, buzzer, gauge, gps, switch");
    }
    std::lock_guard lock(mutex_);
    f.id = ++next_feature_;
    const auto id = f.id;
    features_.emplace(id, std::move(f));
    Response r = Response::json(201, Json{{"id", id}});
    r.headers["Location"] = "/feature/" + std::to_string(id);
    return r;
}

Response Platform::get_feature(std::uint64_t id) {
    std::lock_guard lock(mutex_);
    auto it = features_.find(id);
    if (it == features_.end()) {
        throw HttpError(404, "unknown_feature", "no feature " + std::to_string(id));
    }
    Json j = it->second.to_json();
    auto link = links_.find(id);
    j["linked_agent"] = link == links_.end() ? Json(nullptr) : Json(link->second.target_agent);
    return Response::json(200, j);
}

Response Platform::update_feature(std::uint64_t id, const Request& request) {
    std::string type;
    {
        std::lock_guard lock(mutex_);
        auto it = features_.find(id);
        if (it == features_.end()) {
            throw HttpError(404, "unknown_feature", "no feature " + std::to_string(id));
        }
        type = it->second.type;
    }
    Json body = gateway::parse_json_body(request);
    if (!body.is_object() || body.size() != 1 || !body.contains("data")) {
        throw HttpError(400, "malformed_body", R"(body must be exactly {"data": <value>})");
    }
    Term value = feature_value_term(type, body["data"]);

    // State update and forwarding under one lock keep per-feature order.
    std::lock_guard lock(mutex_);
    auto it = features_.find(id);
    if (it == features_.end()) {
        throw HttpError(404, "unknown_feature", "no feature " + std::to_string(id));
    }
    it->second.state = body["data"];
    Json out{{"id", id}};
    auto link = links_.find(id);
    if (link != links_.end()) {
        out["seq"] = gateway_.post_percept(link->second.target_agent, value);
        out["agent"] = link->second.target_agent;
    }
    return Response::json(202, out);
}

Response Platform::delete_feature(std::uint64_t id) {
    std::lock_guard lock(mutex_);
    features_.erase(id);
    links_.erase(id);
    return Response::empty(204);
}

Response Platform::create_link(const Request& request) {
    Json body = gateway::parse_json_body(request);
    require_keys(body, {"source_feature", "target_agent"});
    const Json& src = body["source_feature"];
    if (!src.is_number_unsigned() && !(src.is_number_integer() && src.get<std::int64_t>() > 0)) {
        throw HttpError(400, "malformed_body", "source_feature must be a positive integer");
    }
    const auto feature_id = src.get<std::uint64_t>();
    const std::string& agent = text_field(body, "target_agent");
    if (gateway_.runtime().find(agent) == nullptr) {
        throw HttpError(404, "unknown_agent", "no agent named " + agent);
    }
    std::lock_guard lock(mutex_);
    if (features_.count(feature_id) == 0) {
        throw HttpError(404, "unknown_feature", "no feature " + std::to_string(feature_id));
    }
    if (links_.count(feature_id) != 0) {
        throw HttpError(409, "already_linked",
                        "feature " + std::to_string(feature_id) + " is linked to " + links_[feature_id].target_agent);
    }
    Link l{++next_link_, feature_id, agent};
    links_.emplace(feature_id, l);
    return Response::json(201, Json{{"id", l.id}});
}

std::optional<Feature> Platform::feature(std::uint64_t id) const {
    std::lock_guard lock(mutex_);
    auto it = features_.find(id);
    if (it == features_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<Link> Platform::link_of(std::uint64_t feature_id) const {
    std::lock_guard lock(mutex_);
    auto it = links_.find(feature_id);
    if (it == links_.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool Platform::actuate(std::uint64_t feature_id, const Json& value) {
    std::lock_guard lock(mutex_);
    auto it = features_.find(feature_id);
    if (it == features_.end()) {
        return false;
    }
    try {
        feature_value_term(it->second.type, value);
    } catch (const HttpError&) {
        return false;
    }
    // Actuation sets state only: echoing it back to the linked agent would
    // turn every command into a fresh percept.
    it->second.state = value;
    return true;
}

void Platform::install_actuation(bdi::Runtime& runtime) {
    runtime.register_action("actuate", [this](const std::string& agent, const std::vector<Term>& args) {
        if (args.size() != 2 || !args[0].is_num() || !args[0].number().is_integer() ||
            args[0].number().units() <= 0) {
            spdlog::warn("[{}] actuate expects (FeatureId, Value)", agent);
            return false;
        }
        auto value = term_to_json(args[1]);
        if (!value) {
            return false;
        }
        auto id = static_cast<std::uint64_t>(args[0].number().units() / logic::Decimal::kUnit);
        return actuate(id, *value);
    });
}

} // namespace jasonrs::platform
