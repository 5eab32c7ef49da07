#include "jasonrs/gateway/gateway.hpp"

#include <algorithm>

#include "jasonrs/gateway/value_mapping.hpp"

namespace jasonrs::gateway {

namespace {

std::string normalize_base(std::string base) {
    while (!base.empty() && base.back() == '/') {
        base.pop_back();
    }
    if (!base.empty() && base.front() != '/') {
        base.insert(base.begin(), '/');
    }
    return base;
}

Response method_not_allowed(const std::string& allowed) {
    Response r = error_response(405, "method_not_allowed", "allowed: " + allowed);
    r.headers["Allow"] = allowed;
    return r;
}

} // namespace

Gateway::Gateway(bdi::Runtime& runtime, std::string base) : runtime_(runtime), base_(normalize_base(std::move(base))) {}

bdi::Agent& Gateway::require_agent(const std::string& name) {
    bdi::Agent* a = runtime_.find(name);
    if (a == nullptr) {
        throw HttpError(404, "unknown_agent", "no agent named " + name);
    }
    return *a;
}

std::uint64_t Gateway::post_percept(const std::string& agent, const logic::Term& value) {
    return require_agent(agent).inject_percept(logic::Literal("data", {value}));
}

std::optional<Response> Gateway::handle(const Request& request) {
    std::string_view path = request.path;
    if (!base_.empty()) {
        if (path.rfind(base_, 0) != 0 || (path.size() > base_.size() && path[base_.size()] != '/')) {
            return std::nullopt;
        }
        path.remove_prefix(base_.size());
    }
    auto segs = split_path(path);
    if (segs.empty() || segs.size() > 3 || !logic::is_identifier(segs[0])) {
        return std::nullopt;
    }
    const std::string& name = segs[0];
    const std::string& method = request.method;

    if (segs.size() == 1) {
        if (method != "POST" && method != "PUT") {
            return method_not_allowed("POST, PUT");
        }
        bdi::Agent& agent = require_agent(name);
        logic::Term value = percept_value(parse_json_body(request));
        auto seq = agent.inject_percept(logic::Literal("data", {value}));
        return Response::json(202, Json{{"seq", seq}, {"agent", name}});
    }

    if (segs.size() == 2 && segs[1] == "decision") {
        if (method != "GET") {
            return method_not_allowed("GET");
        }
        auto d = require_agent(name).read_decision();
        if (!d) {
            return Response::empty(204);
        }
        return Response::json(200, Json{{"decision", logic::to_string(d->content)},
                                        {"seq", d->seq},
                                        {"timestamp_ms", d->timestamp_ms}});
    }

    if (segs.size() == 2 && segs[1] == "beliefs") {
        if (method != "GET") {
            return method_not_allowed("GET");
        }
        std::vector<std::string> rendered;
        for (const auto& b : require_agent(name).beliefs()) {
            rendered.push_back(logic::to_string(b));
        }
        std::sort(rendered.begin(), rendered.end());
        return Response::json(200, Json(rendered));
    }

    if (segs.size() == 3 && segs[1] == "percepts") {
        if (method != "DELETE") {
            return method_not_allowed("DELETE");
        }
        require_agent(name).retract_percepts(segs[2]);
        return Response::empty(204);
    }

    return std::nullopt;
}

} // namespace jasonrs::gateway
