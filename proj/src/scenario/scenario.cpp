#include "jasonrs/scenario/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "jasonrs/bdi/runtime.hpp"
#include "jasonrs/logic/program.hpp"
#include "jasonrs/service/service.hpp"

namespace jasonrs::scenario {

namespace {

const std::string& text(const Json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string()) {
        throw ScenarioError(where + ": '" + key + "' must be text");
    }
    return it->get_ref<const std::string&>();
}

const Json& array(const Json& obj, const char* key, bool required) {
    static const Json empty = Json::array();
    auto it = obj.find(key);
    if (it == obj.end()) {
        if (required) {
            throw ScenarioError(std::string("missing '") + key + "'");
        }
        return empty;
    }
    if (!it->is_array()) {
        throw ScenarioError(std::string("'") + key + "' must be a list");
    }
    return *it;
}

std::string num(const logic::Decimal& d) { return d.to_string(); }

} // namespace

ScenarioSpec parse_scenario(const Json& j) {
    if (!j.is_object()) {
        throw ScenarioError("scenario must be a JSON object");
    }
    ScenarioSpec spec;
    std::set<std::string> names;
    for (const auto& e : array(j, "evacuators", true)) {
        std::string where = "evacuator " + std::to_string(spec.evacuators.size());
        if (!e.is_object()) {
            throw ScenarioError(where + ": must be an object");
        }
        Evacuator ev;
        ev.name = text(e, "name", where);
        if (!logic::is_identifier(ev.name)) {
            throw ScenarioError(where + ": name '" + ev.name + "' is not an identifier");
        }
        auto cost = e.find("base_cost");
        std::optional<logic::Decimal> d;
        if (cost != e.end() && cost->is_number()) {
            d = logic::Decimal::parse(cost->dump());
        }
        if (!d) {
            throw ScenarioError(where + ": base_cost must be a number");
        }
        ev.base_cost = *d;
        if (!names.insert(ev.name).second) {
            throw ScenarioError("duplicate evacuator name " + ev.name);
        }
        spec.evacuators.push_back(std::move(ev));
    }
    if (spec.evacuators.size() < 2) {
        throw ScenarioError("at least two evacuators required");
    }
    if (j.contains("decider")) {
        spec.decider = text(j, "decider", "scenario");
    }
    if (!logic::is_identifier(spec.decider) || names.count(spec.decider) != 0) {
        throw ScenarioError("decider name '" + spec.decider + "' is invalid or clashes with an evacuator");
    }
    std::set<std::string> features;
    for (const auto& b : array(j, "sensor_bindings", false)) {
        SensorBinding sb{text(b, "feature", "sensor binding"), text(b, "evacuator", "sensor binding")};
        if (names.count(sb.evacuator) == 0) {
            throw ScenarioError("sensor binding refers to unknown evacuator " + sb.evacuator);
        }
        if (!features.insert(sb.feature).second) {
            throw ScenarioError("feature " + sb.feature + " bound twice");
        }
        spec.sensor_bindings.push_back(std::move(sb));
    }
    for (const auto& p : array(j, "percepts", false)) {
        PerceptStep step{text(p, "feature", "percept"), p.value("value", Json())};
        if (features.count(step.feature) == 0) {
            throw ScenarioError("percept refers to unbound feature " + step.feature);
        }
        spec.percepts.push_back(std::move(step));
    }
    return spec;
}

ScenarioSpec load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ScenarioError("cannot read " + path);
    }
    try {
        return parse_scenario(Json::parse(in));
    } catch (const Json::exception& e) {
        throw ScenarioError(path + ": " + e.what());
    }
}

Json to_json(const ScenarioSpec& spec) {
    Json j{{"decider", spec.decider}, {"evacuators", Json::array()}, {"sensor_bindings", Json::array()},
           {"percepts", Json::array()}};
    for (const auto& e : spec.evacuators) {
        j["evacuators"].push_back({{"name", e.name}, {"base_cost", Json::parse(num(e.base_cost))}});
    }
    for (const auto& b : spec.sensor_bindings) {
        j["sensor_bindings"].push_back({{"feature", b.feature}, {"evacuator", b.evacuator}});
    }
    for (const auto& p : spec.percepts) {
        j["percepts"].push_back({{"feature", p.feature}, {"value", p.value}});
    }
    return j;
}

std::string evacuator_program(const Evacuator& e, const std::string& decider) {
    std::ostringstream os;
    os << "// " << e.name << ": effective cost = base cost + latest load reading\n"
       << "base_cost(" << num(e.base_cost) << ").\n\n"
       << "load_of(L) :- data(L)[source(percept)].\n"
       << "load_of(0) :- not data(_)[source(percept)].\n"
       << "effective(C) :- base_cost(B) & load_of(L) & C = B + L.\n\n"
       << "+base_cost(_) : effective(C) <- .send(" << decider << ", tell, cost(C)).\n"
       << "+data(_)[source(percept)] : effective(C) <- .send(" << decider << ", tell, cost(C)).\n"
       << "-data(_)[source(percept)] : effective(C) <- .send(" << decider << ", tell, cost(C)).\n";
    return os.str();
}

std::string decider_program(const std::vector<Evacuator>& evacuators) {
    std::ostringstream os;
    os << "// allocates the task to the cheapest evacuator, first declared wins ties\n";
    for (std::size_t i = 0; i < evacuators.size(); ++i) {
        os << "evacuator(" << evacuators[i].name << "," << i + 1 << ").\n";
    }
    os << "allocated(none,0).\n\n"
       << "effective(E,C) :- cost(C)[source(E)].\n"
       << "reported(E) :- effective(E,_).\n"
       << "all_reported :- not (evacuator(F,_) & not reported(F)).\n"
       << "// strictly cheapest, or first declared among equals\n"
       << "cheapest(E) :- evacuator(E,I) & effective(E,C) & not (evacuator(F,_) & effective(F,D) & D < C)\n"
       << "    & not (evacuator(F,J) & J < I & effective(F,C)).\n"
       << "// allocations are versioned; the highest version is the current one\n"
       << "latest(N) :- allocated(_,N) & not (allocated(_,M) & M > N).\n"
       << "current(E) :- latest(N) & allocated(E,N).\n\n"
       << "+cost(C)[source(E)] : cost(Old)[source(E)] & Old \\== C <- -cost(Old)[source(E)]; !decide.\n"
       << "+cost(C)[source(E)] <- !decide.\n\n"
       << "+!decide : all_reported & cheapest(E) & not current(E) & latest(N) & Next = N + 1 <- +allocated(E,Next).\n"
       << "+!decide <- true.\n\n"
       << "+allocated(E,N) : N > 0 & Prev = N - 1 <- .publish_decision(allocate(E)); -allocated(_,Prev).\n";
    return os.str();
}

std::string ScenarioResult::to_text() const {
    std::ostringstream os;
    for (const auto& r : requests) {
        os << "request " << r << '\n';
    }
    for (const auto& c : cycles) {
        os << "cycle " << c << '\n';
    }
    for (const auto& d : decisions) {
        os << "decision " << d << '\n';
    }
    os << "final " << final_decision.value_or("none") << '\n';
    os << "rounds " << rounds << '\n';
    return os.str();
}

ScenarioResult run_scenario(const ScenarioSpec& spec, const ScenarioOptions& options) {
    ScenarioResult result;

    bdi::RuntimeOptions ro;
    auto now = std::make_shared<std::int64_t>(options.start_ms);
    ro.clock = [now] { return (*now)++; };
    ro.keep_trace = true;
    bdi::Runtime runtime(ro);

    for (const auto& e : spec.evacuators) {
        runtime.create_agent(e.name, logic::parse_program(evacuator_program(e, spec.decider)));
    }
    runtime.create_agent(spec.decider, logic::parse_program(decider_program(spec.evacuators)));
    runtime.set_decision_observer([&](const std::string& agent, const bdi::Decision& d) {
        if (agent == spec.decider) {
            result.decisions.push_back(logic::to_string(d.content) + "#" + std::to_string(d.seq) + "@" +
                                       std::to_string(d.timestamp_ms));
        }
    });

    gateway::Gateway gw(runtime);
    platform::PlatformOptions po;
    po.clock = [now] { return *now; };
    platform::Platform pf({{"scenario", "scenario", "local"}}, gw, po);
    pf.install_actuation(runtime);
    service::Service svc(gw, &pf);

    std::string token;
    auto call = [&](const std::string& method, const std::string& path, const Json& body, int expected) {
        gateway::Request r;
        r.method = method;
        r.path = path;
        if (!body.is_null()) {
            r.body = body.dump();
            r.headers["content-type"] = "application/json";
        }
        if (!token.empty()) {
            r.headers["authorization"] = "Bearer " + token;
        }
        auto resp = svc.handle(r);
        result.requests.push_back(method + " " + path + " -> " + std::to_string(resp.status));
        if (resp.status != expected) {
            throw ScenarioError(method + " " + path + " returned " + std::to_string(resp.status) + ": " + resp.body);
        }
        return resp.body.empty() ? Json() : Json::parse(resp.body);
    };
    auto settle = [&] { result.rounds += runtime.run_until_quiescent(options.max_rounds); };

    token = call("POST", "/login", Json{{"username", "scenario"}, {"password", "scenario"}, {"service", "local"}}, 200)
                .at("token")
                .get<std::string>();
    std::map<std::string, std::uint64_t> feature_ids;
    for (const auto& b : spec.sensor_bindings) {
        Json body{{"name", b.feature}, {"path", "scenario/" + b.feature}, {"type", "gauge"},
                  {"details", "load sensor"}, {"widget", "none"},  {"mqtt", false}};
        auto id = call("POST", "/feature", body, 201).at("id").get<std::uint64_t>();
        feature_ids[b.feature] = id;
        call("POST", "/link", Json{{"source_feature", id}, {"target_agent", b.evacuator}}, 201);
    }
    settle();
    for (const auto& p : spec.percepts) {
        call("PUT", "/feature/" + std::to_string(feature_ids.at(p.feature)), Json{{"data", p.value}}, 202);
        settle();
    }
    token.clear();
    gateway::Request get{"GET", "/" + spec.decider + "/decision", {}, {}};
    auto resp = svc.handle(get);
    result.requests.push_back("GET " + get.path + " -> " + std::to_string(resp.status));
    if (resp.status == 200) {
        result.final_decision = Json::parse(resp.body).at("decision").get<std::string>();
    }
    result.cycles = runtime.trace();
    return result;
}

} // namespace jasonrs::scenario
