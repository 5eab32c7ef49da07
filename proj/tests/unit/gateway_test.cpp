#include "doctest.h"

#include <random>

#include "jasonrs/gateway/value_mapping.hpp"
#include "jasonrs/logic/program.hpp"
#include "../support/service_fixture.hpp"

using namespace jasonrs;
using testing::Json;
using testing::Stack;

namespace {

const char* kObjectAgent = "+data(X) : X > 3 <- .publish_decision(high).\n";

} // namespace

TEST_CASE("percept post is accepted and reaches the belief base") {
    Stack s;
    s.runtime.create_agent("object_agent", logic::parse_program(kObjectAgent));
    auto r = s.call("POST", "/object_agent/", Json{{"data", 5}});
    CHECK(r.status == 202);
    auto body = Json::parse(r.body);
    CHECK(body["seq"].get<int>() == 1);
    CHECK(body["agent"] == "object_agent");
    s.runtime.run_until_quiescent(10);
    CHECK(s.beliefs("object_agent") == std::vector<std::string>{"data(5)[source(percept)]"});

    CHECK(s.call("POST", "/object_agent", Json{{"data", 6}}).status == 202);
}

TEST_CASE("base prefix") {
    Stack s("/jason/");
    s.runtime.create_agent("object_agent", logic::parse_program(""));
    CHECK(s.call("POST", "/jason/object_agent/", Json{{"data", 5}}).status == 202);
    CHECK(s.call("POST", "/object_agent/", Json{{"data", 5}}).status == 404);
    CHECK(s.call("GET", "/jason/object_agent/decision").status == 204);
    CHECK(s.call("GET", "/jasonx/object_agent/decision").status == 404);
}

TEST_CASE("percept post errors") {
    Stack s;
    s.runtime.create_agent("object_agent", logic::parse_program(""));
    struct Case {
        std::string path;
        std::string body;
        std::string content_type;
        int status;
    };
    std::vector<Case> cases = {
        {"/ghost/", R"({"data": 1})", "application/json", 404},
        {"/object_agent/", R"({"datum": 5})", "application/json", 400},
        {"/object_agent/", R"({"data": 5, "extra": 1})", "application/json", 400},
        {"/object_agent/", R"({"data": {"x": 1}})", "application/json", 400},
        {"/object_agent/", R"({"data": [1, 2]})", "application/json", 400},
        {"/object_agent/", R"([5])", "application/json", 400},
        {"/object_agent/", R"({"data": )", "application/json", 400},
        {"/object_agent/", R"({"data": null})", "application/json", 422},
        {"/object_agent/", R"({"data": 1e300})", "application/json", 422},
        {"/object_agent/", R"({"data": 0.1234567})", "application/json", 422},
        {"/object_agent/", R"({"data": 5})", "text/plain", 415},
        {"/object_agent/", R"({"data": 5})", "", 415},
        {"/object_agent/", R"({"data": 5})", "application/json; charset=latin-1", 415},
    };
    for (const auto& c : cases) {
        for (const char* method : {"POST", "PUT"}) {
            auto r = s.call(method, c.path, c.body, "", c.content_type);
            INFO(method << " " << c.path << " " << c.body << " " << c.content_type);
            CHECK(r.status == c.status);
            CHECK(testing::is_error_body(r));
        }
    }
    CHECK(s.call("POST", "/object_agent/", R"({"data": 5})", "", "application/json; charset=UTF-8").status == 202);
    CHECK(s.call("GET", "/object_agent/").status == 405);
    CHECK(testing::is_error_body(s.call("GET", "/no/such/route/here")));
    s.runtime.run_until_quiescent(10);
    CHECK(s.beliefs("object_agent") == std::vector<std::string>{"data(5)[source(percept)]"});
}

TEST_CASE("scalar mapping") {
    using gateway::scalar_to_term;
    CHECK(logic::to_string(scalar_to_term(Json(5))) == "5");
    CHECK(logic::to_string(scalar_to_term(Json(-2.5))) == "-2.5");
    CHECK(logic::to_string(scalar_to_term(Json::parse("1e3"))) == "1000");
    CHECK(scalar_to_term(Json("hello")) == logic::Term::atom("hello"));
    CHECK(scalar_to_term(Json("Hello World")) == logic::Term::str("Hello World"));
    CHECK(scalar_to_term(Json("")) == logic::Term::str(""));
    CHECK(scalar_to_term(Json(true)) == logic::Term::atom("true"));
    CHECK(scalar_to_term(Json(false)) == logic::Term::atom("false"));
}

TEST_CASE("decision endpoint") {
    Stack s;
    s.runtime.create_agent("object_agent", logic::parse_program(kObjectAgent));
    CHECK(s.call("GET", "/object_agent/decision").status == 204);
    CHECK(s.call("GET", "/ghost/decision").status == 404);
    s.call("POST", "/object_agent/", Json{{"data", 5}});
    s.runtime.run_until_quiescent(10);
    auto r = s.call("GET", "/object_agent/decision");
    REQUIRE(r.status == 200);
    auto body = Json::parse(r.body);
    CHECK(body["decision"] == "high");
    CHECK(body["seq"] == 1);
    CHECK(body["timestamp_ms"] == *s.now);
    // Persistent until overwritten.
    CHECK(s.call("GET", "/object_agent/decision").body == r.body);
    CHECK(s.call("POST", "/object_agent/decision").status == 405);
}

TEST_CASE("put replaces the percept value") {
    Stack s;
    s.runtime.create_agent("object_agent", logic::parse_program(""));
    CHECK(s.call("PUT", "/object_agent/", Json{{"data", 5}}).status == 202);
    s.runtime.run_until_quiescent(10);
    CHECK(s.call("PUT", "/object_agent/", Json{{"data", 7}}).status == 202);
    s.runtime.run_until_quiescent(10);
    CHECK(s.beliefs("object_agent") == std::vector<std::string>{"data(7)[source(percept)]"});
    CHECK(s.call("PUT", "/ghost/", Json{{"data", 7}}).status == 404);
}

TEST_CASE("delete percepts is idempotent") {
    Stack s;
    auto& a = s.runtime.create_agent("object_agent", logic::parse_program(""));
    s.call("POST", "/object_agent/", Json{{"data", 7}});
    s.runtime.run_until_quiescent(10);
    CHECK(s.call("DELETE", "/object_agent/percepts/data").status == 204);
    s.runtime.run_until_quiescent(10);
    auto history = testing::event_strings(a.event_history());
    CHECK(history.back() == "-data(7)[source(percept)]");
    CHECK(s.call("DELETE", "/object_agent/percepts/data").status == 204);
    s.runtime.run_until_quiescent(10);
    CHECK(a.event_history().size() == history.size());
    CHECK(s.beliefs("object_agent").empty());
    CHECK(s.call("DELETE", "/ghost/percepts/data").status == 404);
}

TEST_CASE("beliefs endpoint renders sorted literals") {
    Stack s;
    s.runtime.create_agent("e1", logic::parse_program("zeta(1). cost(e1,10)."));
    CHECK(s.beliefs("e1") == std::vector<std::string>{"cost(e1,10)[source(self)]", "zeta(1)[source(self)]"});
    s.call("POST", "/e1", Json{{"data", 5}});
    s.runtime.run_until_quiescent(10);
    auto b = s.beliefs("e1");
    CHECK(std::find(b.begin(), b.end(), "data(5)[source(percept)]") != b.end());
    CHECK(s.call("GET", "/ghost/beliefs").status == 404);
}

TEST_CASE("accepted writes are visible at quiescence") {
    std::mt19937 rng(3);
    Stack s;
    const std::vector<std::string> agents = {"a", "b", "c"};
    for (const auto& n : agents) s.runtime.create_agent(n, logic::parse_program(kObjectAgent));
    std::map<std::string, std::string> last;
    for (int i = 0; i < 300; ++i) {
        const auto& n = agents[rng() % agents.size()];
        Json v;
        switch (rng() % 3) {
        case 0: v = static_cast<int>(rng() % 100) - 50; break;
        case 1: v = std::string(1, static_cast<char>('a' + rng() % 26)); break;
        default: v = static_cast<bool>(rng() % 2); break;
        }
        auto r = s.call(rng() % 2 ? "POST" : "PUT", "/" + n + "/", Json{{"data", v}});
        REQUIRE(r.status == 202);
        last[n] = "data(" + logic::to_string(gateway::scalar_to_term(v)) + ")[source(percept)]";
        if (rng() % 4 == 0) {
            s.runtime.run_until_quiescent(1000);
            for (const auto& [agent, expected] : last) {
                auto b = s.beliefs(agent);
                REQUIRE(std::find(b.begin(), b.end(), expected) != b.end());
            }
        }
    }
}

TEST_CASE("gateway adds no behaviour over direct runtime calls") {
    std::mt19937 rng(99);
    std::vector<int> values;
    for (int i = 0; i < 200; ++i) values.push_back(static_cast<int>(rng() % 10));
    const char* program =
        "+data(X) : X > 6 <- .publish_decision(high(X)).\n"
        "+data(X) : X < 2 <- .publish_decision(low(X)).\n";

    auto trace_of = [](bdi::Runtime& rt) {
        auto out = std::make_shared<std::vector<std::string>>();
        rt.set_decision_observer([out](const std::string& agent, const bdi::Decision& d) {
            out->push_back(agent + ":" + logic::to_string(d.content) + "#" + std::to_string(d.seq) + "@" +
                           std::to_string(d.timestamp_ms));
        });
        return out;
    };

    Stack via_http;
    via_http.runtime.create_agent("object_agent", logic::parse_program(program));
    auto http_trace = trace_of(via_http.runtime);

    Stack direct;
    auto& agent = direct.runtime.create_agent("object_agent", logic::parse_program(program));
    auto direct_trace = trace_of(direct.runtime);

    for (std::size_t i = 0; i < values.size(); ++i) {
        REQUIRE(via_http.call("POST", "/object_agent/", Json{{"data", values[i]}}).status == 202);
        agent.inject_percept(logic::Literal("data", {logic::Term::num(values[i])}));
        if (i % 3 == 2) {
            via_http.runtime.run_until_quiescent(100);
            direct.runtime.run_until_quiescent(100);
        }
    }
    via_http.runtime.run_until_quiescent(100);
    direct.runtime.run_until_quiescent(100);
    CHECK(!http_trace->empty());
    CHECK(*http_trace == *direct_trace);
}
