// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <spdlog/spdlog.h>

#include "httplib.h"
#include "jasonrs/logic/program.hpp"
#include "jasonrs/logic/solver.hpp"
#include "jasonrs/scenario/bench.hpp"
#include "jasonrs/scenario/scenario.hpp"
#include "jasonrs/service/http_server.hpp"
#include "../support/logic_oracle.hpp"
#include "../support/scenario_oracle.hpp"
#include "../support/service_fixture.hpp"
#include "../support/term_oracle.hpp"

using namespace jasonrs;
using namespace jasonrs::logic;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// 1. solve vs brute-force ground enumeration.
Outcome logic_oracle() {
    using namespace jasonrs::testing;
    const int trials = 1000;
    int agree = 0;
    std::string first_failure;
    auto start = Clock::now();
    for (std::uint64_t seed = 1; seed <= trials; ++seed) {
        ProgramGenerator gen(seed * 7919);
        OProgram prog = gen.program();
        OQuery query = gen.query(prog);
        std::vector<int> vars;
        std::set<Tuple> expected = oracle_answers(prog, query, &vars);
        std::set<Tuple> actual;
        try {
            AgentProgram parsed = parse_program(render_program(prog));
            solve(parse_formula(render_items(query.items)), parsed.initial_beliefs, parsed.rules, {},
                  [&](const Substitution& s) {
                      Tuple t;
                      for (int v : vars) {
                          t.push_back(static_cast<int>(s.apply(Term::var(var_name(v))).number().units() /
                                                       Decimal::kUnit));
                      }
                      actual.insert(t);
                      return true;
                  },
                  SolveOptions{1'000'000});
        } catch (const std::exception& e) {
            actual = {{-1}};
        }
        if (actual == expected) {
            ++agree;
        } else if (first_failure.empty()) {
            first_failure = " first mismatch at seed " + std::to_string(seed * 7919);
        }
    }
    double secs = seconds_since(start);
    std::ostringstream os;
    os << agree << "/" << trials << " trials agree in " << secs << " s" << first_failure;
    return {agree == trials && secs < 60.0, os.str()};
}

// 2. MGU factoring, occurs check, idempotence.
Outcome unification_properties() {
    std::mt19937_64 rng(20240611);
    int cases = 0, failures = 0;
    std::string first;
    auto record = [&](const std::string& msg) {
        ++cases;
        if (!msg.empty()) {
            ++failures;
            if (first.empty()) first = " first: " + msg;
        }
    };
    for (int i = 0; i < 10000; ++i) {
        Term a = testing::random_term(rng, 3);
        Term b = i % 2 == 0 ? testing::perturb(a, rng, 2) : testing::random_term(rng, 3);
        record(testing::check_unifier(a, b));
    }
    // Cyclic pairs: X against a term that properly contains X.
    for (int i = 0; i < 1000; ++i) {
        Term inner = testing::random_term(rng, 2);
        Term wrapped = i % 2 == 0 ? Term::structure("f", {Term::var("X")})
                                  : Term::structure("g", {inner, Term::structure("f", {Term::var("X")})});
        auto u = unify(Term::var("X"), wrapped);
        record(u ? "occurs check missed for X = " + to_string(wrapped) : "");
        record(testing::check_unifier(Term::var("X"), wrapped));
    }
    std::ostringstream os;
    os << cases << " generated cases, " << failures << " failures" << first;
    return {failures == 0 && cases >= 10000, os.str()};
}

// 3. Same seed, same schedule, same bytes.
Outcome determinism() {
    int identical = 0;
    const int seeds = 25;
    for (int seed = 1; seed <= seeds; ++seed) {
        std::mt19937 r1(seed), r2(seed);
        auto a = scenario::run_scenario(testing::random_scenario(r1)).to_text();
        auto b = scenario::run_scenario(testing::random_scenario(r2)).to_text();
        identical += a == b && !a.empty() ? 1 : 0;
    }
    std::mt19937 r(1);
    auto spec = scenario::load_scenario(JASONRS_SOURCE_DIR "/scenarios/waste/scenario.json");
    bool shipped = scenario::run_scenario(spec).to_text() == scenario::run_scenario(spec).to_text();
    std::ostringstream os;
    os << identical << "/" << seeds << " seeded runs byte-identical, shipped scenario " << (shipped ? "identical" : "differs");
    return {identical == seeds && shipped, os.str()};
}

// 4. Published allocation equals the brute-force argmin.
Outcome scenario_argmin() {
    std::mt19937 rng(4242);
    const int trials = 1000;
    int match = 0;
    std::string first;
    for (int i = 0; i < trials; ++i) {
        auto spec = testing::random_scenario(rng);
        std::string expected = "allocate(" + testing::oracle_allocation(spec) + ")";
        std::optional<std::string> got;
        try {
            got = scenario::run_scenario(spec).final_decision;
        } catch (const std::exception& e) {
            got = std::string("error: ") + e.what();
        }
        if (got == expected) {
            ++match;
        } else if (first.empty()) {
            first = " first mismatch: " + scenario::to_json(spec).dump() + " got " + got.value_or("none");
        }
    }
    std::ostringstream os;
    os << match << "/" << trials << " configurations match" << first;
    return {match == trials, os.str()};
}

/// Full server on an ephemeral loopback port, agents cycling on the scheduler.
struct LiveServer {
    testing::Stack stack;
    service::HttpServer http{stack.service};
    int port = 0;

    LiveServer() {
        const std::string dir = JASONRS_SOURCE_DIR "/scenarios/waste/";
        auto spec = scenario::load_scenario(dir + "scenario.json");
        for (const auto& e : spec.evacuators) {
            stack.runtime.create_agent(e.name, parse_program(scenario::evacuator_program(e, spec.decider)));
        }
        stack.runtime.create_agent(spec.decider, parse_program(scenario::decider_program(spec.evacuators)));
        stack.runtime.start();
        port = http.bind({"127.0.0.1", 0});
        http.start();
    }
    ~LiveServer() {
        http.stop();
        stack.runtime.stop();
    }
    std::string url(const std::string& path) const { return "http://127.0.0.1:" + std::to_string(port) + path; }
};

// 5. login -> feature -> link -> PUT -> GET decision over real HTTP.
Outcome http_trace() {
    auto start = Clock::now();
    LiveServer server;
    httplib::Client client("127.0.0.1", server.port);
    client.set_tcp_nodelay(true);
    std::vector<std::string> steps;
    auto expect = [&](const char* what, const httplib::Result& res, int status) {
        int got = res ? res->status : -1;
        steps.push_back(std::string(what) + " " + std::to_string(got));
        if (got != status) throw std::runtime_error(std::string(what) + " returned " + std::to_string(got));
        return testing::Json::parse(res->body.empty() ? "null" : res->body);
    };

    // Oracle: shipped costs with a load of 5 on e2.
    auto spec = scenario::load_scenario(JASONRS_SOURCE_DIR "/scenarios/waste/scenario.json");
    spec.percepts = {{"bin_south", 5}};
    const std::string expected = "allocate(" + testing::oracle_allocation(spec) + ")";
    try {
        auto login = expect("login", client.Post("/login", R"({"username":"alice","password":"secret","service":"im.bec3.com"})",
                                                 "application/json"),
                            200);
        httplib::Headers auth{{"Authorization", "Bearer " + login.at("token").get<std::string>()}};
        auto feature = expect("feature",
                              client.Post("/feature", auth,
                                          R"({"name":"tot2","path":"truc/bidul21","type":"gauge","details":"ooo","widget":"none","mqtt":false})",
                                          "application/json"),
                              201);
        auto id = std::to_string(feature.at("id").get<int>());
        expect("link", client.Post("/link", auth, R"({"source_feature":)" + id + R"(,"target_agent":"e2"})", "application/json"),
               201);
        expect("put", client.Put(("/feature/" + id).c_str(), auth, R"({"data":5})", "application/json"), 202);
        std::string decision;
        while (seconds_since(start) < 5.0) {
            auto res = client.Get("/agent_decider/decision");
            if (res && res->status == 200) {
                decision = testing::Json::parse(res->body).at("decision").get<std::string>();
                if (decision == expected) {
                    steps.push_back("decision 200 " + decision);
                    break;
                }
            }
            std::this_thread::sleep_for(std::chrono::milliseconds(2));
        }
        if (decision != expected) throw std::runtime_error("decision " + decision + ", expected " + expected);
    } catch (const std::exception& e) {
        steps.push_back(e.what());
        std::ostringstream os;
        for (const auto& s : steps) os << s << "; ";
        return {false, os.str()};
    }
    double secs = seconds_since(start);
    std::ostringstream os;
    for (const auto& s : steps) os << s << "; ";
    os << "wall " << secs << " s";
    return {secs < 5.0, os.str()};
}

// 6. Latency ceilings over loopback.
Outcome latency_bounds() {
    LiveServer server;
    scenario::BenchOptions get;
    get.method = "GET";
    get.n = 100;
    get.url = server.url("/agent_decider/decision");
    scenario::BenchOptions post = get;
    post.method = "POST";
    post.url = server.url("/e1/");
    try {
        auto g = scenario::run_bench(get);
        auto p = scenario::run_bench(post);
        std::ostringstream os;
        os.precision(3);
        os << std::fixed << "GET min/median/p95/max " << g.min_ms << "/" << g.median_ms << "/" << g.p95_ms << "/" << g.max_ms
           << " ms; POST " << p.min_ms << "/" << p.median_ms << "/" << p.p95_ms << "/" << p.max_ms << " ms";
        return {g.samples == 100 && p.samples == 100 && g.median_ms <= 450.0 && p.median_ms <= 1000.0, os.str()};
    } catch (const std::exception& e) {
        return {false, e.what()};
    }
}

// 7. N distinct PUT values -> one data/1 percept holding the last, N add events.
Outcome percept_replacement() {
    std::mt19937 rng(77);
    const int trials = 200;
    int ok = 0;
    std::string first;
    for (int t = 0; t < trials; ++t) {
        testing::Stack s;
        auto& agent = s.runtime.create_agent("object_agent", parse_program(""));
        auto token = s.login();
        auto id = std::to_string(s.create_feature(token, "gauge"));
        s.call("POST", "/link", testing::Json{{"source_feature", std::stoi(id)}, {"target_agent", "object_agent"}}, token);
        const int n = 1 + static_cast<int>(rng() % 60);
        std::vector<int> values(200);
        std::iota(values.begin(), values.end(), -100);
        std::shuffle(values.begin(), values.end(), rng);
        values.resize(n);
        bool accepted = true;
        for (int v : values) {
            accepted &= s.call("PUT", "/feature/" + id, testing::Json{{"data", v}}, token).status == 202;
            if (rng() % 3 == 0) s.runtime.run_until_quiescent(10000);
        }
        s.runtime.run_until_quiescent(10000);
        std::vector<std::string> data;
        for (const auto& b : agent.beliefs()) {
            if (b.predicate == "data" && b.args.size() == 1) data.push_back(to_string(b));
        }
        int adds = 0;
        for (const auto& e : agent.event_history()) {
            adds += e.trigger.kind == TriggerKind::AddBelief && e.trigger.literal.predicate == "data" ? 1 : 0;
        }
        const std::string last = "data(" + std::to_string(values.back()) + ")[source(percept)]";
        if (accepted && data == std::vector<std::string>{last} && adds == n) {
            ++ok;
        } else if (first.empty()) {
            first = " first failure: n=" + std::to_string(n) + " adds=" + std::to_string(adds);
        }
    }
    std::ostringstream os;
    os << ok << "/" << trials << " sequences (N up to 60)" << first;
    return {ok == trials, os.str()};
}

} // namespace

int main() {
    spdlog::set_level(spdlog::level::off);
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"logic oracle equivalence", logic_oracle},
        {"unification properties", unification_properties},
        {"determinism", determinism},
        {"scenario argmin", scenario_argmin},
        {"end-to-end http trace", http_trace},
        {"latency bounds", latency_bounds},
        {"percept replacement", percept_replacement},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
