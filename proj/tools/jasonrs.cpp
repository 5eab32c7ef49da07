// jasonrs: serve agents over HTTP, run the waste scenario, benchmark, lint.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "jasonrs/bdi/runtime.hpp"
#include "jasonrs/logic/errors.hpp"
#include "jasonrs/logic/program.hpp"
#include "jasonrs/scenario/bench.hpp"
#include "jasonrs/scenario/scenario.hpp"
#include "jasonrs/service/http_server.hpp"

namespace fs = std::filesystem;
using namespace jasonrs;

namespace {

constexpr int kUsage = 1;
constexpr int kFailure = 2;

std::atomic<bool> g_stop{false};

void on_signal(int) { g_stop = true; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct ServeArgs {
    std::string listen = "127.0.0.1:8080";
    std::string accounts;
    std::string agents;
    std::string base;
};

int serve(const ServeArgs& a) {
    auto address = service::parse_listen_address(a.listen);
    bdi::Runtime runtime;
    if (!a.agents.empty()) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(a.agents)) {
            if (entry.is_regular_file() && entry.path().extension() == ".asl") {
                files.push_back(entry.path());
            }
        }
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            runtime.create_agent(f.stem().string(), logic::parse_program(read_file(f.string())));
            spdlog::info("loaded agent {} from {}", f.stem().string(), f.string());
        }
    }
    std::vector<platform::Account> accounts;
    if (!a.accounts.empty()) {
        accounts = platform::load_accounts(a.accounts);
    }
    gateway::Gateway gw(runtime, a.base);
    platform::Platform pf(std::move(accounts), gw);
    pf.install_actuation(runtime);
    service::Service svc(gw, &pf);
    service::HttpServer server(svc);
    int port = server.bind(address);

    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    runtime.start();
    server.start();
    std::cout << "listening on " << address.host << ":" << port << std::endl;
    while (!g_stop) {
        std::this_thread::sleep_for(std::chrono::milliseconds(100));
    }
    server.stop();
    runtime.stop();
    return 0;
}

int run_scenario_cmd(const std::string& spec_path, bool trace) {
    auto spec = scenario::load_scenario(spec_path);
    auto result = scenario::run_scenario(spec);
    if (trace) {
        std::cout << result.to_text();
        return 0;
    }
    for (const auto& d : result.decisions) {
        std::cout << "decision " << d << '\n';
    }
    std::cout << "final " << result.final_decision.value_or("none") << '\n';
    return 0;
}

int bench_cmd(const scenario::BenchOptions& o, const std::string& csv) {
    auto report = scenario::run_bench(o);
    std::cout << scenario::to_table(report);
    if (!csv.empty()) {
        if (csv == "-") {
            std::cout << scenario::to_csv(report);
        } else {
            std::ofstream(csv) << scenario::to_csv(report);
        }
    }
    return 0;
}

int check_cmd(const std::string& path) {
    logic::AgentProgram program;
    try {
        program = logic::parse_program(read_file(path));
    } catch (const logic::ParseError& e) {
        std::cerr << path << ":" << e.line() << ":" << e.column() << ": error: " << e.expected() << '\n';
        return kFailure;
    }
    int errors = 0;
    for (const auto& d : logic::lint(program)) {
        bool error = d.severity == logic::Diagnostic::Severity::Error;
        errors += error ? 1 : 0;
        std::cerr << path << ": " << (error ? "error: " : "warning: ") << d.message << '\n';
    }
    if (errors > 0) {
        return kFailure;
    }
    std::cout << path << ": ok (" << program.initial_beliefs.size() << " beliefs, " << program.rules.size()
              << " rules, " << program.plans.size() << " plans)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"BDI agents behind a REST interface"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string log_level = "info";
    app.add_option("--log-level", log_level, "trace, debug, info, warn, error, off");

    ServeArgs serve_args;
    auto* serve_cmd = app.add_subcommand("serve", "serve agents and the object platform over HTTP");
    serve_cmd->add_option("--listen", serve_args.listen, "host:port")->envname("JASON_RS_LISTEN");
    serve_cmd->add_option("--accounts", serve_args.accounts, "username:password:service file")->check(CLI::ExistingFile);
    serve_cmd->add_option("--agents", serve_args.agents, "directory of .asl programs")->check(CLI::ExistingDirectory);
    serve_cmd->add_option("--base", serve_args.base, "path prefix of agent routes");

    std::string spec_path;
    bool trace = false;
    auto* scenario_cmd = app.add_subcommand("run-scenario", "run the waste-disposal scenario in-process");
    scenario_cmd->add_option("--spec", spec_path, "scenario JSON")->required()->check(CLI::ExistingFile);
    scenario_cmd->add_flag("--trace", trace, "print requests, cycles and decisions");

    scenario::BenchOptions bench_opts;
    std::string csv;
    auto* bench = app.add_subcommand("bench", "sequential latency benchmark");
    bench->add_option("--method", bench_opts.method, "GET or POST")->check(CLI::IsMember({"GET", "POST"}));
    bench->add_option("--n", bench_opts.n, "samples (>= 30)")->check(CLI::Range(30, 1000000));
    bench->add_option("--url", bench_opts.url, "target URL")->required();
    bench->add_option("--body", bench_opts.body, "POST body");
    bench->add_option("--csv", csv, "CSV output file, '-' for stdout");

    std::string check_path;
    auto* check = app.add_subcommand("check", "parse and lint an agent program");
    check->add_option("file", check_path, "agent program")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }
    spdlog::set_default_logger(spdlog::stderr_logger_mt("jasonrs"));
    spdlog::set_level(spdlog::level::from_str(log_level));

    try {
        if (*serve_cmd) return serve(serve_args);
        if (*scenario_cmd) return run_scenario_cmd(spec_path, trace);
        if (*bench) return bench_cmd(bench_opts, csv);
        if (*check) return check_cmd(check_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}
