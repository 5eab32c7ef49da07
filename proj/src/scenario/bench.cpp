#include "jasonrs/scenario/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "httplib.h"

namespace jasonrs::scenario {

BenchReport summarize(const std::string& method, std::vector<double> durations_ms, std::size_t failures) {
    BenchReport r;
    r.method = method;
    r.failures = failures;
    r.samples = durations_ms.size();
    r.durations_ms = durations_ms;
    if (durations_ms.empty()) {
        return r;
    }
    std::sort(durations_ms.begin(), durations_ms.end());
    const std::size_t n = durations_ms.size();
    r.min_ms = durations_ms.front();
    r.max_ms = durations_ms.back();
    r.median_ms = n % 2 == 1 ? durations_ms[n / 2] : (durations_ms[n / 2 - 1] + durations_ms[n / 2]) / 2.0;
    auto rank = static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(n)));
    r.p95_ms = durations_ms[std::max<std::size_t>(rank, 1) - 1];
    return r;
}

BenchReport run_bench(const BenchOptions& options) {
    if (options.n < 30) {
        throw std::invalid_argument("bench needs at least 30 samples, got " + std::to_string(options.n));
    }
    if (options.method != "GET" && options.method != "POST") {
        throw std::invalid_argument("bench method must be GET or POST");
    }
    auto scheme = options.url.find("://");
    auto path_start = options.url.find('/', scheme == std::string::npos ? 0 : scheme + 3);
    if (scheme == std::string::npos || path_start == std::string::npos) {
        throw std::invalid_argument("url must look like http://host:port/path");
    }
    httplib::Client client(options.url.substr(0, path_start));
    client.set_keep_alive(true);
    client.set_tcp_nodelay(true);
    client.set_connection_timeout(5);
    client.set_read_timeout(5);
    const std::string path = options.url.substr(path_start);

    std::vector<double> durations;
    std::size_t failures = 0;
    const std::size_t allowed = options.n / 20; // 5%
    for (std::size_t i = 0; i < options.n; ++i) {
        auto start = std::chrono::steady_clock::now();
        auto res = options.method == "GET" ? client.Get(path) : client.Post(path, options.body, "application/json");
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (!res || res->status >= 400) {
            if (++failures > allowed) {
                std::string why = res ? "status " + std::to_string(res->status) : httplib::to_string(res.error());
                throw BenchAborted(std::to_string(failures) + " of " + std::to_string(i + 1) +
                                   " requests failed (last: " + why + ")");
            }
            continue;
        }
        durations.push_back(ms);
    }
    return summarize(options.method, std::move(durations), failures);
}

std::string to_csv(const BenchReport& report) {
    std::ostringstream os;
    os << "method,sample_idx,duration_ms\n" << std::fixed << std::setprecision(3);
    for (std::size_t i = 0; i < report.durations_ms.size(); ++i) {
        os << report.method << ',' << i << ',' << report.durations_ms[i] << '\n';
    }
    return os.str();
}

std::string to_table(const BenchReport& report) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3);
    os << "method   samples  failures  min_ms     median_ms  p95_ms     max_ms\n";
    os << std::left << std::setw(9) << report.method << std::setw(9) << report.samples << std::setw(10)
       << report.failures << std::setw(11) << report.min_ms << std::setw(11) << report.median_ms << std::setw(11)
       << report.p95_ms << report.max_ms << '\n';
    return os.str();
}

} // namespace jasonrs::scenario
