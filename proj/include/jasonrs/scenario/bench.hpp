#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace jasonrs::scenario {

class BenchAborted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BenchOptions {
    std::string method = "GET"; // GET or POST
    std::size_t n = 100;
    std::string url;
    std::string body = R"({"data": 1})"; // POST only
};

struct BenchReport {
    std::string method;
    std::size_t samples = 0;
    std::size_t failures = 0;
    double min_ms = 0;
    double median_ms = 0;
    double p95_ms = 0;
    double max_ms = 0;
    std::vector<double> durations_ms; // successful samples, in issue order
};

/// Stats over successful samples; p95 is nearest-rank.
BenchReport summarize(const std::string& method, std::vector<double> durations_ms, std::size_t failures);

/// Sequential requests over one keep-alive connection. Requires n >= 30.
/// Throws BenchAborted when more than 5% of requests fail.
BenchReport run_bench(const BenchOptions& options);

/// `method,sample_idx,duration_ms` rows with a header line.
std::string to_csv(const BenchReport& report);
std::string to_table(const BenchReport& report);

} // namespace jasonrs::scenario
