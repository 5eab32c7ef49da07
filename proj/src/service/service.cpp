#include "jasonrs/service/service.hpp"

#include <chrono>

#include <spdlog/spdlog.h>

namespace jasonrs::service {

Service::Service(gateway::Gateway& gateway, platform::Platform* platform) : gateway_(gateway), platform_(platform) {}

Response Service::dispatch(const Request& request) const {
    try {
        if (platform_ != nullptr) {
            if (auto r = platform_->handle(request)) {
                return *r;
            }
        }
        if (auto r = gateway_.handle(request)) {
            return *r;
        }
        return gateway::error_response(404, "not_found", "no route for " + request.method + " " + request.path);
    } catch (const gateway::HttpError& e) {
        return gateway::error_response(e.status(), e.code(), e.what());
    } catch (const bdi::UnknownAgent& e) {
        return gateway::error_response(404, "unknown_agent", e.what());
    } catch (const std::exception& e) {
        spdlog::error("{} {} failed: {}", request.method, request.path, e.what());
        return gateway::error_response(500, "internal", e.what());
    }
}

Response Service::handle(const Request& request) const {
    auto start = std::chrono::steady_clock::now();
    Response r = dispatch(request);
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
    spdlog::info("method={} path={} status={} duration_us={}", request.method, request.path, r.status, us);
    return r;
}

} // namespace jasonrs::service
