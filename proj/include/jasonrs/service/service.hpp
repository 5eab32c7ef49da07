#pragma once

#include "jasonrs/gateway/gateway.hpp"
#include "jasonrs/platform/platform.hpp"

namespace jasonrs::service {

using gateway::Request;
using gateway::Response;

/// Routes a request to the platform, then to the agent gateway. Never throws:
/// errors become the shared error body. Logs one line per request.
class Service {
public:
    Service(gateway::Gateway& gateway, platform::Platform* platform);

    Response handle(const Request& request) const;

private:
    Response dispatch(const Request& request) const;

    gateway::Gateway& gateway_;
    platform::Platform* platform_;
};

} // namespace jasonrs::service
