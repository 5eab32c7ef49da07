#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace jasonrs::gateway {

using Json = nlohmann::json;

/// Transport-independent request. Header names are lower-case.
struct Request {
    std::string method;
    std::string path;
    std::map<std::string, std::string> headers;
    std::string body;

    std::optional<std::string> header(const std::string& lower_name) const;
};

struct Response {
    int status = 200;
    std::string body;
    std::map<std::string, std::string> headers;

    static Response json(int status, const Json& body);
    static Response empty(int status);
};

/// Thrown by handlers; turned into the shared error body.
class HttpError : public std::runtime_error {
public:
    HttpError(int status, std::string code, const std::string& detail)
        : std::runtime_error(detail), status_(status), code_(std::move(code)) {}
    int status() const { return status_; }
    const std::string& code() const { return code_; }

private:
    int status_;
    std::string code_;
};

/// {"error": code, "detail": detail}
Response error_response(int status, const std::string& code, const std::string& detail);

/// Splits "/a/b/" into {"a", "b"}; empty segments dropped.
std::vector<std::string> split_path(std::string_view path);

/// Requires an application/json content type and a syntactically valid body.
/// Throws HttpError 415 / 400.
Json parse_json_body(const Request& request);

} // namespace jasonrs::gateway
