#include "jasonrs/gateway/http_types.hpp"

#include <algorithm>
#include <cctype>

namespace jasonrs::gateway {

std::optional<std::string> Request::header(const std::string& lower_name) const {
    auto it = headers.find(lower_name);
    if (it == headers.end()) {
        return std::nullopt;
    }
    return it->second;
}

Response Response::json(int status, const Json& body) {
    Response r;
    r.status = status;
    r.body = body.dump();
    r.headers["Content-Type"] = "application/json";
    return r;
}

Response Response::empty(int status) {
    Response r;
    r.status = status;
    return r;
}

Response error_response(int status, const std::string& code, const std::string& detail) {
    return Response::json(status, Json{{"error", code}, {"detail", detail}});
}

std::vector<std::string> split_path(std::string_view path) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < path.size()) {
        std::size_t j = path.find('/', i);
        if (j == std::string_view::npos) {
            j = path.size();
        }
        if (j > i) {
            out.emplace_back(path.substr(i, j - i));
        }
        i = j + 1;
    }
    return out;
}

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) {
        return {};
    }
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

} // namespace

Json parse_json_body(const Request& request) {
    auto ct = request.header("content-type");
    if (!ct) {
        throw HttpError(415, "unsupported_media_type", "Content-Type application/json required");
    }
    std::string value = lower(*ct);
    std::string media = trim(value.substr(0, value.find(';')));
    if (media != "application/json") {
        throw HttpError(415, "unsupported_media_type", "Content-Type application/json required, got " + *ct);
    }
    auto semi = value.find(';');
    if (semi != std::string::npos) {
        std::string param = trim(value.substr(semi + 1));
        if (param.rfind("charset=", 0) == 0) {
            std::string cs = trim(param.substr(8));
            cs.erase(std::remove(cs.begin(), cs.end(), '"'), cs.end());
            if (cs != "utf-8" && cs != "utf8") {
                throw HttpError(415, "unsupported_media_type", "charset must be UTF-8");
            }
        }
    }
    try {
        return Json::parse(request.body);
    } catch (const Json::parse_error& e) {
        throw HttpError(400, "malformed_body", std::string("invalid JSON: ") + e.what());
    }
}

} // namespace jasonrs::gateway
