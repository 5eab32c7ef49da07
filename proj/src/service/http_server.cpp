#include "jasonrs/service/http_server.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "httplib.h"

namespace jasonrs::service {

ListenAddress parse_listen_address(const std::string& text) {
    ListenAddress out;
    std::string port_text = text;
    auto colon = text.rfind(':');
    if (colon != std::string::npos) {
        if (colon > 0) {
            out.host = text.substr(0, colon);
        }
        port_text = text.substr(colon + 1);
    }
    if (port_text.empty() || !std::all_of(port_text.begin(), port_text.end(), ::isdigit) || port_text.size() > 5) {
        throw std::invalid_argument("bad listen address '" + text + "', expected host:port");
    }
    out.port = std::stoi(port_text);
    if (out.port > 65535) {
        throw std::invalid_argument("port out of range in '" + text + "'");
    }
    return out;
}

HttpServer::HttpServer(const Service& service) : service_(service), server_(std::make_unique<httplib::Server>()) {
    auto handler = [this](const httplib::Request& req, httplib::Response& res) {
        Request r;
        r.method = req.method;
        r.path = req.path;
        r.body = req.body;
        for (const auto& [k, v] : req.headers) {
            std::string key = k;
            std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
            r.headers.emplace(std::move(key), v);
        }
        Response out = service_.handle(r);
        res.status = out.status;
        std::string content_type = "application/json";
        for (const auto& [k, v] : out.headers) {
            if (k == "Content-Type") {
                content_type = v;
            } else {
                res.set_header(k, v);
            }
        }
        if (!out.body.empty()) {
            res.set_content(out.body, content_type);
        }
    };
    server_->set_tcp_nodelay(true);
    server_->Get(".*", handler);
    server_->Post(".*", handler);
    server_->Put(".*", handler);
    server_->Delete(".*", handler);
    server_->Patch(".*", handler);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const ListenAddress& address) {
    if (address.port == 0) {
        port_ = server_->bind_to_any_port(address.host);
    } else {
        port_ = server_->bind_to_port(address.host, address.port) ? address.port : -1;
    }
    if (port_ < 0) {
        throw std::runtime_error("cannot bind " + address.host + ":" + std::to_string(address.port));
    }
    return port_;
}

void HttpServer::start() {
    thread_ = std::thread([this] { server_->listen_after_bind(); });
    server_->wait_until_ready();
}

void HttpServer::run() { server_->listen_after_bind(); }

void HttpServer::stop() {
    server_->stop();
    if (thread_.joinable()) {
        thread_.join();
    }
}

} // namespace jasonrs::service
