#pragma once

#include <memory>
#include <string>
#include <thread>

#include "jasonrs/service/service.hpp"

namespace httplib {
class Server;
}

namespace jasonrs::service {

struct ListenAddress {
    std::string host = "127.0.0.1";
    int port = 8080;
};

/// "host:port", ":port" or "port". Throws std::invalid_argument.
ListenAddress parse_listen_address(const std::string& text);

/// HTTP/1.1 binding of a Service.
class HttpServer {
public:
    explicit HttpServer(const Service& service);
    ~HttpServer();

    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Port 0 picks an ephemeral port. Returns the bound port.
    int bind(const ListenAddress& address);
    /// Serves on a background thread.
    void start();
    /// Serves on the calling thread until stop().
    void run();
    void stop();

    int port() const { return port_; }

private:
    const Service& service_;
    std::unique_ptr<httplib::Server> server_;
    std::thread thread_;
    int port_ = 0;
};

} // namespace jasonrs::service
