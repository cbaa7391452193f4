#include <acadtree/api.hpp>

#include <httplib.h>

#include <sys/socket.h>

namespace acadtree {

struct HttpServer::Impl {
    std::shared_ptr<const Service> service;
    httplib::Server server;
};

namespace {

void add_cors(httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
}

} // namespace

HttpServer::HttpServer(std::shared_ptr<const Service> service) : impl_(std::make_unique<Impl>()) {
    impl_->service = std::move(service);
    auto& server = impl_->server;

    // SO_REUSEPORT (httplib's default) would let a second server share an
    // occupied port silently.
    server.set_socket_options([](socket_t sock) {
        int yes = 1;
        setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
    });

    server.Get(".*", [this](const httplib::Request& req, httplib::Response& res) {
        Request request;
        request.path = req.path;
        for (const auto& [key, value] : req.params) {
            request.params.emplace(key, value); // first occurrence wins
        }
        auto response = impl_->service->handle(request);
        res.status = response.status;
        res.set_content(response.body, "application/json; charset=utf-8");
        add_cors(res);
    });
    server.Options(".*", [](const httplib::Request&, httplib::Response& res) {
        res.status = 204;
        add_cors(res);
    });
}

HttpServer::~HttpServer() = default;

std::optional<int> HttpServer::bind(const std::string& host, int port) {
    if (port == 0) {
        int bound = impl_->server.bind_to_any_port(host);
        return bound > 0 ? std::optional<int>(bound) : std::nullopt;
    }
    return impl_->server.bind_to_port(host, port) ? std::optional<int>(port) : std::nullopt;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

} // namespace acadtree
