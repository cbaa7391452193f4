#pragma once

#include <acadtree/repository.hpp>

#include <json.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace acadtree {

inline constexpr std::size_t kMaxPageSize = 100;
inline constexpr std::size_t kDefaultPageSize = 20;
inline constexpr std::size_t kMinQueryLength = 2;

struct SearchQuery {
    std::string name_fragment;
    std::optional<std::string> institution;
    std::optional<std::string> area;
    std::size_t page = 1;
    std::size_t page_size = kDefaultPageSize;
};

struct SearchHit {
    std::string id;
    std::string name;
    std::optional<std::string> institution;
    std::size_t width = 0;
    std::size_t descendancy = 0;

    bool operator==(const SearchHit&) const = default;
};

struct SearchResult {
    std::size_t total_matches = 0;
    std::size_t page = 1;
    std::size_t page_size = kDefaultPageSize;
    std::vector<SearchHit> hits;
};

/// Validates query-string parameters (name, institution, area, page,
/// page_size). Throws Error{QueryTooShort} or Error{BadPagination}.
SearchQuery parse_search_query(const std::map<std::string, std::string>& params);

struct Request {
    std::string method = "GET";
    std::string path;
    std::map<std::string, std::string> params;
};

struct Response {
    int status = 200;
    std::string body;
};

/// Read-only query surface over a loaded repository. Safe to call from
/// many threads at once: nothing is mutated after construction.
class Service {
public:
    explicit Service(Repository repo);

    const Repository& repository() const { return repo_; }

    /// Case- and diacritic-insensitive substring search on normalized
    /// names, filters applied conjunctively, ranked by descendancy
    /// (descending) then name.
    SearchResult search(const SearchQuery& query) const;

    nlohmann::json researcher_detail(std::string_view id) const;

    /// Routes one request. Errors become a JSON envelope
    /// {"error": {"code": ..., "message": ...}} with status 400/404/405.
    Response handle(const Request& request) const;

private:
    struct SearchEntry {
        std::vector<std::string> names; // normalized full name and variants
        std::string institution;        // folded
        std::vector<std::string> areas; // folded
        std::size_t width = 0;
        std::size_t descendancy = 0;
    };

    Repository repo_;
    std::vector<SearchEntry> entries_; // parallel to repo_.records
};

nlohmann::json to_json(const SearchResult& result);

/// Serves `service` over HTTP/1.1 with permissive CORS headers.
class HttpServer {
public:
    explicit HttpServer(std::shared_ptr<const Service> service);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Port 0 picks a free port. Returns the bound port, or nullopt when
    /// the address is unavailable.
    std::optional<int> bind(const std::string& host, int port);

    /// Blocks until stop() is called.
    void listen();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace acadtree
