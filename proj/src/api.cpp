#include <acadtree/api.hpp>

#include <acadtree/json_io.hpp>
#include <acadtree/metrics.hpp>

#include <algorithm>
#include <charconv>

namespace acadtree {

namespace {

std::string trim(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    auto last = text.find_last_not_of(" \t\r\n");
    return std::string(text.substr(first, last - first + 1));
}

std::optional<std::string> filter_param(const std::map<std::string, std::string>& params, const char* key) {
    auto it = params.find(key);
    if (it == params.end()) {
        return std::nullopt;
    }
    auto value = trim(it->second);
    if (value.empty()) {
        return std::nullopt;
    }
    return value;
}

std::size_t positive_param(const std::map<std::string, std::string>& params, const char* key,
                           std::size_t fallback) {
    auto it = params.find(key);
    if (it == params.end()) {
        return fallback;
    }
    auto text = trim(it->second);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
        throw Error(ErrorCode::BadPagination, std::string(key) + " must be a positive integer");
    }
    return value;
}

json optional_json(const std::optional<std::string>& value) {
    return value ? json(*value) : json(nullptr);
}

json error_body(std::string_view code, std::string_view message) {
    return {{"error", {{"code", code}, {"message", message}}}};
}

int status_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnknownResearcher: return 404;
        case ErrorCode::QueryTooShort:
        case ErrorCode::BadPagination:
        case ErrorCode::InvalidExpansion: return 400;
        default: return 500;
    }
}

std::vector<std::string> split_path(std::string_view path) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start < path.size()) {
        auto end = path.find('/', start);
        if (end == std::string_view::npos) {
            end = path.size();
        }
        if (end > start) {
            parts.emplace_back(path.substr(start, end - start));
        }
        start = end + 1;
    }
    return parts;
}

std::set<std::string> split_ids(std::string_view text) {
    std::set<std::string> ids;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        if (auto id = trim(text.substr(start, end - start)); !id.empty()) {
            ids.insert(std::move(id));
        }
        start = end + 1;
    }
    return ids;
}

bool contains_folded(const std::vector<std::string>& haystack, const std::string& needle) {
    return std::any_of(haystack.begin(), haystack.end(),
                       [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

} // namespace

SearchQuery parse_search_query(const std::map<std::string, std::string>& params) {
    SearchQuery query;
    auto name = params.find("name");
    query.name_fragment = name == params.end() ? std::string{} : trim(name->second);
    if (utf8_length(query.name_fragment) < kMinQueryLength) {
        throw Error(ErrorCode::QueryTooShort, "name must have at least " +
                                                  std::to_string(kMinQueryLength) + " characters");
    }
    query.institution = filter_param(params, "institution");
    query.area = filter_param(params, "area");
    query.page = positive_param(params, "page", 1);
    query.page_size = positive_param(params, "page_size", kDefaultPageSize);
    if (query.page_size > kMaxPageSize) {
        throw Error(ErrorCode::BadPagination,
                    "page_size must not exceed " + std::to_string(kMaxPageSize));
    }
    return query;
}

Service::Service(Repository repo) : repo_(std::move(repo)) {
    entries_.reserve(repo_.records.size());
    for (const auto& record : repo_.records) {
        SearchEntry entry;
        entry.names.push_back(normalize_name(record.full_name).canonical);
        for (const auto& variant : record.citation_names) {
            try {
                entry.names.push_back(normalize_name(variant).canonical);
            } catch (const Error&) {
            }
        }
        entry.institution = record.institution ? fold_text(*record.institution) : std::string{};
        for (const auto& area : record.areas) {
            entry.areas.push_back(fold_text(area));
        }
        entry.width = width(repo_.graph, record.id);
        entry.descendancy = descendancy(repo_.graph, record.id);
        entries_.push_back(std::move(entry));
    }
}

SearchResult Service::search(const SearchQuery& query) const {
    if (utf8_length(trim(query.name_fragment)) < kMinQueryLength) {
        throw Error(ErrorCode::QueryTooShort, "name must have at least " +
                                                  std::to_string(kMinQueryLength) + " characters");
    }
    if (query.page == 0 || query.page_size == 0 || query.page_size > kMaxPageSize) {
        throw Error(ErrorCode::BadPagination, "invalid page or page_size");
    }
    std::string needle;
    try {
        needle = normalize_name(query.name_fragment).canonical;
    } catch (const Error&) {
        throw Error(ErrorCode::QueryTooShort, "name has no searchable characters");
    }
    auto institution = query.institution ? fold_text(*query.institution) : std::string{};
    auto area = query.area ? fold_text(*query.area) : std::string{};

    std::vector<std::size_t> matches;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& entry = entries_[i];
        if (!contains_folded(entry.names, needle)) continue;
        if (!institution.empty() && entry.institution.find(institution) == std::string::npos) continue;
        if (!area.empty() && !contains_folded(entry.areas, area)) continue;
        matches.push_back(i);
    }
    std::sort(matches.begin(), matches.end(), [&](std::size_t a, std::size_t b) {
        const auto& ra = repo_.records[a];
        const auto& rb = repo_.records[b];
        return std::make_tuple(entries_[b].descendancy, std::cref(ra.full_name), std::cref(ra.id)) <
               std::make_tuple(entries_[a].descendancy, std::cref(rb.full_name), std::cref(rb.id));
    });

    SearchResult result;
    result.total_matches = matches.size();
    result.page = query.page;
    result.page_size = query.page_size;
    auto begin = std::min(matches.size(), (query.page - 1) * query.page_size);
    auto end = std::min(matches.size(), begin + query.page_size);
    for (auto k = begin; k < end; ++k) {
        const auto& record = repo_.records[matches[k]];
        const auto& entry = entries_[matches[k]];
        result.hits.push_back({record.id, record.full_name, record.institution, entry.width, entry.descendancy});
    }
    return result;
}

json to_json(const SearchResult& result) {
    json hits = json::array();
    for (const auto& hit : result.hits) {
        hits.push_back({{"id", hit.id},
                        {"name", hit.name},
                        {"institution", optional_json(hit.institution)},
                        {"width", hit.width},
                        {"descendancy", hit.descendancy}});
    }
    return {{"total_matches", result.total_matches},
            {"page", result.page},
            {"page_size", result.page_size},
            {"results", std::move(hits)}};
}

json Service::researcher_detail(std::string_view id) const {
    const auto* record = repo_.find(id);
    if (record == nullptr) {
        throw Error(ErrorCode::UnknownResearcher, "unknown researcher '" + std::string(id) + "'");
    }
    auto index = repo_.graph.index_of(id);
    const auto& meta = repo_.graph.node(index);

    json degrees = json::array();
    for (std::size_t i = 0; i < meta.degrees.size(); ++i) {
        auto item = to_json(meta.degrees[i]);
        item["areas"] = record->degrees[i].areas;
        degrees.push_back(std::move(item));
    }
    json supervisions = json::array();
    for (const auto& entry : record->supervisions_given) {
        supervisions.push_back(
            {{"level", to_string(entry.level)}, {"year", entry.year}, {"supervisee_name", entry.supervisee_name}});
    }
    return {{"id", record->id},
            {"name", meta.name},
            {"citation_names", record->citation_names},
            {"institution", optional_json(meta.institution)},
            {"areas", meta.areas},
            {"degrees", std::move(degrees)},
            {"supervisions_declared", std::move(supervisions)},
            {"resume", optional_json(record->resume)},
            {"counts",
             {{"declared_supervisions", record->supervisions_given.size()},
              {"supervisees", repo_.graph.children(index).size()},
              {"supervisors", repo_.graph.parents(index).size()},
              {"supervision_edges_out", repo_.graph.out_edges(index).size()},
              {"supervision_edges_in", repo_.graph.in_edges(index).size()}}}};
}

Response Service::handle(const Request& request) const {
    auto reply = [](int status, const json& body) { return Response{status, body.dump()}; };

    if (request.method != "GET") {
        return reply(405, error_body("MethodNotAllowed", "only GET is supported"));
    }
    auto parts = split_path(request.path);
    if (parts.empty() || parts[0] != "researchers" || parts.size() > 3) {
        return reply(404, error_body("NotFound", "no route for " + request.path));
    }
    try {
        if (parts.size() == 1) {
            return reply(200, to_json(search(parse_search_query(request.params))));
        }
        const auto& id = parts[1];
        if (parts.size() == 2) {
            return reply(200, researcher_detail(id));
        }
        const auto& graph = repo_.graph;
        const auto& view = parts[2];
        if (view == "tree") {
            auto it = request.params.find("expanded");
            auto expanded = it == request.params.end() ? std::set<std::string>{} : split_ids(it->second);
            return reply(200, to_json(subtree_view(graph, id, expanded)));
        }
        if (view == "metrics") {
            return reply(200, to_json(metrics_report(graph, id)));
        }
        if (view == "timeline") {
            return reply(200, to_json(supervisions_by_year(graph, id)));
        }
        if (view == "ancestors") {
            auto generations = ancestors(graph, id);
            return reply(200, {{"researcher_id", id}, {"generations", generations}});
        }
        if (view == "deepest-path") {
            auto path = deepest_path(graph, id);
            return reply(200, {{"researcher_id", id}, {"length", path.size() - 1}, {"path", path}});
        }
        return reply(404, error_body("NotFound", "no route for " + request.path));
    } catch (const Error& e) {
        return reply(status_for(e.code()), error_body(to_string(e.code()), e.what()));
    }
}

} // namespace acadtree
