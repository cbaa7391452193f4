#include <acadtree/repository.hpp>

#include <acadtree/json_io.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace acadtree {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
}

std::string read_required(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::CorruptRepository, "repository file missing: " + path.filename().string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

json parse_json(const std::string& text, std::string_view file) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::CorruptRepository, std::string(file) + ": " + e.what());
    }
}

void check_count(const json& manifest, const char* key, std::size_t actual) {
    auto counts = manifest.find("counts");
    if (counts == manifest.end() || !counts->is_object() || !counts->contains(key) ||
        !(*counts)[key].is_number_unsigned() || (*counts)[key].get<std::size_t>() != actual) {
        throw Error(ErrorCode::CorruptRepository,
                    std::string("manifest count for ") + key + " does not match " +
                        std::to_string(actual) + " stored entries");
    }
}

} // namespace

const ResearcherRecord* Repository::find(std::string_view id) const {
    auto it = std::lower_bound(records.begin(), records.end(), id,
                               [](const ResearcherRecord& r, std::string_view key) { return r.id < key; });
    return it != records.end() && it->id == id ? &*it : nullptr;
}

void save_repository(const Repository& repo, const fs::path& dir) {
    fs::create_directories(dir);

    std::string records;
    for (const auto& record : repo.records) {
        records += to_jsonl(record);
        records += '\n';
    }
    auto edges_list = repo.graph.edges();
    std::string edges;
    for (const auto& edge : edges_list) {
        edges += to_json(edge).dump();
        edges += '\n';
    }
    std::string removed;
    for (const auto& entry : repo.cycles.removed) {
        removed += to_json(entry).dump();
        removed += '\n';
    }
    json manifest = {{"format_version", kRepositoryFormat},
                     {"counts",
                      {{"records", repo.records.size()},
                       {"edges", edges_list.size()},
                       {"removed_edges", repo.cycles.removed.size()}}}};

    write_file(dir / "records.jsonl", records);
    write_file(dir / "edges.jsonl", edges);
    write_file(dir / "removed_edges.jsonl", removed);
    write_file(dir / "link_report.json", to_json(repo.link_report).dump(2) + "\n");
    write_file(dir / "load_report.json", to_json(repo.load_report).dump(2) + "\n");
    // Manifest last: a directory without one is never mistaken for complete.
    write_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

Repository load_repository(const fs::path& dir) {
    auto manifest = parse_json(read_required(dir / "manifest.json"), "manifest.json");
    if (!manifest.is_object() || !manifest.contains("format_version") ||
        !manifest["format_version"].is_string()) {
        throw Error(ErrorCode::CorruptRepository, "manifest.json lacks format_version");
    }
    auto version = manifest["format_version"].get<std::string>();
    if (version != kRepositoryFormat) {
        throw Error(ErrorCode::VersionMismatch, "repository format '" + version + "' is not supported (expected " +
                                                    std::string(kRepositoryFormat) + ")");
    }

    Repository repo;
    for (const auto& line : lines_of(read_required(dir / "records.jsonl"))) {
        try {
            repo.records.push_back(parse_curriculum(line, DocumentFormat::JSONL));
        } catch (const Error& e) {
            throw Error(ErrorCode::CorruptRepository, std::string("records.jsonl: ") + e.what());
        }
    }
    std::vector<SupervisionEdge> edges;
    for (const auto& line : lines_of(read_required(dir / "edges.jsonl"))) {
        edges.push_back(edge_from_json(parse_json(line, "edges.jsonl")));
    }
    for (const auto& line : lines_of(read_required(dir / "removed_edges.jsonl"))) {
        repo.cycles.removed.push_back(removed_edge_from_json(parse_json(line, "removed_edges.jsonl")));
    }
    repo.link_report = link_report_from_json(parse_json(read_required(dir / "link_report.json"), "link_report.json"));
    repo.load_report = load_report_from_json(parse_json(read_required(dir / "load_report.json"), "load_report.json"));

    check_count(manifest, "records", repo.records.size());
    check_count(manifest, "edges", edges.size());
    check_count(manifest, "removed_edges", repo.cycles.removed.size());

    if (!std::is_sorted(repo.records.begin(), repo.records.end(),
                        [](const auto& a, const auto& b) { return a.id < b.id; }) ||
        std::adjacent_find(repo.records.begin(), repo.records.end(),
                           [](const auto& a, const auto& b) { return a.id == b.id; }) != repo.records.end()) {
        throw Error(ErrorCode::CorruptRepository, "records.jsonl is not sorted by unique id");
    }

    try {
        auto build = build_graph(repo.records, std::move(edges));
        if (!build.cycles.empty()) {
            throw Error(ErrorCode::CorruptRepository, "stored edges contain a cycle");
        }
        repo.graph = std::move(build.graph);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::CorruptRepository) {
            throw;
        }
        throw Error(ErrorCode::CorruptRepository, e.what());
    }
    return repo;
}

} // namespace acadtree
