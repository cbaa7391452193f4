// Command-line entry point: build a repository from a curriculum corpus,
// query it, export tree views and serve the HTTP API.
//
// Exit status: 0 success, 1 data error, 2 usage error.

#include <acadtree/api.hpp>
#include <acadtree/json_io.hpp>
#include <acadtree/metrics.hpp>
#include <acadtree/pipeline.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace acadtree;

constexpr int kDataError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int cmd_build(const std::string& corpus, const std::string& out) {
    auto built = build_repository(load_corpus(corpus));
    for (const auto& failure : built.repository.load_report.failures) {
        std::cerr << "warning: " << failure.source << ": " << to_string(failure.code) << ": "
                  << failure.message << "\n";
    }
    write_build(built, out);
    std::cout << summarize(built.repository).line() << "\n";
    return 0;
}

void print_metrics(const MetricsReport& report, const NodeMeta& meta) {
    std::cout << "researcher: " << report.researcher_id << " (" << meta.name << ")\n"
              << "width: " << report.width << "\n"
              << "fecundity: " << report.fecundity << "\n"
              << "fertility: " << report.fertility << "\n"
              << "depth: " << report.depth << "\n"
              << "descendancy: " << report.descendancy << "\n"
              << "genealogical_index: " << report.genealogical_index << "\n"
              << "relationships: " << report.relationships << "\n"
              << "cousins: " << report.cousins << "\n"
              << "avg_supervisions_per_year: " << report.avg_supervisions_per_year.display() << " ("
              << report.avg_supervisions_per_year.numerator() << "/"
              << report.avg_supervisions_per_year.denominator() << ")\n";
    if (report.first_supervision_year) {
        std::cout << "first_supervision_year: " << *report.first_supervision_year << "\n"
                  << "last_supervision_year: " << *report.last_supervision_year << "\n";
    }
    std::cout << "deepest_path:";
    for (std::size_t i = 0; i < report.deepest_path.size(); ++i) {
        std::cout << (i == 0 ? " " : " -> ") << report.deepest_path[i];
    }
    std::cout << "\ntimeline:\n";
    for (const auto& [year, counts] : report.timeline) {
        std::cout << "  " << year << "  msc=" << counts.msc << " phd=" << counts.phd << "\n";
    }
}

int cmd_metrics(const std::string& repo_dir, const std::string& id, bool as_json) {
    auto repo = load_repository(repo_dir);
    auto report = metrics_report(repo.graph, id);
    if (as_json) {
        std::cout << to_json(report).dump(2) << "\n";
    } else {
        print_metrics(report, repo.graph.node(id));
    }
    return 0;
}

int cmd_export(const std::string& repo_dir, const std::string& id, std::size_t depth, const std::string& format) {
    auto repo = load_repository(repo_dir);
    auto view = subtree_view(repo.graph, id, {}, depth);
    if (format == "dot") {
        std::cout << to_dot(view);
    } else {
        std::cout << to_json(view).dump(2) << "\n";
    }
    return 0;
}

int cmd_search(const std::string& repo_dir, const std::map<std::string, std::string>& params, bool as_json) {
    SearchQuery query;
    try {
        query = parse_search_query(params);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    Service service(load_repository(repo_dir));

    query.page_size = kMaxPageSize;
    SearchResult all = service.search(query);
    for (auto page = all; page.hits.size() == kMaxPageSize;) {
        ++query.page;
        page = service.search(query);
        all.hits.insert(all.hits.end(), page.hits.begin(), page.hits.end());
    }
    all.page = 1;
    all.page_size = all.hits.size();

    if (as_json) {
        std::cout << to_json(all).dump(2) << "\n";
        return 0;
    }
    for (const auto& hit : all.hits) {
        std::cout << hit.id << "\t" << hit.name << "\t" << hit.institution.value_or("-") << "\twidth=" << hit.width
                  << "\tdescendancy=" << hit.descendancy << "\n";
    }
    std::cerr << all.total_matches << " match(es)\n";
    return 0;
}

int cmd_serve(const std::string& repo_dir, const std::string& host, int port) {
    auto service = std::make_shared<const Service>(load_repository(repo_dir));
    HttpServer server(service);
    auto bound = server.bind(host, port);
    if (!bound) {
        std::cerr << "error: cannot listen on " << host << ":" << port << " (port in use or unavailable)\n";
        return kDataError;
    }
    std::cerr << "serving " << service->repository().records.size() << " researchers on http://" << host << ":"
              << *bound << "\n";
    server.listen();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Academic genealogy repository builder and query tool"};
    app.require_subcommand(1);

    std::string corpus, out, repo, id, format, name, institution, area, host = "127.0.0.1";
    std::size_t depth = 1;
    int port = 8080;
    bool as_json = false;

    auto* build = app.add_subcommand("build", "Parse a corpus, resolve supervisions and persist the repository");
    build->add_option("--corpus", corpus, "Corpus directory or file")->required();
    build->add_option("--out", out, "Repository output directory")->required();

    auto* metrics = app.add_subcommand("metrics", "Print the genealogy metrics of one researcher");
    metrics->add_option("--repo", repo, "Repository directory")->required();
    metrics->add_option("--id", id, "Researcher id")->required();
    metrics->add_flag("--json", as_json, "Emit the MetricsReport JSON document");

    auto* exporter = app.add_subcommand("export", "Write a subtree view as DOT or JSON");
    exporter->add_option("--repo", repo, "Repository directory")->required();
    exporter->add_option("--id", id, "Root researcher id")->required();
    exporter->add_option("--depth", depth, "Levels opened below the root")->capture_default_str();
    exporter->add_option("--format", format, "dot or json")->required()->check(CLI::IsMember({"dot", "json"}));

    auto* search = app.add_subcommand("search", "Find researchers by name");
    search->add_option("--repo", repo, "Repository directory")->required();
    search->add_option("--name", name, "Name fragment (at least 2 characters)")->required();
    search->add_option("--institution", institution, "Institution filter");
    search->add_option("--area", area, "Knowledge-area filter");
    search->add_flag("--json", as_json, "Emit the SearchResult JSON document");

    auto* serve = app.add_subcommand("serve", "Serve the read-only HTTP API");
    serve->add_option("--repo", repo, "Repository directory")->required();
    serve->add_option("--port", port, "TCP port")->required()->check(CLI::Range(0, 65535));
    serve->add_option("--host", host, "Bind address")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*build) return cmd_build(corpus, out);
        if (*metrics) return cmd_metrics(repo, id, as_json);
        if (*exporter) return cmd_export(repo, id, depth, format);
        if (*search) {
            std::map<std::string, std::string> params{{"name", name}};
            if (!institution.empty()) params["institution"] = institution;
            if (!area.empty()) params["area"] = area;
            return cmd_search(repo, params, as_json);
        }
        if (*serve) return cmd_serve(repo, host, port);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return kUsageError;
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return kDataError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDataError;
    }
    return kUsageError;
}
