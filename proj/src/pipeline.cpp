#include <acadtree/pipeline.hpp>

#include <acadtree/json_io.hpp>

#include <fstream>

namespace acadtree {

std::string BuildSummary::line() const {
    return "records=" + std::to_string(records) + " edges=" + std::to_string(edges) +
           " ambiguous=" + std::to_string(ambiguous) + " unmatched=" + std::to_string(unmatched) +
           " cycles=" + std::to_string(cycles);
}

BuildOutput build_repository(Corpus corpus) {
    auto linkage = link_corpus(corpus.records);
    auto build = build_graph(corpus.records, std::move(linkage.edges));

    BuildOutput out;
    out.claims = std::move(linkage.claims);
    out.repository.records = std::move(corpus.records);
    out.repository.load_report = std::move(corpus.report);
    out.repository.link_report = std::move(linkage.report);
    out.repository.graph = std::move(build.graph);
    out.repository.cycles = std::move(build.cycles);
    return out;
}

BuildSummary summarize(const Repository& repo) {
    BuildSummary summary;
    summary.records = repo.records.size();
    summary.edges = repo.graph.edge_count();
    summary.ambiguous = repo.link_report.ambiguous_claims.size();
    summary.unmatched = repo.link_report.unmatched_claims.size();
    summary.cycles = repo.cycles.removed.size();
    summary.parse_failures = repo.load_report.failures.size();
    return summary;
}

void write_build(const BuildOutput& built, const std::filesystem::path& out) {
    save_repository(built.repository, out);
    std::ofstream claims(out / "claims.jsonl", std::ios::binary | std::ios::trunc);
    for (const auto& claim : built.claims) {
        claims << to_json(claim).dump() << '\n';
    }
}

BuildSummary run_build(const std::filesystem::path& corpus, const std::filesystem::path& out) {
    auto built = build_repository(load_corpus(corpus));
    write_build(built, out);
    return summarize(built.repository);
}

} // namespace acadtree
