#pragma once

#include <acadtree/graph.hpp>
#include <acadtree/ingest.hpp>
#include <acadtree/linkage.hpp>

#include <filesystem>
#include <string_view>
#include <vector>

namespace acadtree {

inline constexpr std::string_view kRepositoryFormat = "v1";

/// Everything the query side needs: curricula, the acyclic graph, and the
/// reports produced while building it.
struct Repository {
    std::vector<ResearcherRecord> records; // sorted by id
    GenealogyGraph graph;
    CycleReport cycles;
    LinkReport link_report;
    LoadReport load_report;

    const ResearcherRecord* find(std::string_view id) const;
};

/// Writes manifest.json, records.jsonl, edges.jsonl, removed_edges.jsonl,
/// link_report.json and load_report.json into `dir` (created if needed).
/// Output bytes depend only on the repository contents.
void save_repository(const Repository& repo, const std::filesystem::path& dir);

/// Throws Error{CorruptRepository} for missing or inconsistent files and
/// Error{VersionMismatch} for an unsupported format_version.
Repository load_repository(const std::filesystem::path& dir);

} // namespace acadtree
