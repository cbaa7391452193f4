#pragma once

#include <acadtree/ingest.hpp>
#include <acadtree/linkage.hpp>
#include <acadtree/repository.hpp>

#include <filesystem>
#include <string>

namespace acadtree {

struct BuildSummary {
    std::size_t records = 0;
    std::size_t edges = 0;
    std::size_t ambiguous = 0;
    std::size_t unmatched = 0;
    std::size_t cycles = 0;
    std::size_t parse_failures = 0;

    /// "records=12 edges=11 ambiguous=0 unmatched=0 cycles=0"
    std::string line() const;
};

struct BuildOutput {
    Repository repository;
    std::vector<SupervisionClaim> claims;
};

/// parse -> claims -> resolve -> merge -> graph, on an already loaded corpus.
BuildOutput build_repository(Corpus corpus);

BuildSummary summarize(const Repository& repo);

/// Persists the repository and the claims.jsonl stage artifact next to it.
void write_build(const BuildOutput& built, const std::filesystem::path& out);

/// Full pipeline from a corpus path to a persisted repository directory.
BuildSummary run_build(const std::filesystem::path& corpus, const std::filesystem::path& out);

} // namespace acadtree
