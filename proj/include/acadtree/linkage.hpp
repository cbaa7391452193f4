#pragma once

#include <acadtree/ingest.hpp>
#include <acadtree/name.hpp>

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace acadtree {

enum class ClaimDirection { SUPERVISOR_DECLARED, SUPERVISEE_DECLARED };

std::string_view to_string(ClaimDirection direction);

/// Which sides of a supervision asserted it.
struct Provenance {
    bool supervisor_declared = false;
    bool supervisee_declared = false;

    static Provenance of(ClaimDirection direction);
    Provenance& operator|=(const Provenance& other);
    bool empty() const { return !supervisor_declared && !supervisee_declared; }
    std::vector<ClaimDirection> directions() const;

    bool operator==(const Provenance&) const = default;
};

struct SupervisionClaim {
    std::string declaring_record_id;
    NormalizedName counterpart_name;
    ClaimDirection direction = ClaimDirection::SUPERVISEE_DECLARED;
    SupervisionLevel level = SupervisionLevel::PHD;
    int year = 0;

    bool operator==(const SupervisionClaim&) const = default;
};

struct SupervisionEdge {
    std::string supervisor_id;
    std::string supervisee_id;
    SupervisionLevel level = SupervisionLevel::PHD;
    int year = 0;
    Provenance provenance;

    auto key() const { return std::tie(supervisor_id, supervisee_id, level); }
    bool operator==(const SupervisionEdge&) const = default;
};

/// Canonical edge order: (supervisor_id, supervisee_id, level).
bool edge_key_less(const SupervisionEdge& a, const SupervisionEdge& b);

struct AmbiguousClaim {
    SupervisionClaim claim;
    std::vector<std::string> candidate_ids;

    bool operator==(const AmbiguousClaim&) const = default;
};

enum class UnmatchedReason { NoCandidate, SelfReference };

struct UnmatchedClaim {
    SupervisionClaim claim;
    UnmatchedReason reason = UnmatchedReason::NoCandidate;

    bool operator==(const UnmatchedClaim&) const = default;
};

struct YearConflict {
    std::string supervisor_id;
    std::string supervisee_id;
    SupervisionLevel level = SupervisionLevel::PHD;
    int kept_year = 0;
    int discarded_year = 0;

    bool operator==(const YearConflict&) const = default;
};

struct LinkReport {
    std::size_t total_claims = 0;
    std::size_t resolved_count = 0;
    std::vector<AmbiguousClaim> ambiguous_claims;
    std::vector<UnmatchedClaim> unmatched_claims;
    std::vector<YearConflict> year_conflicts;

    bool operator==(const LinkReport&) const = default;
};

/// Normalized name -> ids of every record answering to it, sorted.
class NameIndex {
public:
    const std::vector<std::string>& candidates(const NormalizedName& name) const;
    const std::map<NormalizedName, std::vector<std::string>>& entries() const { return entries_; }

private:
    friend NameIndex build_name_index(const std::vector<ResearcherRecord>& records);
    std::map<NormalizedName, std::vector<std::string>> entries_;
};

NameIndex build_name_index(const std::vector<ResearcherRecord>& records);

std::vector<SupervisionClaim> extract_claims(const ResearcherRecord& record);

struct Resolution {
    std::vector<SupervisionEdge> edges; // unmerged, in canonical order
    LinkReport report;
};

/// A claim resolves iff its counterpart name has exactly one candidate.
/// Two or more candidates go to the ambiguous list, never guessed; a sole
/// candidate equal to the declaring record is unmatched (self-reference).
Resolution resolve_claims(const std::vector<SupervisionClaim>& claims, const NameIndex& index);

struct MergeResult {
    std::vector<SupervisionEdge> edges;
    std::vector<YearConflict> year_conflicts;
};

/// Collapses edges sharing (supervisor, supervisee, level). On a year
/// disagreement the supervisee-declared year wins.
MergeResult merge_edges(std::vector<SupervisionEdge> edges);

struct Linkage {
    std::vector<SupervisionClaim> claims;
    std::vector<SupervisionEdge> edges; // merged
    LinkReport report;
};

/// extract -> resolve -> merge over a whole corpus.
Linkage link_corpus(const std::vector<ResearcherRecord>& records);

} // namespace acadtree
