#include <acadtree/linkage.hpp>

#include <algorithm>

namespace acadtree {

std::string_view to_string(ClaimDirection direction) {
    return direction == ClaimDirection::SUPERVISOR_DECLARED ? "SUPERVISOR_DECLARED"
                                                            : "SUPERVISEE_DECLARED";
}

Provenance Provenance::of(ClaimDirection direction) {
    Provenance p;
    (direction == ClaimDirection::SUPERVISOR_DECLARED ? p.supervisor_declared
                                                      : p.supervisee_declared) = true;
    return p;
}

Provenance& Provenance::operator|=(const Provenance& other) {
    supervisor_declared = supervisor_declared || other.supervisor_declared;
    supervisee_declared = supervisee_declared || other.supervisee_declared;
    return *this;
}

std::vector<ClaimDirection> Provenance::directions() const {
    std::vector<ClaimDirection> out;
    if (supervisor_declared) out.push_back(ClaimDirection::SUPERVISOR_DECLARED);
    if (supervisee_declared) out.push_back(ClaimDirection::SUPERVISEE_DECLARED);
    return out;
}

bool edge_key_less(const SupervisionEdge& a, const SupervisionEdge& b) {
    return a.key() < b.key();
}

namespace {

bool claim_less(const SupervisionClaim& a, const SupervisionClaim& b) {
    return std::tie(a.declaring_record_id, a.direction, a.counterpart_name, a.level, a.year) <
           std::tie(b.declaring_record_id, b.direction, b.counterpart_name, b.level, b.year);
}

std::optional<SupervisionLevel> supervision_level(DegreeLevel level) {
    switch (level) {
        case DegreeLevel::MSC: return SupervisionLevel::MSC;
        case DegreeLevel::PHD: return SupervisionLevel::PHD;
        case DegreeLevel::OTHER: return std::nullopt;
    }
    return std::nullopt;
}

} // namespace

const std::vector<std::string>& NameIndex::candidates(const NormalizedName& name) const {
    static const std::vector<std::string> none;
    auto it = entries_.find(name);
    return it == entries_.end() ? none : it->second;
}

NameIndex build_name_index(const std::vector<ResearcherRecord>& records) {
    NameIndex index;
    auto add = [&](std::string_view raw, const std::string& id) {
        try {
            index.entries_[normalize_name(raw)].push_back(id);
        } catch (const Error&) {
            // A variant with no letters cannot match anything.
        }
    };
    for (const auto& record : records) {
        add(record.full_name, record.id);
        for (const auto& variant : record.citation_names) {
            add(variant, record.id);
        }
    }
    for (auto& [name, ids] : index.entries_) {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    }
    return index;
}

std::vector<SupervisionClaim> extract_claims(const ResearcherRecord& record) {
    std::vector<SupervisionClaim> claims;
    for (const auto& degree : record.degrees) {
        auto level = supervision_level(degree.level);
        if (!level || degree.supervisor_name.empty()) {
            continue;
        }
        try {
            claims.push_back({record.id, normalize_name(degree.supervisor_name),
                              ClaimDirection::SUPERVISEE_DECLARED, *level, degree.year});
        } catch (const Error&) {
        }
    }
    for (const auto& entry : record.supervisions_given) {
        try {
            claims.push_back({record.id, normalize_name(entry.supervisee_name),
                              ClaimDirection::SUPERVISOR_DECLARED, entry.level, entry.year});
        } catch (const Error&) {
        }
    }
    return claims;
}

Resolution resolve_claims(const std::vector<SupervisionClaim>& claims, const NameIndex& index) {
    Resolution out;
    out.report.total_claims = claims.size();

    for (const auto& claim : claims) {
        const auto& candidates = index.candidates(claim.counterpart_name);
        if (candidates.empty()) {
            out.report.unmatched_claims.push_back({claim, UnmatchedReason::NoCandidate});
            continue;
        }
        if (candidates.size() > 1) {
            out.report.ambiguous_claims.push_back({claim, candidates});
            continue;
        }
        const auto& counterpart = candidates.front();
        if (counterpart == claim.declaring_record_id) {
            out.report.unmatched_claims.push_back({claim, UnmatchedReason::SelfReference});
            continue;
        }
        SupervisionEdge edge;
        if (claim.direction == ClaimDirection::SUPERVISOR_DECLARED) {
            edge.supervisor_id = claim.declaring_record_id;
            edge.supervisee_id = counterpart;
        } else {
            edge.supervisor_id = counterpart;
            edge.supervisee_id = claim.declaring_record_id;
        }
        edge.level = claim.level;
        edge.year = claim.year;
        edge.provenance = Provenance::of(claim.direction);
        out.edges.push_back(std::move(edge));
        ++out.report.resolved_count;
    }

    std::stable_sort(out.edges.begin(), out.edges.end(), [](const auto& a, const auto& b) {
        return std::tie(a.supervisor_id, a.supervisee_id, a.level, a.year) <
               std::tie(b.supervisor_id, b.supervisee_id, b.level, b.year);
    });
    std::sort(out.report.ambiguous_claims.begin(), out.report.ambiguous_claims.end(),
              [](const auto& a, const auto& b) { return claim_less(a.claim, b.claim); });
    std::sort(out.report.unmatched_claims.begin(), out.report.unmatched_claims.end(),
              [](const auto& a, const auto& b) { return claim_less(a.claim, b.claim); });
    return out;
}

MergeResult merge_edges(std::vector<SupervisionEdge> edges) {
    std::sort(edges.begin(), edges.end(), edge_key_less);

    MergeResult out;
    for (auto first = edges.begin(); first != edges.end();) {
        auto last = std::find_if(first, edges.end(),
                                 [&](const SupervisionEdge& e) { return e.key() != first->key(); });

        SupervisionEdge merged = *first;
        std::optional<int> supervisee_year;
        int any_year = first->year;
        for (auto it = first; it != last; ++it) {
            merged.provenance |= it->provenance;
            any_year = std::min(any_year, it->year);
            if (it->provenance.supervisee_declared) {
                supervisee_year = supervisee_year ? std::min(*supervisee_year, it->year) : it->year;
            }
        }
        merged.year = supervisee_year.value_or(any_year);

        std::vector<int> discarded;
        for (auto it = first; it != last; ++it) {
            if (it->year != merged.year) {
                discarded.push_back(it->year);
            }
        }
        std::sort(discarded.begin(), discarded.end());
        discarded.erase(std::unique(discarded.begin(), discarded.end()), discarded.end());
        for (int year : discarded) {
            out.year_conflicts.push_back(
                {merged.supervisor_id, merged.supervisee_id, merged.level, merged.year, year});
        }

        out.edges.push_back(std::move(merged));
        first = last;
    }
    return out;
}

Linkage link_corpus(const std::vector<ResearcherRecord>& records) {
    Linkage out;
    for (const auto& record : records) {
        auto claims = extract_claims(record);
        out.claims.insert(out.claims.end(), claims.begin(), claims.end());
    }
    std::sort(out.claims.begin(), out.claims.end(), claim_less);

    auto index = build_name_index(records);
    auto resolution = resolve_claims(out.claims, index);
    auto merged = merge_edges(std::move(resolution.edges));

    out.edges = std::move(merged.edges);
    out.report = std::move(resolution.report);
    out.report.year_conflicts = std::move(merged.year_conflicts);
    return out;
}

} // namespace acadtree
