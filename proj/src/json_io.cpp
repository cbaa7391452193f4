#include <acadtree/json_io.hpp>

namespace acadtree {

namespace {

[[noreturn]] void corrupt(const std::string& what) {
    throw Error(ErrorCode::CorruptRepository, what);
}

template <typename T>
T field(const json& j, const char* key) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        corrupt(std::string("field '") + key + "': " + e.what());
    }
}

SupervisionLevel level_from(const json& j) {
    auto level = parse_supervision_level(field<std::string>(j, "level"));
    if (!level) {
        corrupt("bad supervision level");
    }
    return *level;
}

json claim_json(const SupervisionClaim& claim) {
    return {{"declaring_record_id", claim.declaring_record_id},
            {"counterpart_name", claim.counterpart_name.canonical},
            {"direction", to_string(claim.direction)},
            {"level", to_string(claim.level)},
            {"year", claim.year}};
}

SupervisionClaim claim_from(const json& j) {
    SupervisionClaim claim;
    claim.declaring_record_id = field<std::string>(j, "declaring_record_id");
    claim.counterpart_name.canonical = field<std::string>(j, "counterpart_name");
    auto direction = field<std::string>(j, "direction");
    if (direction == "SUPERVISOR_DECLARED") {
        claim.direction = ClaimDirection::SUPERVISOR_DECLARED;
    } else if (direction == "SUPERVISEE_DECLARED") {
        claim.direction = ClaimDirection::SUPERVISEE_DECLARED;
    } else {
        corrupt("bad claim direction '" + direction + "'");
    }
    claim.level = level_from(j);
    claim.year = field<int>(j, "year");
    return claim;
}

std::optional<ErrorCode> error_code_from(std::string_view text) {
    for (int c = 0; c <= static_cast<int>(ErrorCode::BadPagination); ++c) {
        if (to_string(static_cast<ErrorCode>(c)) == text) {
            return static_cast<ErrorCode>(c);
        }
    }
    return std::nullopt;
}

} // namespace

json to_json(const SupervisionClaim& claim) { return claim_json(claim); }

json to_json(const SupervisionEdge& edge) {
    json provenance = json::array();
    for (auto direction : edge.provenance.directions()) {
        provenance.push_back(to_string(direction));
    }
    return {{"supervisor_id", edge.supervisor_id},
            {"supervisee_id", edge.supervisee_id},
            {"level", to_string(edge.level)},
            {"year", edge.year},
            {"provenance", std::move(provenance)}};
}

SupervisionEdge edge_from_json(const json& j) {
    SupervisionEdge edge;
    edge.supervisor_id = field<std::string>(j, "supervisor_id");
    edge.supervisee_id = field<std::string>(j, "supervisee_id");
    edge.level = level_from(j);
    edge.year = field<int>(j, "year");
    for (const auto& item : field<std::vector<std::string>>(j, "provenance")) {
        if (item == "SUPERVISOR_DECLARED") {
            edge.provenance.supervisor_declared = true;
        } else if (item == "SUPERVISEE_DECLARED") {
            edge.provenance.supervisee_declared = true;
        } else {
            corrupt("bad provenance '" + item + "'");
        }
    }
    if (edge.provenance.empty() || edge.supervisor_id == edge.supervisee_id) {
        corrupt("invalid edge " + edge.supervisor_id + " -> " + edge.supervisee_id);
    }
    return edge;
}

json to_json(const LinkReport& report) {
    json ambiguous = json::array();
    for (const auto& entry : report.ambiguous_claims) {
        ambiguous.push_back({{"claim", claim_json(entry.claim)}, {"candidate_ids", entry.candidate_ids}});
    }
    json unmatched = json::array();
    for (const auto& entry : report.unmatched_claims) {
        unmatched.push_back(
            {{"claim", claim_json(entry.claim)},
             {"reason", entry.reason == UnmatchedReason::NoCandidate ? "NO_CANDIDATE" : "SELF_REFERENCE"}});
    }
    json conflicts = json::array();
    for (const auto& c : report.year_conflicts) {
        conflicts.push_back({{"supervisor_id", c.supervisor_id},
                             {"supervisee_id", c.supervisee_id},
                             {"level", to_string(c.level)},
                             {"kept_year", c.kept_year},
                             {"discarded_year", c.discarded_year}});
    }
    return {{"total_claims", report.total_claims},
            {"resolved_count", report.resolved_count},
            {"ambiguous_claims", std::move(ambiguous)},
            {"unmatched_claims", std::move(unmatched)},
            {"year_conflicts", std::move(conflicts)}};
}

LinkReport link_report_from_json(const json& j) {
    LinkReport report;
    report.total_claims = field<std::size_t>(j, "total_claims");
    report.resolved_count = field<std::size_t>(j, "resolved_count");
    for (const auto& entry : field<json>(j, "ambiguous_claims")) {
        report.ambiguous_claims.push_back(
            {claim_from(field<json>(entry, "claim")), field<std::vector<std::string>>(entry, "candidate_ids")});
    }
    for (const auto& entry : field<json>(j, "unmatched_claims")) {
        auto reason = field<std::string>(entry, "reason");
        if (reason != "NO_CANDIDATE" && reason != "SELF_REFERENCE") {
            corrupt("bad unmatched reason '" + reason + "'");
        }
        report.unmatched_claims.push_back(
            {claim_from(field<json>(entry, "claim")),
             reason == "NO_CANDIDATE" ? UnmatchedReason::NoCandidate : UnmatchedReason::SelfReference});
    }
    for (const auto& c : field<json>(j, "year_conflicts")) {
        report.year_conflicts.push_back({field<std::string>(c, "supervisor_id"),
                                         field<std::string>(c, "supervisee_id"), level_from(c),
                                         field<int>(c, "kept_year"), field<int>(c, "discarded_year")});
    }
    if (report.resolved_count + report.ambiguous_claims.size() + report.unmatched_claims.size() !=
        report.total_claims) {
        corrupt("link report counts do not add up");
    }
    return report;
}

json to_json(const LoadReport& report) {
    json failures = json::array();
    for (const auto& f : report.failures) {
        failures.push_back({{"source", f.source}, {"code", to_string(f.code)}, {"message", f.message}});
    }
    return {{"documents_seen", report.documents_seen}, {"failures", std::move(failures)}};
}

LoadReport load_report_from_json(const json& j) {
    LoadReport report;
    report.documents_seen = field<std::size_t>(j, "documents_seen");
    for (const auto& f : field<json>(j, "failures")) {
        auto code = error_code_from(field<std::string>(f, "code"));
        if (!code) {
            corrupt("bad failure code");
        }
        report.failures.push_back({field<std::string>(f, "source"), *code, field<std::string>(f, "message")});
    }
    return report;
}

json to_json(const RemovedEdge& removed) {
    json j = to_json(removed.edge);
    j["cycle"] = removed.cycle;
    return j;
}

RemovedEdge removed_edge_from_json(const json& j) {
    return {edge_from_json(j), field<std::vector<std::string>>(j, "cycle")};
}

json to_json(const TreeView& view) {
    json nodes = json::array();
    for (const auto& node : view.nodes) {
        nodes.push_back({{"id", node.id},
                         {"name", node.name},
                         {"child_count", node.child_count},
                         {"expandable", node.expandable}});
    }
    json edges = json::array();
    for (const auto& edge : view.edges) {
        edges.push_back({{"supervisor_id", edge.supervisor_id},
                         {"supervisee_id", edge.supervisee_id},
                         {"level", to_string(edge.level)},
                         {"year", edge.year}});
    }
    return {{"root_id", view.root_id}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

json to_json(const YearlyCounts& timeline) {
    json j = json::object();
    for (const auto& [year, counts] : timeline) {
        j[std::to_string(year)] = {{"msc", counts.msc}, {"phd", counts.phd}};
    }
    return j;
}

json to_json(const MetricsReport& report) {
    auto optional_year = [](const std::optional<int>& year) { return year ? json(*year) : json(nullptr); };
    return {{"researcher_id", report.researcher_id},
            {"width", report.width},
            {"fecundity", report.fecundity},
            {"fertility", report.fertility},
            {"depth", report.depth},
            {"descendancy", report.descendancy},
            {"genealogical_index", report.genealogical_index},
            {"relationships", report.relationships},
            {"cousins", report.cousins},
            {"avg_supervisions_per_year",
             {{"numerator", report.avg_supervisions_per_year.numerator()},
              {"denominator", report.avg_supervisions_per_year.denominator()},
              {"display", report.avg_supervisions_per_year.display()}}},
            {"first_supervision_year", optional_year(report.first_supervision_year)},
            {"last_supervision_year", optional_year(report.last_supervision_year)},
            {"deepest_path", report.deepest_path},
            {"timeline", to_json(report.timeline)}};
}

json to_json(const DegreeSummary& degree) {
    auto optional_text = [](const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); };
    return {{"level", to_string(degree.level)},
            {"year", degree.year},
            {"institution", optional_text(degree.institution)},
            {"thesis_title", optional_text(degree.thesis_title)},
            {"supervisor_name", degree.supervisor_name}};
}

} // namespace acadtree
