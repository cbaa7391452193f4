#pragma once

#include <acadtree/graph.hpp>
#include <acadtree/ingest.hpp>
#include <acadtree/linkage.hpp>
#include <acadtree/metrics.hpp>

#include <json.hpp>

// Wire formats. Objects are emitted with sorted keys (nlohmann's default
// map), which keeps every dump byte-stable for identical inputs.
namespace acadtree {

using nlohmann::json;

json to_json(const SupervisionClaim& claim);
json to_json(const SupervisionEdge& edge);
json to_json(const LinkReport& report);
json to_json(const LoadReport& report);
json to_json(const RemovedEdge& removed);
json to_json(const TreeView& view);
json to_json(const YearlyCounts& timeline);
json to_json(const MetricsReport& report);
json to_json(const DegreeSummary& degree);

/// Readers throw Error{CorruptRepository} on shape or value mismatches.
SupervisionEdge edge_from_json(const json& j);
LinkReport link_report_from_json(const json& j);
LoadReport load_report_from_json(const json& j);
RemovedEdge removed_edge_from_json(const json& j);

} // namespace acadtree
