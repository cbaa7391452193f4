#pragma once

#include <acadtree/ingest.hpp>
#include <acadtree/linkage.hpp>

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace acadtree {

struct DegreeSummary {
    DegreeLevel level = DegreeLevel::OTHER;
    int year = 0;
    std::optional<std::string> institution;
    std::optional<std::string> thesis_title;
    std::string supervisor_name;

    bool operator==(const DegreeSummary&) const = default;
};

struct NodeMeta {
    std::string name;
    std::optional<std::string> institution;
    std::vector<std::string> areas;
    std::vector<DegreeSummary> degrees;

    static NodeMeta from_record(const ResearcherRecord& record);
    bool operator==(const NodeMeta&) const = default;
};

struct RemovedEdge {
    SupervisionEdge edge;
    std::vector<std::string> cycle; // closed path, first id repeated at the end

    bool operator==(const RemovedEdge&) const = default;
};

/// Edges dropped to make the graph acyclic, in removal order.
struct CycleReport {
    std::vector<RemovedEdge> removed;

    bool empty() const { return removed.empty(); }
    bool operator==(const CycleReport&) const = default;
};

/// Immutable supervision DAG. Node indices follow sorted id order, so
/// comparing indices compares ids.
class GenealogyGraph {
public:
    using Index = std::size_t;

    std::size_t size() const { return ids_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool contains(std::string_view id) const;

    /// Throws Error{UnknownResearcher}.
    Index index_of(std::string_view id) const;
    const std::string& id_at(Index i) const { return ids_[i]; }
    const std::vector<std::string>& ids() const { return ids_; }

    const NodeMeta& node(Index i) const { return meta_[i]; }
    const NodeMeta& node(std::string_view id) const { return meta_[index_of(id)]; }

    /// Out-edges ordered by (year, supervisee_id, level); in-edges by
    /// (year, supervisor_id, level).
    std::span<const SupervisionEdge> out_edges(Index i) const { return out_[i]; }
    std::span<const SupervisionEdge> in_edges(Index i) const { return in_[i]; }

    /// Distinct supervisees ordered by earliest supervision year, then id.
    std::span<const Index> children(Index i) const { return children_[i]; }
    /// Distinct supervisors in id order.
    std::span<const Index> parents(Index i) const { return parents_[i]; }

    /// Edges on the longest directed path starting at i.
    std::size_t height(Index i) const { return height_[i]; }

    /// All edges in (supervisor_id, supervisee_id, level) order.
    std::vector<SupervisionEdge> edges() const;

private:
    friend struct GraphBuilder;

    std::vector<std::string> ids_;
    std::vector<NodeMeta> meta_;
    std::vector<std::vector<SupervisionEdge>> out_;
    std::vector<std::vector<SupervisionEdge>> in_;
    std::vector<std::vector<Index>> children_;
    std::vector<std::vector<Index>> parents_;
    std::vector<std::size_t> height_;
    std::size_t edge_count_ = 0;
};

struct GraphBuild {
    GenealogyGraph graph;
    CycleReport cycles;
};

/// Builds the DAG. While a directed cycle remains, the cycle found first by
/// a DFS in id order loses its latest-year edge (ties: largest edge key).
/// Throws Error{UnknownEndpoint} when an edge names an id with no record.
GraphBuild build_graph(const std::vector<ResearcherRecord>& records,
                       std::vector<SupervisionEdge> edges);

/// Everyone reachable through one or more supervisions, excluding `id`.
std::set<std::string> descendants(const GenealogyGraph& graph, std::string_view id);

/// generations[k-1] holds every id with a k-step supervision path down to
/// `id`, sorted. Empty for a researcher with no supervisors.
std::vector<std::vector<std::string>> ancestors(const GenealogyGraph& graph, std::string_view id);

/// Longest supervision chain from `id` (root first). Among equally long
/// chains, the lexicographically smallest id sequence.
std::vector<std::string> deepest_path(const GenealogyGraph& graph, std::string_view id);

struct TreeNode {
    std::string id;
    std::string name;
    std::size_t child_count = 0;
    bool expandable = false;

    bool operator==(const TreeNode&) const = default;
};

struct TreeEdge {
    std::string supervisor_id;
    std::string supervisee_id;
    SupervisionLevel level = SupervisionLevel::PHD;
    int year = 0;

    bool operator==(const TreeEdge&) const = default;
};

struct TreeView {
    std::string root_id;
    std::vector<TreeNode> nodes;
    std::vector<TreeEdge> edges;

    bool operator==(const TreeView&) const = default;
};

/// Renders `id` with every node within `depth` levels opened, plus the
/// children of each id in `expanded`. Every expanded id must be visible in
/// the resulting view, otherwise Error{InvalidExpansion}.
TreeView subtree_view(const GenealogyGraph& graph, std::string_view id,
                      const std::set<std::string>& expanded, std::size_t depth = 1);

/// Graphviz rendering; edges carry a `level` attribute (PHD blue, MSC orange).
std::string to_dot(const TreeView& view);

} // namespace acadtree
