#include <acadtree/graph.hpp>

#include <algorithm>
#include <deque>
#include <map>

namespace acadtree {

NodeMeta NodeMeta::from_record(const ResearcherRecord& record) {
    NodeMeta meta;
    meta.name = record.full_name;
    meta.institution = record.institution;
    meta.areas = record.areas;
    for (const auto& degree : record.degrees) {
        meta.degrees.push_back(
            {degree.level, degree.year, degree.institution, degree.thesis_title, degree.supervisor_name});
    }
    return meta;
}

bool GenealogyGraph::contains(std::string_view id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

GenealogyGraph::Index GenealogyGraph::index_of(std::string_view id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) {
        throw Error(ErrorCode::UnknownResearcher, "unknown researcher '" + std::string(id) + "'");
    }
    return static_cast<Index>(it - ids_.begin());
}

std::vector<SupervisionEdge> GenealogyGraph::edges() const {
    std::vector<SupervisionEdge> all;
    all.reserve(edge_count_);
    for (const auto& list : out_) {
        all.insert(all.end(), list.begin(), list.end());
    }
    std::sort(all.begin(), all.end(), edge_key_less);
    return all;
}

namespace {

using Index = GenealogyGraph::Index;

struct IndexedEdge {
    Index from;
    Index to;
};

// Returns edge positions forming the first directed cycle a DFS in index
// order meets, in path order, or an empty vector when the graph is acyclic.
std::vector<std::size_t> find_cycle(std::size_t node_count,
                                    const std::vector<std::vector<std::size_t>>& adjacency,
                                    const std::vector<IndexedEdge>& edges,
                                    const std::vector<bool>& alive) {
    enum class Color { White, Gray, Black };
    struct Frame {
        Index node;
        std::size_t next = 0;
        std::size_t via = 0; // edge that entered this node, unused for roots
    };

    std::vector<Color> color(node_count, Color::White);
    std::vector<std::size_t> stack_pos(node_count, 0);
    std::vector<Frame> stack;

    for (Index root = 0; root < node_count; ++root) {
        if (color[root] != Color::White) {
            continue;
        }
        color[root] = Color::Gray;
        stack_pos[root] = 0;
        stack.push_back({root});
        while (!stack.empty()) {
            auto& frame = stack.back();
            const auto& out = adjacency[frame.node];
            if (frame.next == out.size()) {
                color[frame.node] = Color::Black;
                stack.pop_back();
                continue;
            }
            std::size_t e = out[frame.next++];
            if (!alive[e]) {
                continue;
            }
            Index target = edges[e].to;
            if (color[target] == Color::Gray) {
                std::vector<std::size_t> cycle;
                for (std::size_t k = stack_pos[target] + 1; k < stack.size(); ++k) {
                    cycle.push_back(stack[k].via);
                }
                cycle.push_back(e);
                return cycle;
            }
            if (color[target] == Color::White) {
                color[target] = Color::Gray;
                stack_pos[target] = stack.size();
                stack.push_back({target, 0, e});
            }
        }
    }
    return {};
}

bool out_order(const SupervisionEdge& a, const SupervisionEdge& b) {
    return std::tie(a.year, a.supervisee_id, a.level) < std::tie(b.year, b.supervisee_id, b.level);
}

bool in_order(const SupervisionEdge& a, const SupervisionEdge& b) {
    return std::tie(a.year, a.supervisor_id, a.level) < std::tie(b.year, b.supervisor_id, b.level);
}

std::string dot_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c == '\n' ? ' ' : c;
    }
    return out;
}

} // namespace

struct GraphBuilder {
    static GraphBuild build(const std::vector<ResearcherRecord>& records,
                            std::vector<SupervisionEdge> edges) {
        GraphBuild result;
        GenealogyGraph& g = result.graph;

        std::vector<const ResearcherRecord*> sorted;
        sorted.reserve(records.size());
        for (const auto& record : records) {
            sorted.push_back(&record);
        }
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto* a, const auto* b) { return a->id < b->id; });
        for (const auto* record : sorted) {
            g.ids_.push_back(record->id);
            g.meta_.push_back(NodeMeta::from_record(*record));
        }
        const std::size_t n = g.ids_.size();

        std::sort(edges.begin(), edges.end(), edge_key_less);
        std::vector<IndexedEdge> indexed;
        indexed.reserve(edges.size());
        for (const auto& edge : edges) {
            if (!g.contains(edge.supervisor_id) || !g.contains(edge.supervisee_id)) {
                const auto& missing = g.contains(edge.supervisor_id) ? edge.supervisee_id
                                                                     : edge.supervisor_id;
                throw Error(ErrorCode::UnknownEndpoint,
                            "edge " + edge.supervisor_id + " -> " + edge.supervisee_id +
                                " references unknown id '" + missing + "'");
            }
            indexed.push_back({g.index_of(edge.supervisor_id), g.index_of(edge.supervisee_id)});
        }

        // Edge positions are in key order, so each adjacency list is too.
        std::vector<std::vector<std::size_t>> adjacency(n);
        for (std::size_t e = 0; e < indexed.size(); ++e) {
            adjacency[indexed[e].from].push_back(e);
        }

        std::vector<bool> alive(edges.size(), true);
        for (;;) {
            auto cycle = find_cycle(n, adjacency, indexed, alive);
            if (cycle.empty()) {
                break;
            }
            // Positions are key-ordered: the max of (year, position) is the
            // latest edge with the largest key among ties.
            auto victim = *std::max_element(cycle.begin(), cycle.end(), [&](auto a, auto b) {
                return std::tie(edges[a].year, a) < std::tie(edges[b].year, b);
            });
            RemovedEdge removed;
            removed.edge = edges[victim];
            for (auto e : cycle) {
                removed.cycle.push_back(g.ids_[indexed[e].from]);
            }
            removed.cycle.push_back(removed.cycle.front());
            result.cycles.removed.push_back(std::move(removed));
            alive[victim] = false;
        }

        g.out_.assign(n, {});
        g.in_.assign(n, {});
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (!alive[e]) {
                continue;
            }
            g.out_[indexed[e].from].push_back(edges[e]);
            g.in_[indexed[e].to].push_back(edges[e]);
            ++g.edge_count_;
        }

        g.children_.assign(n, {});
        g.parents_.assign(n, {});
        for (Index i = 0; i < n; ++i) {
            std::sort(g.out_[i].begin(), g.out_[i].end(), out_order);
            std::sort(g.in_[i].begin(), g.in_[i].end(), in_order);
            for (const auto& edge : g.out_[i]) {
                Index child = g.index_of(edge.supervisee_id);
                if (std::find(g.children_[i].begin(), g.children_[i].end(), child) ==
                    g.children_[i].end()) {
                    g.children_[i].push_back(child);
                }
            }
            for (const auto& edge : g.in_[i]) {
                g.parents_[i].push_back(g.index_of(edge.supervisor_id));
            }
            std::sort(g.parents_[i].begin(), g.parents_[i].end());
            g.parents_[i].erase(std::unique(g.parents_[i].begin(), g.parents_[i].end()),
                                g.parents_[i].end());
        }

        // Heights bottom-up: a node is final once all its children are.
        g.height_.assign(n, 0);
        std::vector<std::size_t> pending(n);
        std::deque<Index> ready;
        for (Index i = 0; i < n; ++i) {
            pending[i] = g.children_[i].size();
            if (pending[i] == 0) {
                ready.push_back(i);
            }
        }
        while (!ready.empty()) {
            Index v = ready.front();
            ready.pop_front();
            for (Index p : g.parents_[v]) {
                g.height_[p] = std::max(g.height_[p], g.height_[v] + 1);
                if (--pending[p] == 0) {
                    ready.push_back(p);
                }
            }
        }
        return result;
    }
};

GraphBuild build_graph(const std::vector<ResearcherRecord>& records,
                       std::vector<SupervisionEdge> edges) {
    return GraphBuilder::build(records, std::move(edges));
}

std::set<std::string> descendants(const GenealogyGraph& graph, std::string_view id) {
    Index start = graph.index_of(id);
    std::vector<bool> seen(graph.size(), false);
    std::vector<Index> work{start};
    std::set<std::string> out;
    while (!work.empty()) {
        Index v = work.back();
        work.pop_back();
        for (Index c : graph.children(v)) {
            if (!seen[c]) {
                seen[c] = true;
                out.insert(graph.id_at(c));
                work.push_back(c);
            }
        }
    }
    return out;
}

std::vector<std::vector<std::string>> ancestors(const GenealogyGraph& graph, std::string_view id) {
    std::vector<std::vector<std::string>> generations;
    std::set<Index> frontier{graph.index_of(id)};
    for (;;) {
        std::set<Index> next;
        for (Index v : frontier) {
            next.insert(graph.parents(v).begin(), graph.parents(v).end());
        }
        if (next.empty()) {
            return generations;
        }
        auto& level = generations.emplace_back();
        for (Index p : next) {
            level.push_back(graph.id_at(p));
        }
        frontier = std::move(next);
    }
}

std::vector<std::string> deepest_path(const GenealogyGraph& graph, std::string_view id) {
    Index v = graph.index_of(id);
    std::vector<std::string> path{graph.id_at(v)};
    while (graph.height(v) > 0) {
        std::optional<Index> best;
        for (Index c : graph.children(v)) {
            if (graph.height(c) + 1 == graph.height(v) && (!best || c < *best)) {
                best = c;
            }
        }
        v = *best;
        path.push_back(graph.id_at(v));
    }
    return path;
}

TreeView subtree_view(const GenealogyGraph& graph, std::string_view id,
                      const std::set<std::string>& expanded, std::size_t depth) {
    Index root = graph.index_of(id);

    struct Visit {
        Index node;
        std::size_t distance;
    };
    std::vector<bool> visible(graph.size(), false);
    std::vector<bool> opened(graph.size(), false);
    std::vector<Index> order;
    std::deque<Visit> queue{{root, 0}};
    visible[root] = true;

    TreeView view;
    view.root_id = graph.id_at(root);
    while (!queue.empty()) {
        auto [v, distance] = queue.front();
        queue.pop_front();
        order.push_back(v);
        if (distance >= depth && !expanded.contains(graph.id_at(v))) {
            continue;
        }
        opened[v] = true;
        for (const auto& edge : graph.out_edges(v)) {
            view.edges.push_back({edge.supervisor_id, edge.supervisee_id, edge.level, edge.year});
            Index child = graph.index_of(edge.supervisee_id);
            if (!visible[child]) {
                visible[child] = true;
                queue.push_back({child, distance + 1});
            }
        }
    }

    for (const auto& requested : expanded) {
        auto it = std::lower_bound(graph.ids().begin(), graph.ids().end(), requested);
        if (it == graph.ids().end() || *it != requested ||
            !visible[static_cast<Index>(it - graph.ids().begin())]) {
            throw Error(ErrorCode::InvalidExpansion,
                        "cannot expand '" + requested + "': not part of the current view");
        }
    }

    for (Index v : order) {
        auto children = graph.children(v).size();
        view.nodes.push_back({graph.id_at(v), graph.node(v).name, children, !opened[v] && children > 0});
    }
    return view;
}

std::string to_dot(const TreeView& view) {
    std::string out = "digraph genealogy {\n  node [shape=box];\n";
    for (const auto& node : view.nodes) {
        out += "  \"" + dot_escape(node.id) + "\" [label=\"" + dot_escape(node.name) + "\"";
        if (node.id == view.root_id) {
            out += ", root=true";
        }
        out += "];\n";
    }
    for (const auto& edge : view.edges) {
        bool phd = edge.level == SupervisionLevel::PHD;
        out += "  \"" + dot_escape(edge.supervisor_id) + "\" -> \"" + dot_escape(edge.supervisee_id) +
               "\" [level=\"" + std::string(to_string(edge.level)) + "\", label=\"" +
               std::string(to_string(edge.level)) + " " + std::to_string(edge.year) +
               "\", color=\"" + (phd ? "blue" : "orange") + "\"];\n";
    }
    out += "}\n";
    return out;
}

} // namespace acadtree
