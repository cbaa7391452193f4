#pragma once

// Brute-force reference implementations. They work on the raw edge list
// with dense matrices and exhaustive enumeration, sharing no code with the
// library's traversal paths.

#include "test_graphs.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace acadtree::testing {

struct OracleGraph {
    std::vector<std::string> ids; // sorted, unique
    std::vector<EdgeSpec> edges;

    std::size_t index(const std::string& id) const {
        return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    }
};

using BoolMatrix = std::vector<std::vector<bool>>;

inline BoolMatrix adjacency_matrix(const OracleGraph& g) {
    BoolMatrix m(g.ids.size(), std::vector<bool>(g.ids.size(), false));
    for (const auto& e : g.edges) {
        m[g.index(e.from)][g.index(e.to)] = true;
    }
    return m;
}

/// Floyd-Warshall transitive closure (paths of length >= 1).
inline BoolMatrix closure_matrix(const OracleGraph& g) {
    auto reach = adjacency_matrix(g);
    const auto n = g.ids.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = true;
    return reach;
}

inline std::set<std::string> oracle_descendants(const OracleGraph& g, const BoolMatrix& closure,
                                                const std::string& id) {
    std::set<std::string> out;
    auto i = g.index(id);
    for (std::size_t j = 0; j < g.ids.size(); ++j) {
        if (closure[i][j]) out.insert(g.ids[j]);
    }
    return out;
}

/// generations via boolean matrix powers: gen k = { a : A^k[a][id] }.
inline std::vector<std::vector<std::string>> oracle_ancestors(const OracleGraph& g, const std::string& id) {
    const auto n = g.ids.size();
    auto a = adjacency_matrix(g);
    auto power = a;
    std::vector<std::vector<std::string>> generations;
    auto target = g.index(id);
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::string> level;
        for (std::size_t s = 0; s < n; ++s)
            if (power[s][target]) level.push_back(g.ids[s]);
        if (level.empty()) break;
        generations.push_back(level);
        BoolMatrix next(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t m = 0; m < n; ++m)
                if (power[i][m])
                    for (std::size_t j = 0; j < n; ++j)
                        if (a[m][j]) next[i][j] = true;
        power = std::move(next);
    }
    return generations;
}

/// Enumerates every maximal path from id and keeps the longest, ties
/// broken by lexicographic id sequence.
inline std::vector<std::string> oracle_deepest_path(const OracleGraph& g, const std::string& id) {
    std::map<std::string, std::set<std::string>> successors;
    for (const auto& e : g.edges) {
        successors[e.from].insert(e.to);
    }
    std::vector<std::string> best;
    std::vector<std::string> current{id};
    auto visit = [&](auto&& self, const std::string& at) -> void {
        bool extended = false;
        for (const auto& next : successors[at]) {
            extended = true;
            current.push_back(next);
            self(self, next);
            current.pop_back();
        }
        if (!extended && (current.size() > best.size() || (current.size() == best.size() && current < best))) {
            best = current;
        }
    };
    visit(visit, id);
    return best;
}

inline std::set<std::string> in_neighbors(const OracleGraph& g, const std::string& id) {
    std::set<std::string> out;
    for (const auto& e : g.edges)
        if (e.to == id) out.insert(e.from);
    return out;
}

inline std::set<std::string> out_neighbors(const OracleGraph& g, const std::string& id) {
    std::set<std::string> out;
    for (const auto& e : g.edges)
        if (e.from == id) out.insert(e.to);
    return out;
}

struct OracleMetrics {
    std::size_t width = 0;
    std::size_t fertility = 0;
    std::size_t depth = 0;
    std::size_t descendancy = 0;
    std::size_t genealogical_index = 0;
    std::size_t relationships = 0;
    std::size_t cousins = 0;
    std::map<int, std::pair<std::size_t, std::size_t>> timeline; // year -> (msc, phd)
    std::size_t out_degree = 0;
};

inline OracleMetrics oracle_metrics(const OracleGraph& g, const BoolMatrix& closure, const std::string& id) {
    OracleMetrics m;
    auto children = out_neighbors(g, id);
    m.width = children.size();
    for (const auto& c : children)
        if (!out_neighbors(g, c).empty()) ++m.fertility;

    m.depth = oracle_deepest_path(g, id).size() - 1;
    auto desc = oracle_descendants(g, closure, id);
    m.descendancy = desc.size();

    // Direct h-index scan: try every g from width down to 0.
    for (std::size_t candidate = m.width; candidate > 0; --candidate) {
        std::size_t qualifying = 0;
        for (const auto& c : children)
            if (oracle_descendants(g, closure, c).size() >= candidate) ++qualifying;
        if (qualifying >= candidate) {
            m.genealogical_index = candidate;
            break;
        }
    }

    for (const auto& e : g.edges) {
        bool supervisor_inside = e.from == id || desc.contains(e.from);
        if (supervisor_inside && desc.contains(e.to)) ++m.relationships;
        if (e.from == id) {
            ++m.out_degree;
            auto& slot = m.timeline[e.year];
            (e.level == SupervisionLevel::MSC ? slot.first : slot.second) += 1;
        }
    }

    auto grandparents_of = [&](const std::string& x) {
        std::set<std::string> out;
        for (const auto& p : in_neighbors(g, x)) {
            auto gp = in_neighbors(g, p);
            out.insert(gp.begin(), gp.end());
        }
        return out;
    };
    auto own_gp = grandparents_of(id);
    auto own_parents = in_neighbors(g, id);
    for (const auto& c : g.ids) {
        if (c == id) continue;
        auto gp = grandparents_of(c);
        auto parents = in_neighbors(g, c);
        bool share_gp = std::any_of(gp.begin(), gp.end(), [&](const auto& x) { return own_gp.contains(x); });
        bool share_parent =
            std::any_of(parents.begin(), parents.end(), [&](const auto& x) { return own_parents.contains(x); });
        if (share_gp && !share_parent) ++m.cousins;
    }
    return m;
}

/// Seeded random DAG with at most `max_nodes` nodes. Ids are "r<k>" so
/// lexicographic and numeric order differ. Some pairs get both an MSC and
/// a PHD edge.
inline OracleGraph random_dag(std::mt19937_64& rng, std::size_t max_nodes = 40) {
    std::uniform_int_distribution<std::size_t> size_dist(1, max_nodes);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> year_dist(1950, 2020);

    const auto n = size_dist(rng);
    const double density = 0.02 + 0.28 * unit(rng);

    std::vector<std::string> order;
    for (std::size_t k = 0; k < n; ++k) order.push_back("r" + std::to_string(k));
    std::shuffle(order.begin(), order.end(), rng);

    OracleGraph g;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (unit(rng) >= density) continue;
            auto level = unit(rng) < 0.3 ? SupervisionLevel::MSC : SupervisionLevel::PHD;
            g.edges.push_back({order[i], order[j], level, year_dist(rng)});
            if (unit(rng) < 0.1) {
                auto other = level == SupervisionLevel::MSC ? SupervisionLevel::PHD : SupervisionLevel::MSC;
                g.edges.push_back({order[i], order[j], other, year_dist(rng)});
            }
        }
    }
    g.ids = order;
    std::sort(g.ids.begin(), g.ids.end());
    return g;
}

inline GenealogyGraph graph_from(const OracleGraph& g) {
    auto build = make_build(g.edges, g.ids);
    return std::move(build.graph);
}

} // namespace acadtree::testing
