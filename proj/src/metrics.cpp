#include <acadtree/metrics.hpp>

#include <algorithm>
#include <numeric>

namespace acadtree {

using Index = GenealogyGraph::Index;

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator <= 0 || numerator < 0) {
        throw std::invalid_argument("Rational expects numerator >= 0 and denominator > 0");
    }
    auto divisor = std::gcd(numerator, denominator);
    numerator_ = numerator / divisor;
    denominator_ = denominator / divisor;
}

std::string Rational::display() const {
    // round(10 * n / d) with halves away from zero, in integers.
    std::int64_t tenths = (20 * numerator_ + denominator_) / (2 * denominator_);
    return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

namespace {

std::vector<bool> reachable(const GenealogyGraph& graph, Index start) {
    std::vector<bool> seen(graph.size(), false);
    std::vector<Index> work{start};
    while (!work.empty()) {
        Index v = work.back();
        work.pop_back();
        for (Index c : graph.children(v)) {
            if (!seen[c]) {
                seen[c] = true;
                work.push_back(c);
            }
        }
    }
    return seen;
}

std::size_t count_reachable(const GenealogyGraph& graph, Index start) {
    auto seen = reachable(graph, start);
    return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
}

std::vector<Index> grandparents(const GenealogyGraph& graph, Index v) {
    std::vector<Index> out;
    for (Index p : graph.parents(v)) {
        out.insert(out.end(), graph.parents(p).begin(), graph.parents(p).end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

std::size_t width(const GenealogyGraph& graph, std::string_view id) {
    return graph.children(graph.index_of(id)).size();
}

std::size_t fertility(const GenealogyGraph& graph, std::string_view id) {
    auto children = graph.children(graph.index_of(id));
    return static_cast<std::size_t>(std::count_if(
        children.begin(), children.end(), [&](Index c) { return !graph.out_edges(c).empty(); }));
}

std::size_t depth(const GenealogyGraph& graph, std::string_view id) {
    return graph.height(graph.index_of(id));
}

std::size_t descendancy(const GenealogyGraph& graph, std::string_view id) {
    return count_reachable(graph, graph.index_of(id));
}

std::size_t genealogical_index(const GenealogyGraph& graph, std::string_view id) {
    std::vector<std::size_t> counts;
    for (Index c : graph.children(graph.index_of(id))) {
        counts.push_back(count_reachable(graph, c));
    }
    std::sort(counts.begin(), counts.end(), std::greater<>());
    std::size_t g = 0;
    while (g < counts.size() && counts[g] >= g + 1) {
        ++g;
    }
    return g;
}

std::size_t relationships(const GenealogyGraph& graph, std::string_view id) {
    Index start = graph.index_of(id);
    auto inside = reachable(graph, start);
    inside[start] = true;
    // Every out-edge of a member lands inside the descendancy.
    std::size_t total = 0;
    for (Index v = 0; v < graph.size(); ++v) {
        if (inside[v]) {
            total += graph.out_edges(v).size();
        }
    }
    return total;
}

std::size_t cousins(const GenealogyGraph& graph, std::string_view id) {
    Index self = graph.index_of(id);
    auto own_grandparents = grandparents(graph, self);
    if (own_grandparents.empty()) {
        return 0;
    }
    auto own_parents = graph.parents(self);

    // Candidates are exactly the grandchildren of our grandparents.
    std::vector<Index> candidates;
    for (Index gp : own_grandparents) {
        for (Index p : graph.children(gp)) {
            candidates.insert(candidates.end(), graph.children(p).begin(), graph.children(p).end());
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::size_t count = 0;
    for (Index c : candidates) {
        if (c == self) {
            continue;
        }
        auto theirs = graph.parents(c);
        bool shares_supervisor = std::any_of(theirs.begin(), theirs.end(), [&](Index p) {
            return std::binary_search(own_parents.begin(), own_parents.end(), p);
        });
        if (!shares_supervisor) {
            ++count;
        }
    }
    return count;
}

Rational average_per_year(std::size_t width, int first_year, int last_year) {
    if (width == 0) {
        return {};
    }
    auto span = std::max<std::int64_t>(1, static_cast<std::int64_t>(last_year) - first_year);
    return {static_cast<std::int64_t>(width), span};
}

YearlyCounts supervisions_by_year(const GenealogyGraph& graph, std::string_view id) {
    YearlyCounts counts;
    for (const auto& edge : graph.out_edges(graph.index_of(id))) {
        auto& slot = counts[edge.year];
        (edge.level == SupervisionLevel::MSC ? slot.msc : slot.phd) += 1;
    }
    return counts;
}

Rational avg_supervisions_per_year(const GenealogyGraph& graph, std::string_view id) {
    auto timeline = supervisions_by_year(graph, id);
    if (timeline.empty()) {
        return {};
    }
    return average_per_year(width(graph, id), timeline.begin()->first, timeline.rbegin()->first);
}

MetricsReport metrics_report(const GenealogyGraph& graph, std::string_view id) {
    MetricsReport report;
    report.researcher_id = graph.id_at(graph.index_of(id));
    report.width = width(graph, id);
    report.fecundity = report.width;
    report.fertility = fertility(graph, id);
    report.depth = depth(graph, id);
    report.descendancy = descendancy(graph, id);
    report.genealogical_index = genealogical_index(graph, id);
    report.relationships = relationships(graph, id);
    report.cousins = cousins(graph, id);
    report.timeline = supervisions_by_year(graph, id);
    if (!report.timeline.empty()) {
        report.first_supervision_year = report.timeline.begin()->first;
        report.last_supervision_year = report.timeline.rbegin()->first;
        report.avg_supervisions_per_year = average_per_year(
            report.width, *report.first_supervision_year, *report.last_supervision_year);
    }
    report.deepest_path = deepest_path(graph, id);
    return report;
}

} // namespace acadtree
