#pragma once

#include <acadtree/graph.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace acadtree {

/// Exact non-negative fraction kept in lowest terms.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t numerator, std::int64_t denominator);

    std::int64_t numerator() const { return numerator_; }
    std::int64_t denominator() const { return denominator_; }
    double value() const { return static_cast<double>(numerator_) / static_cast<double>(denominator_); }

    /// One decimal place, halves rounded away from zero ("0.3" for 11/38).
    std::string display() const;

    bool operator==(const Rational&) const = default;

private:
    std::int64_t numerator_ = 0;
    std::int64_t denominator_ = 1;
};

struct LevelCounts {
    std::size_t msc = 0;
    std::size_t phd = 0;

    std::size_t total() const { return msc + phd; }
    bool operator==(const LevelCounts&) const = default;
};

/// Concluded supervisions per calendar year, split by level.
using YearlyCounts = std::map<int, LevelCounts>;

struct MetricsReport {
    std::string researcher_id;
    std::size_t width = 0;
    std::size_t fecundity = 0;
    std::size_t fertility = 0;
    std::size_t depth = 0;
    std::size_t descendancy = 0;
    std::size_t genealogical_index = 0;
    std::size_t relationships = 0;
    std::size_t cousins = 0;
    Rational avg_supervisions_per_year;
    std::optional<int> first_supervision_year;
    std::optional<int> last_supervision_year;
    std::vector<std::string> deepest_path;
    YearlyCounts timeline;

    bool operator==(const MetricsReport&) const = default;
};

/// Distinct direct supervisees.
std::size_t width(const GenealogyGraph& graph, std::string_view id);
inline std::size_t fecundity(const GenealogyGraph& graph, std::string_view id) { return width(graph, id); }

/// Direct supervisees who supervised someone themselves.
std::size_t fertility(const GenealogyGraph& graph, std::string_view id);

/// Edges on the longest supervision chain starting at id.
std::size_t depth(const GenealogyGraph& graph, std::string_view id);
inline std::size_t generations(const GenealogyGraph& graph, std::string_view id) { return depth(graph, id); }

std::size_t descendancy(const GenealogyGraph& graph, std::string_view id);

/// Largest g such that g direct supervisees each have descendancy >= g.
std::size_t genealogical_index(const GenealogyGraph& graph, std::string_view id);

/// Supervision edges inside the descendancy, own out-edges included.
std::size_t relationships(const GenealogyGraph& graph, std::string_view id);

/// Researchers sharing a grandparent with id but none of its supervisors.
std::size_t cousins(const GenealogyGraph& graph, std::string_view id);

/// width / max(1, last - first); zero when there are no supervisions.
Rational average_per_year(std::size_t width, int first_year, int last_year);
Rational avg_supervisions_per_year(const GenealogyGraph& graph, std::string_view id);

YearlyCounts supervisions_by_year(const GenealogyGraph& graph, std::string_view id);

MetricsReport metrics_report(const GenealogyGraph& graph, std::string_view id);

} // namespace acadtree
