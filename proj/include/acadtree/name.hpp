#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace acadtree {

/// Matching key for a person's name: uppercase, diacritic-free,
/// single-spaced, given names first.
struct NormalizedName {
    std::string canonical;

    auto operator<=>(const NormalizedName&) const = default;
};

/// Case and diacritic folding without any reordering: decompose, drop
/// combining marks, uppercase, collapse whitespace runs, trim. Used for
/// free-text filters (institution, area) and as the first stage of
/// normalize_name.
std::string fold_text(std::string_view raw);

/// Folds, reorders "LAST, FIRST" to "FIRST LAST" when exactly one comma is
/// present, and strips periods. Throws Error{EmptyName} if nothing remains.
NormalizedName normalize_name(std::string_view raw);

/// Number of Unicode code points in a UTF-8 string.
std::size_t utf8_length(std::string_view text);

} // namespace acadtree
