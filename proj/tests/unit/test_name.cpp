#include <acadtree/error.hpp>
#include <acadtree/name.hpp>

#include <gtest/gtest.h>

#include <random>

namespace acadtree {
namespace {

TEST(NormalizeName, FixedPoint) {
    EXPECT_EQ(normalize_name("CRODOWALDO PAVAN").canonical, "CRODOWALDO PAVAN");
}

TEST(NormalizeName, ReordersLastCommaFirst) {
    EXPECT_EQ(normalize_name("Pavan, Crodowaldo").canonical, "CRODOWALDO PAVAN");
}

TEST(NormalizeName, StripsDiacriticsAndCollapsesSpaces) {
    EXPECT_EQ(normalize_name("José  da Silva").canonical, "JOSE DA SILVA");
}

TEST(NormalizeName, StripsPeriodsAfterReordering) {
    EXPECT_EQ(normalize_name("PAVAN, C.").canonical, "C PAVAN");
    EXPECT_EQ(normalize_name("A. Dreyfus").canonical, "A DREYFUS");
}

TEST(NormalizeName, DecomposedInputMatchesPrecomposed) {
    // "José" (combining acute) vs "José"
    EXPECT_EQ(normalize_name("Jose\xCC\x81").canonical, normalize_name("Jos\xC3\xA9").canonical);
}

TEST(NormalizeName, TrimsAndCollapsesUnicodeWhitespace) {
    EXPECT_EQ(normalize_name("\t  maría\xC2\xA0\xC3\xA7" "aldas \n").canonical, "MARIA CALDAS");
}

TEST(NormalizeName, MultipleCommasAreNotReordered) {
    EXPECT_EQ(normalize_name("Silva, José, Jr.").canonical, "SILVA, JOSE, JR");
}

TEST(NormalizeName, EmptyResultThrows) {
    for (const char* raw : {"", "   ", " . ", ",", "..."}) {
        try {
            normalize_name(raw);
            FAIL() << "expected EmptyName for '" << raw << "'";
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::EmptyName);
        }
    }
}

TEST(FoldText, KeepsCommasAndOrder) {
    EXPECT_EQ(fold_text("  São Paulo,  USP "), "SAO PAULO, USP");
}

TEST(Utf8Length, CountsCodePoints) {
    EXPECT_EQ(utf8_length("Jos\xC3\xA9"), 4u);
    EXPECT_EQ(utf8_length(""), 0u);
}

// Random strings over letters, accented letters, combining marks, spaces,
// commas and periods.
std::string random_name(std::mt19937_64& rng) {
    static const std::vector<std::string> alphabet = {
        "a", "B", "z", "\xC3\xA9", "\xC3\x87", "\xC3\xB1", "\xC3\x9F", "\xC7\xB0", "\xC5\x82",
        "\xCC\x81", "\xCC\xA7", " ", "  ", "\t", ",", ".", "-", "'", "\xC2\xA0", "\xCE\xA3", "\xCF\x82"};
    std::uniform_int_distribution<std::size_t> len(0, 24), pick(0, alphabet.size() - 1);
    std::string out;
    for (auto n = len(rng); n > 0; --n) out += alphabet[pick(rng)];
    return out;
}

TEST(NormalizeNameProperty, IdempotentAndWellSpaced) {
    std::mt19937_64 rng(20240611);
    int checked = 0;
    for (int i = 0; i < 3000; ++i) {
        auto raw = random_name(rng);
        NormalizedName once;
        try {
            once = normalize_name(raw);
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::EmptyName);
            continue;
        }
        ++checked;
        EXPECT_EQ(normalize_name(once.canonical), once) << "raw: " << raw;
        EXPECT_EQ(normalize_name(raw), once);
        const auto& c = once.canonical;
        EXPECT_NE(c.front(), ' ');
        EXPECT_NE(c.back(), ' ');
        EXPECT_EQ(c.find("  "), std::string::npos);
        EXPECT_EQ(c.find('.'), std::string::npos);
    }
    EXPECT_GT(checked, 2000);
}

} // namespace
} // namespace acadtree
