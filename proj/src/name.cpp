#include <acadtree/name.hpp>

#include <acadtree/error.hpp>

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <algorithm>

namespace acadtree {

namespace {

const icu::Normalizer2& nfd() {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* normalizer = icu::Normalizer2::getNFDInstance(status);
    if (U_FAILURE(status) || normalizer == nullptr) {
        throw std::runtime_error("ICU NFD normalizer unavailable");
    }
    return *normalizer;
}

icu::UnicodeString strip_marks(const icu::UnicodeString& text) {
    UErrorCode status = U_ZERO_ERROR;
    icu::UnicodeString decomposed = nfd().normalize(text, status);
    if (U_FAILURE(status)) {
        throw std::runtime_error("ICU normalization failed");
    }
    icu::UnicodeString out;
    for (int32_t i = 0; i < decomposed.length();) {
        UChar32 c = decomposed.char32At(i);
        if (u_charType(c) != U_NON_SPACING_MARK) {
            out.append(c);
        }
        i += U16_LENGTH(c);
    }
    return out;
}

// Collapses any run of Unicode whitespace to one ASCII space and trims.
std::string collapse_spaces(const icu::UnicodeString& text) {
    icu::UnicodeString out;
    bool pending_space = false;
    for (int32_t i = 0; i < text.length();) {
        UChar32 c = text.char32At(i);
        i += U16_LENGTH(c);
        if (u_isUWhiteSpace(c) || c == 0x00A0) {
            pending_space = !out.isEmpty();
            continue;
        }
        if (pending_space) {
            out.append(static_cast<UChar>(' '));
            pending_space = false;
        }
        out.append(c);
    }
    std::string utf8;
    out.toUTF8String(utf8);
    return utf8;
}

} // namespace

std::string fold_text(std::string_view raw) {
    auto text = icu::UnicodeString::fromUTF8(
        icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
    text = strip_marks(text);
    text.toUpper(icu::Locale::getRoot());
    // Case mapping can emit decomposed sequences (e.g. U+01F0); fold again.
    text = strip_marks(text);
    return collapse_spaces(text);
}

NormalizedName normalize_name(std::string_view raw) {
    std::string folded = fold_text(raw);

    if (std::count(folded.begin(), folded.end(), ',') == 1) {
        auto comma = folded.find(',');
        std::string last = folded.substr(0, comma);
        std::string first = folded.substr(comma + 1);
        folded = first + " " + last;
    }
    folded.erase(std::remove(folded.begin(), folded.end(), '.'), folded.end());

    std::string canonical = collapse_spaces(icu::UnicodeString::fromUTF8(folded));
    if (canonical.empty()) {
        throw Error(ErrorCode::EmptyName,
                    "name '" + std::string(raw) + "' is empty after normalization");
    }
    return NormalizedName{std::move(canonical)};
}

std::size_t utf8_length(std::string_view text) {
    return static_cast<std::size_t>(std::count_if(text.begin(), text.end(), [](char c) {
        return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
    }));
}

} // namespace acadtree
