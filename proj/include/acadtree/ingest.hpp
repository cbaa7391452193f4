#pragma once

#include <acadtree/error.hpp>
#include <acadtree/name.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace acadtree {

enum class DegreeLevel { MSC, PHD, OTHER };

/// Levels a supervision relation can carry. OTHER degrees never produce one.
enum class SupervisionLevel { MSC, PHD };

std::string_view to_string(DegreeLevel level);
std::string_view to_string(SupervisionLevel level);
std::optional<DegreeLevel> parse_degree_level(std::string_view text);
std::optional<SupervisionLevel> parse_supervision_level(std::string_view text);

struct DegreeEntry {
    DegreeLevel level = DegreeLevel::OTHER;
    int year = 0;
    std::optional<std::string> thesis_title;
    std::string supervisor_name; // empty: no supervisee-declared claim
    std::optional<std::string> institution;
    std::vector<std::string> areas;

    bool operator==(const DegreeEntry&) const = default;
};

struct SupervisionEntry {
    SupervisionLevel level = SupervisionLevel::PHD;
    int year = 0;
    std::string supervisee_name;

    bool operator==(const SupervisionEntry&) const = default;
};

struct ResearcherRecord {
    std::string id;
    std::string full_name;
    std::vector<std::string> citation_names;
    std::optional<std::string> institution;
    std::vector<std::string> areas;
    std::vector<DegreeEntry> degrees;
    std::vector<SupervisionEntry> supervisions_given;
    std::optional<std::string> resume;

    bool operator==(const ResearcherRecord&) const = default;
};

enum class DocumentFormat { XML, JSONL };

/// Inclusive year bounds accepted at parse time: [1900, current year + 1].
inline constexpr int kMinYear = 1900;
int max_accepted_year();

/// Parses one curriculum (an XML document, or one JSON-lines row).
/// Throws Error with MalformedDocument, MissingRequiredField or InvalidYear.
ResearcherRecord parse_curriculum(std::string_view document, DocumentFormat format);

/// Serializers emitting the same schema parse_curriculum reads. The JSON
/// form is a single line without a trailing newline.
std::string to_xml(const ResearcherRecord& record);
std::string to_jsonl(const ResearcherRecord& record);

struct LoadFailure {
    std::string source; // path relative to the corpus root, with ":line" for JSONL rows
    ErrorCode code;
    std::string message;

    bool operator==(const LoadFailure&) const = default;
};

struct LoadReport {
    std::size_t documents_seen = 0;
    std::vector<LoadFailure> failures;

    bool operator==(const LoadReport&) const = default;
};

struct Corpus {
    std::vector<ResearcherRecord> records; // sorted by id, ids unique
    LoadReport report;

    const ResearcherRecord* find(std::string_view id) const;
};

/// Loads every *.xml (one record per file) and *.jsonl (one record per
/// line) file under `path`, which may also name a single such file.
/// Per-document failures land in the report; DuplicateId and EmptyCorpus
/// abort the load.
Corpus load_corpus(const std::filesystem::path& path);

/// Loads JSON-lines rows from a stream; `source` labels report entries.
Corpus load_corpus(std::istream& in, std::string_view source);

} // namespace acadtree
