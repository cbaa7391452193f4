#include <acadtree/error.hpp>

namespace acadtree {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedDocument: return "MalformedDocument";
        case ErrorCode::MissingRequiredField: return "MissingRequiredField";
        case ErrorCode::InvalidYear: return "InvalidYear";
        case ErrorCode::EmptyName: return "EmptyName";
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::EmptyCorpus: return "EmptyCorpus";
        case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
        case ErrorCode::UnknownResearcher: return "UnknownResearcher";
        case ErrorCode::InvalidExpansion: return "InvalidExpansion";
        case ErrorCode::CorruptRepository: return "CorruptRepository";
        case ErrorCode::VersionMismatch: return "VersionMismatch";
        case ErrorCode::QueryTooShort: return "QueryTooShort";
        case ErrorCode::BadPagination: return "BadPagination";
    }
    return "Unknown";
}

} // namespace acadtree
