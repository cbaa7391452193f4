#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace acadtree {

enum class ErrorCode {
    MalformedDocument,
    MissingRequiredField,
    InvalidYear,
    EmptyName,
    DuplicateId,
    EmptyCorpus,
    UnknownEndpoint,
    UnknownResearcher,
    InvalidExpansion,
    CorruptRepository,
    VersionMismatch,
    QueryTooShort,
    BadPagination,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (CLI exit status, HTTP envelope) can branch without parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace acadtree
