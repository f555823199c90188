#pragma once

#include <stdexcept>
#include <string>

namespace vtab {

enum class ErrorCode {
    InvalidArgument,
    InvalidPartition,
    InvalidTableau,
    DuplicateEntry,
    MissingEntry,
    InvalidArray,
    ShapeMismatch,
    NonRecoverable,
    Infeasible,
    Precondition,
    BoundExceeded,
    BudgetExceeded,
    Overflow,
    UnknownName,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures surface as this exception; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Limits for the exhaustive enumerators. They are inputs, not constants.
struct EnumerationLimits {
    int max_syt_size = 12;
    int max_vt_n = 12;
    int max_vt_k = 8;
};

} // namespace vtab
