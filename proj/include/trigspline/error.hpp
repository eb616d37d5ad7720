#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trigspline {

/// Failure categories surfaced by the library. The names double as the
/// machine-readable codes printed by the command-line tool.
enum class ErrorCode {
    InvalidGrid,
    InvalidArgument,
    UnknownElement,
    IndexOutOfTable,
    DegenerateVariant,
    TruncationNotConverged,
    NoUsableNode,
    SolverFailure,
    NoAnalog,
    InputError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::IndexOutOfTable: return "IndexOutOfTable";
    case ErrorCode::DegenerateVariant: return "DegenerateVariant";
    case ErrorCode::TruncationNotConverged: return "TruncationNotConverged";
    case ErrorCode::NoUsableNode: return "NoUsableNode";
    case ErrorCode::SolverFailure: return "SolverFailure";
    case ErrorCode::NoAnalog: return "NoAnalog";
    case ErrorCode::InputError: return "InputError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace trigspline
