#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace berge {

enum class ErrorCode {
    EdgeSizeError,
    DuplicateEdge,
    LinearityViolation,
    VertexOutOfRange,
    ParseError,
    IoError,
    InstanceTooLarge,
    InvalidCycle,
    VertexOnCycle,
    TripleTouchesCycle,
    BadSharingPattern,
    BadResidue,
    BadParity,
    CapExceeded,
    InvalidArgument,
    UsageError,
    SchemaError,
};

// Stable identifiers; these appear in CLI error output and JSON.
constexpr std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::EdgeSizeError: return "EdgeSizeError";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::LinearityViolation: return "LinearityViolation";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::InvalidCycle: return "InvalidCycle";
    case ErrorCode::VertexOnCycle: return "VertexOnCycle";
    case ErrorCode::TripleTouchesCycle: return "TripleTouchesCycle";
    case ErrorCode::BadSharingPattern: return "BadSharingPattern";
    case ErrorCode::BadResidue: return "BadResidue";
    case ErrorCode::BadParity: return "BadParity";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string & message) :
        std::runtime_error(std::string(to_string(code)) + ": " + message),
        _code(code)
    {
    }

    ErrorCode code() const noexcept { return _code; }

private:
    ErrorCode _code;
};

} // namespace berge
