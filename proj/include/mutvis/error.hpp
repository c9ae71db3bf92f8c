#pragma once

#include <stdexcept>
#include <string>

namespace mutvis {

enum class ErrorCode {
    DegenerateInput,
    NotSimple,
    TooFewVertices,
    ZeroArea,
    EndpointOutside,
    PointOutside,
    OverlappingSegments,
    CrossingInstance,
    NotCrossing,
    NoIntersection,
    TimeOutOfRange,
    CountMismatch,
    InvalidEps,
    InvalidInstance,
    ParseError,
    GenerationFailed,
    Internal,
};

/// Library-wide exception carrying a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::ZeroArea: return "ZeroArea";
    case ErrorCode::EndpointOutside: return "EndpointOutside";
    case ErrorCode::PointOutside: return "PointOutside";
    case ErrorCode::OverlappingSegments: return "OverlappingSegments";
    case ErrorCode::CrossingInstance: return "CrossingInstance";
    case ErrorCode::NotCrossing: return "NotCrossing";
    case ErrorCode::NoIntersection: return "NoIntersection";
    case ErrorCode::TimeOutOfRange: return "TimeOutOfRange";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::InvalidEps: return "InvalidEps";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace mutvis
