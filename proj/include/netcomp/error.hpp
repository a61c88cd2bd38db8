#ifndef NETCOMP_ERROR_HPP
#define NETCOMP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace netcomp {

// Every failure the library reports. The names are the machine-readable
// identifiers printed by the CLI.
enum class ErrorCode {
    SelfLoop,
    DuplicateEdge,
    NodeOutOfRange,
    DisconnectedGraph,
    EdgeNotFound,
    EdgeAlreadyExists,
    NoDistanceChange,
    InvalidSpec,
    ConnectivityRetriesExhausted,
    InvalidConfig,
    GraphTooSmall,
    NoRemovalCandidate,
    EmptyAdmissibleSet,
    EmptyCandidates,
    MissingAttributes,
    DuplicateClosingEdge,
    DegenerateFit,
    ParseError,
    MissingDataset,
    IoError,
};

constexpr std::string_view error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::NodeOutOfRange: return "NodeOutOfRange";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::EdgeNotFound: return "EdgeNotFound";
    case ErrorCode::EdgeAlreadyExists: return "EdgeAlreadyExists";
    case ErrorCode::NoDistanceChange: return "NoDistanceChange";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ConnectivityRetriesExhausted: return "ConnectivityRetriesExhausted";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::GraphTooSmall: return "GraphTooSmall";
    case ErrorCode::NoRemovalCandidate: return "NoRemovalCandidate";
    case ErrorCode::EmptyAdmissibleSet: return "EmptyAdmissibleSet";
    case ErrorCode::EmptyCandidates: return "EmptyCandidates";
    case ErrorCode::MissingAttributes: return "MissingAttributes";
    case ErrorCode::DuplicateClosingEdge: return "DuplicateClosingEdge";
    case ErrorCode::DegenerateFit: return "DegenerateFit";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MissingDataset: return "MissingDataset";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }

private:
    ErrorCode code_;
};

}  // namespace netcomp

#endif  // NETCOMP_ERROR_HPP
