#ifndef MGD_ERROR_HPP
#define MGD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mgd {

enum class ErrorCode {
    InvalidArgument,
    CycleDetected,
    UnknownVertex,
    DuplicateEdge,
    OverlappingSets,
    InvalidMGraph,
    MalformedCsv,
    UnknownState,
    HeaderMismatch,
    NameCollision,
    IncompleteParameters,
    DriverMissing,
    UnknownVariable,
    AllMissingColumn,
    EmptyDataset,
    BadFraction,
    MissingCellsPresent,
    SchemaMismatch,
    TooManyMissingInRow,
    EmptyList,
    AllZero,
    KnowledgeViolatedByInput,
    KnowledgeInfeasible,
    Io,
    Parse,
};

const char* to_string(ErrorCode code);

// All library failures are reported through this exception; `code()` carries
// the machine-readable kind and `what()` a human-readable diagnostic.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace mgd

#endif  // MGD_ERROR_HPP
