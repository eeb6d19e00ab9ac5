#include "mgd/error.hpp"

namespace mgd {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::CycleDetected: return "CycleDetected";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::OverlappingSets: return "OverlappingSets";
        case ErrorCode::InvalidMGraph: return "InvalidMGraph";
        case ErrorCode::MalformedCsv: return "MalformedCsv";
        case ErrorCode::UnknownState: return "UnknownState";
        case ErrorCode::HeaderMismatch: return "HeaderMismatch";
        case ErrorCode::NameCollision: return "NameCollision";
        case ErrorCode::IncompleteParameters: return "IncompleteParameters";
        case ErrorCode::DriverMissing: return "DriverMissing";
        case ErrorCode::UnknownVariable: return "UnknownVariable";
        case ErrorCode::AllMissingColumn: return "AllMissingColumn";
        case ErrorCode::EmptyDataset: return "EmptyDataset";
        case ErrorCode::BadFraction: return "BadFraction";
        case ErrorCode::MissingCellsPresent: return "MissingCellsPresent";
        case ErrorCode::SchemaMismatch: return "SchemaMismatch";
        case ErrorCode::TooManyMissingInRow: return "TooManyMissingInRow";
        case ErrorCode::EmptyList: return "EmptyList";
        case ErrorCode::AllZero: return "AllZero";
        case ErrorCode::KnowledgeViolatedByInput: return "KnowledgeViolatedByInput";
        case ErrorCode::KnowledgeInfeasible: return "KnowledgeInfeasible";
        case ErrorCode::Io: return "Io";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace mgd
