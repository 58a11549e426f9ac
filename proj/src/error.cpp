#include "patterna/error.hpp"

namespace patterna {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptyCondition: return "EmptyCondition";
    case ErrorCode::DuplicateCondition: return "DuplicateCondition";
    case ErrorCode::UnsupportedParams: return "UnsupportedParams";
    case ErrorCode::NotConsistencyPattern: return "NotConsistencyPattern";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::MalformedUnionMap: return "MalformedUnionMap";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::WitnessVerificationFailure: return "WitnessVerificationFailure";
    case ErrorCode::NotFullyComplete: return "NotFullyComplete";
    case ErrorCode::NotReasonablePositive: return "NotReasonablePositive";
    case ErrorCode::CharacterizationPropertyViolated: return "CharacterizationPropertyViolated";
    case ErrorCode::PreconditionFailure: return "PreconditionFailure";
    case ErrorCode::VerificationFailure: return "VerificationFailure";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::NotAnEmbedding: return "NotAnEmbedding";
    case ErrorCode::TriangleFound: return "TriangleFound";
    case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

}  // namespace patterna
