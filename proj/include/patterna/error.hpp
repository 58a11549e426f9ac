#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace patterna {

enum class ErrorCode {
    IndexOutOfRange,
    EmptyCondition,
    DuplicateCondition,
    UnsupportedParams,
    NotConsistencyPattern,
    ArityMismatch,
    MalformedUnionMap,
    BoundExceeded,
    ParseError,
    WitnessVerificationFailure,
    NotFullyComplete,
    NotReasonablePositive,
    CharacterizationPropertyViolated,
    PreconditionFailure,
    VerificationFailure,
    AxiomViolation,
    NotAnEmbedding,
    TriangleFound,
    InvalidInput,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace patterna
