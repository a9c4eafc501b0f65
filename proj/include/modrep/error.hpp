#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace modrep {

enum class ErrorCode {
    MalformedPartition,
    NotWeaklyDecreasing,
    NonPositivePart,
    OddPrimeRequired,
    EmptyPartition,
    NegativeExponent,
    PSingular,
    ReconstructionFailure,
    SignOnNonFixed,
    SignMissing,
    MismatchedLabels,
    UnsupportedCharacteristic,
    DimensionOneFactor,
    InternalInconsistency,
    SweepTooLarge,
};

std::string_view to_string(ErrorCode code);

// Every precondition violation in the library surfaces as this exception.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace modrep
