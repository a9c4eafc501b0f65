#include "modrep/error.hpp"

namespace modrep {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::MalformedPartition: return "MalformedPartition";
    case ErrorCode::NotWeaklyDecreasing: return "NotWeaklyDecreasing";
    case ErrorCode::NonPositivePart: return "NonPositivePart";
    case ErrorCode::OddPrimeRequired: return "OddPrimeRequired";
    case ErrorCode::EmptyPartition: return "EmptyPartition";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::PSingular: return "PSingular";
    case ErrorCode::ReconstructionFailure: return "ReconstructionFailure";
    case ErrorCode::SignOnNonFixed: return "SignOnNonFixed";
    case ErrorCode::SignMissing: return "SignMissing";
    case ErrorCode::MismatchedLabels: return "MismatchedLabels";
    case ErrorCode::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case ErrorCode::DimensionOneFactor: return "DimensionOneFactor";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::SweepTooLarge: return "SweepTooLarge";
    }
    return "Unknown";
}

} // namespace modrep
