#include "cpmat/error.hpp"

namespace cpmat {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::InvalidPermutation: return "InvalidPermutation";
        case ErrorKind::DuplicateLastElement: return "DuplicateLastElement";
        case ErrorKind::ToeplitzOddDimension: return "ToeplitzOddDimension";
        case ErrorKind::InvalidQ: return "InvalidQ";
        case ErrorKind::NotPairwiseCoprime: return "NotPairwiseCoprime";
        case ErrorKind::NotSorted: return "NotSorted";
        case ErrorKind::InvalidMask: return "InvalidMask";
        case ErrorKind::InternalMismatch: return "InternalMismatch";
        case ErrorKind::EmptyList: return "EmptyList";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::MultipleSolutions: return "MultipleSolutions";
        case ErrorKind::NotInFpd: return "NotInFpd";
        case ErrorKind::ZeroMatrix: return "ZeroMatrix";
        case ErrorKind::AmbiguousPeak: return "AmbiguousPeak";
        case ErrorKind::PeakBelowThreshold: return "PeakBelowThreshold";
        case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace cpmat
