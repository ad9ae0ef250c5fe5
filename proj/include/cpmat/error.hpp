#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cpmat {

enum class ErrorKind {
    NonSquare,
    Singular,
    DimensionMismatch,
    InvalidPermutation,
    DuplicateLastElement,
    ToeplitzOddDimension,
    InvalidQ,
    NotPairwiseCoprime,
    NotSorted,
    InvalidMask,
    InternalMismatch,
    EmptyList,
    NotCoprime,
    MultipleSolutions,
    NotInFpd,
    ZeroMatrix,
    AmbiguousPeak,
    PeakBelowThreshold,
    UnsupportedDimension,
    ParseError,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace cpmat
