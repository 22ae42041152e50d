#pragma once

#include <stdexcept>
#include <string>

namespace symsemi {

/// Base class of every error raised by the engine. `kind()` is the stable
/// machine-readable name used in reports and by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)), message_(what) {}

    [[nodiscard]] const std::string& kind() const noexcept { return kind_; }
    /// The text without the kind prefix.
    [[nodiscard]] const std::string& message() const noexcept { return message_; }

private:
    std::string kind_;
    std::string message_;
};

#define SYMSEMI_DEFINE_ERROR(Name)                                    \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& what) : Error(#Name, what) {} \
    };

SYMSEMI_DEFINE_ERROR(ParseError)
SYMSEMI_DEFINE_ERROR(ShapeMismatch)
SYMSEMI_DEFINE_ERROR(NotSkewSymmetric)
SYMSEMI_DEFINE_ERROR(NotAComplex)
SYMSEMI_DEFINE_ERROR(ChainMapViolation)
SYMSEMI_DEFINE_ERROR(JacobiViolation)
SYMSEMI_DEFINE_ERROR(NotClosed)
SYMSEMI_DEFINE_ERROR(UnknownName)
SYMSEMI_DEFINE_ERROR(DimensionMismatch)
SYMSEMI_DEFINE_ERROR(BadDimension)
SYMSEMI_DEFINE_ERROR(NotUnit)
SYMSEMI_DEFINE_ERROR(Singular)
SYMSEMI_DEFINE_ERROR(NoRationalRoot)
SYMSEMI_DEFINE_ERROR(TruncationTooSmall)
SYMSEMI_DEFINE_ERROR(OddDimension)
SYMSEMI_DEFINE_ERROR(MissingSigns)
SYMSEMI_DEFINE_ERROR(Degenerate)

#undef SYMSEMI_DEFINE_ERROR

} // namespace symsemi
