#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace congruent {

// Every mathematical refusal the library can raise. The CLI maps these to
// exit code 1 and prints the kind name verbatim.
enum class ErrorKind {
    DivisionByZero,
    ZeroInput,
    NotUniqueRealRoot,
    Reducible,
    NoRealRoot,
    FieldMismatch,
    NotOnCurve,
    CurveMismatch,
    InvalidIndex,
    NotRightTriangle,
    WrongArea,
    NonPositiveSide,
    TorsionInput,
    NotCertified,
    IterationCap,
    IdentityViolated,
    ExceptionalTorsionPair,
    DegenerateN4,
    CacheCorrupt,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class MathError : public std::runtime_error {
public:
    MathError(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace congruent
