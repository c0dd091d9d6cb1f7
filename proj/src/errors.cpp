#include "congruent/errors.hpp"

namespace congruent {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NotUniqueRealRoot: return "NotUniqueRealRoot";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::NoRealRoot: return "NoRealRoot";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotOnCurve: return "NotOnCurve";
    case ErrorKind::CurveMismatch: return "CurveMismatch";
    case ErrorKind::InvalidIndex: return "InvalidIndex";
    case ErrorKind::NotRightTriangle: return "NotRightTriangle";
    case ErrorKind::WrongArea: return "WrongArea";
    case ErrorKind::NonPositiveSide: return "NonPositiveSide";
    case ErrorKind::TorsionInput: return "TorsionInput";
    case ErrorKind::NotCertified: return "NotCertified";
    case ErrorKind::IterationCap: return "IterationCap";
    case ErrorKind::IdentityViolated: return "IdentityViolated";
    case ErrorKind::ExceptionalTorsionPair: return "ExceptionalTorsionPair";
    case ErrorKind::DegenerateN4: return "DegenerateN4";
    case ErrorKind::CacheCorrupt: return "CacheCorrupt";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace congruent
