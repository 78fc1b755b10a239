#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace autkum {

enum class Errc {
    ZeroInverse,
    FieldMismatch,
    InvalidPrime,
    TooLarge,
    DivisionByZero,
    NotLaurent,
    ParseError,
    NotOnCurve,
    SingularCurve,
    NotFinite,
    InternalError,
    ConfigMismatch,
    LatticeParityError,
    UnsupportedSurface,
    InvalidDivisor,
    NotAFiber,
    NoSuchPoint,
    NotUnique,
    InvalidMap,
    UnknownGenerator,
    IdentityMap,
    UnverifiedFibration,
    UnknownAction,
    EmptyInput,
    InvalidArgument,
};

inline std::string_view errc_name(Errc e) noexcept
{
    switch (e) {
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::InvalidPrime: return "InvalidPrime";
    case Errc::TooLarge: return "TooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotLaurent: return "NotLaurent";
    case Errc::ParseError: return "ParseError";
    case Errc::NotOnCurve: return "NotOnCurve";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::NotFinite: return "NotFinite";
    case Errc::InternalError: return "InternalError";
    case Errc::ConfigMismatch: return "ConfigMismatch";
    case Errc::LatticeParityError: return "LatticeParityError";
    case Errc::UnsupportedSurface: return "UnsupportedSurface";
    case Errc::InvalidDivisor: return "InvalidDivisor";
    case Errc::NotAFiber: return "NotAFiber";
    case Errc::NoSuchPoint: return "NoSuchPoint";
    case Errc::NotUnique: return "NotUnique";
    case Errc::InvalidMap: return "InvalidMap";
    case Errc::UnknownGenerator: return "UnknownGenerator";
    case Errc::IdentityMap: return "IdentityMap";
    case Errc::UnverifiedFibration: return "UnverifiedFibration";
    case Errc::UnknownAction: return "UnknownAction";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the `Errc` kinds.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace autkum
