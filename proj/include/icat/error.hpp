#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace icat {

// Error kinds double as the names reported by the CLI.
enum class ErrorKind {
    ShapeMismatch,
    FieldMismatch,
    NoFactorization,
    NotInvertible,
    ComonoidMismatch,
    NotComonoidMap,
    DomainMismatch,
    GodementMismatch,
    IdentityMismatch,
    NotPhiImage,
    NotBiNatural,
    NotTAlgebra,
    NotIsomorphism,
    NotCentral,
    NotConvolutionInvertible,
    NotGalois,
    NotGrouplike,
    LawViolation,
    Mismatch,
    ParseError,
    UnresolvedReference,
    BadScalar,
    DivisionByZero,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace icat
