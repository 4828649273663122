#pragma once

#include <stdexcept>
#include <string>

namespace hopfcyc {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Matrix/operator shapes or field tags do not line up.
struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& msg) : Error(msg) {}
};

/// A matrix that must be invertible is singular (non-bijective antipode,
/// non-invertible cyclic operator, ...).
struct Singular : Error {
    explicit Singular(const std::string& msg) : Error(msg) {}
};

/// Input multiplication table is not a group.
struct NotAGroup : Error {
    explicit NotAGroup(const std::string& msg) : Error(msg) {}
};

/// delta(sigma) != 1.
struct NotModularPair : Error {
    explicit NotModularPair(const std::string& msg) : Error(msg) {}
};

/// A construction requiring a modular pair in involution got one that is not.
struct NotInInvolution : Error {
    explicit NotInInvolution(const std::string& msg) : Error(msg) {}
};

/// Coefficient data fails the stable anti-Yetter-Drinfeld checks.
struct SAYDViolation : Error {
    explicit SAYDViolation(const std::string& msg) : Error(msg) {}
};

/// An operator does not restrict to the designated subspace.
struct NotPreserved : Error {
    explicit NotPreserved(const std::string& msg) : Error(msg) {}
};

/// An operator does not descend to the designated quotient.
struct NotWellDefined : Error {
    explicit NotWellDefined(const std::string& msg) : Error(msg) {}
};

/// A pair of identification maps fails to be mutually inverse.
struct IdentificationFailure : Error {
    explicit IdentificationFailure(const std::string& msg) : Error(msg) {}
};

/// Printed operator formulas disagree with the duality functor output.
struct MismatchWithHatDual : Error {
    explicit MismatchWithHatDual(const std::string& msg) : Error(msg) {}
};

/// An induced map claimed invertible by a theorem is not.
struct NotInvertible : Error {
    explicit NotInvertible(const std::string& msg) : Error(msg) {}
};

/// A differential fails d o d = 0.
struct NotAComplex : Error {
    explicit NotAComplex(const std::string& msg) : Error(msg) {}
};

/// Cyclic homology requested for a module whose cyclic operator has
/// infinite order (merely paracyclic input).
struct NotCyclic : Error {
    explicit NotCyclic(const std::string& msg) : Error(msg) {}
};

/// Contracting-homotopy data fails its normalization (phi(1) != 1, eps(c) != 1).
struct NormalizationError : Error {
    explicit NormalizationError(const std::string& msg) : Error(msg) {}
};

/// Malformed input files / strings.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace hopfcyc
