#pragma once

#include <stdexcept>
#include <string>

namespace homlie {

// Base class for every error the kernel raises on bad input or failed
// preconditions.  Catching homlie::Error is enough for the CLI.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct DenominatorVanishes : Error {
    explicit DenominatorVanishes(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    ParseError(const std::string& what, int line = 0, int column = 0)
        : Error(what), line(line), column(column) {}
    int line;
    int column;
};

// Raised when a value fails its construction-time axiom checks.  The
// offending report is rendered into the message by the caller.
struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

struct NotAMorphism : Error {
    explicit NotAMorphism(const std::string& what) : Error(what) {}
};

struct NotAnRMatrix : Error {
    explicit NotAnRMatrix(const std::string& what) : Error(what) {}
};

struct NotAlphaCommuting : Error {
    explicit NotAlphaCommuting(const std::string& what) : Error(what) {}
};

struct NotABialgebraMorphism : Error {
    explicit NotABialgebraMorphism(const std::string& what) : Error(what) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& what) : Error(what) {}
};

struct NotAlphaFixed : Error {
    explicit NotAlphaFixed(const std::string& what) : Error(what) {}
};

struct NotAntiSymmetric : Error {
    explicit NotAntiSymmetric(const std::string& what) : Error(what) {}
};

struct NotACochain : Error {
    explicit NotACochain(const std::string& what) : Error(what) {}
};

struct RNotFixed : Error {
    explicit RNotFixed(const std::string& what) : Error(what) {}
};

struct ConstraintViolation : Error {
    explicit ConstraintViolation(const std::string& what) : Error(what) {}
};

// Obstruction errors carry the basis element at which the hypothesis fails
// plus a rendering of the nonzero residual, for CLI witnesses.
struct Obstruction : Error {
    Obstruction(const std::string& what, std::string basis_label,
                std::string residual)
        : Error(what + " at " + basis_label + ": " + residual),
          basis_label(std::move(basis_label)),
          residual(std::move(residual)) {}
    std::string basis_label;
    std::string residual;
};

struct CoboundObstruction : Obstruction {
    using Obstruction::Obstruction;
};

struct PerturbObstruction : Obstruction {
    using Obstruction::Obstruction;
};

struct MixedChybeObstruction : Obstruction {
    using Obstruction::Obstruction;
};

}  // namespace homlie
