#pragma once

#include <stdexcept>
#include <string>

namespace alphacalc {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid input that violates a documented precondition or invariant.
struct ValidationError : Error {
    using Error::Error;
};

/// A curve or divisor label that is not present in the model.
struct UnknownLabelError : ValidationError {
    explicit UnknownLabelError(const std::string& l)
        : ValidationError("unknown label: " + l), label(l) {}
    std::string label;
};

/// A label that would collide with an existing one.
struct DuplicateLabelError : ValidationError {
    explicit DuplicateLabelError(const std::string& l)
        : ValidationError("duplicate label: " + l), label(l) {}
    std::string label;
};

/// Two divisor classes (or a class and a form) living in different bases.
struct BasisMismatchError : Error {
    BasisMismatchError(const std::string& a, const std::string& b)
        : Error("basis mismatch: '" + a + "' vs '" + b + "'"), lhs(a), rhs(b) {}
    std::string lhs;
    std::string rhs;
};

/// Declared curve data contradicts the lattice (necessary-condition check).
struct GeometryError : ValidationError {
    using ValidationError::ValidationError;
};

/// Positioned error from the surface-description parser. Lines and columns
/// are 1-based.
struct ParseError : Error {
    ParseError(int ln, int col, const std::string& msg)
        : Error("line " + std::to_string(ln) + ", column " + std::to_string(col) +
                ": " + msg),
          line(ln), column(col) {}
    int line;
    int column;
};

/// A linear system or optimization problem with no solution of the
/// requested kind.
struct InfeasibleError : Error {
    enum class Kind {
        RationalInfeasible,      // no solution even over the rationals
        CongruenceObstruction,   // rational solutions exist, no integer one
        NoEffectiveRepresentative  // no effective divisor in the class
    };
    InfeasibleError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
    Kind kind;
};

}  // namespace alphacalc
