#pragma once

#include <stdexcept>
#include <string>

namespace tannaka {

/// Shapes of two operands do not fit together (composition, Kronecker
/// blocks, pairing sizes, ...).
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Scalars from different fields were combined.
class FieldMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// Malformed text input: scalar literals, expressions, JSON documents.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structurally invalid input that parsed fine (unknown names, paths that
/// do not compose, inconsistent coactions...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A symmetric monoidal expression whose pieces do not fit together.
class MalformedExpression : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// A map defined on coend generators failed to vanish on the relation span.
class WellDefinednessError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The problem is outside what the solvers handle (for example a quadratic
/// system over Q without candidates, or a search space over the bound).
class UnsupportedProblem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tannaka
