#pragma once

#include <stdexcept>
#include <string>

namespace monadforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different ambient spaces, or matrix extents disagree.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// An argument violates a documented precondition (even N, non-prime q, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// The requested finite-field sweep is larger than the configured point budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A computed postcondition failed; this indicates a bug, not bad input.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace monadforge
