#pragma once

#include <stdexcept>
#include <string>

namespace cfz {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller violated an operation's precondition (bad prime, wrong residue class, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Arithmetic on incompatible or invalid field elements.
class FieldError : public Error {
public:
    using Error::Error;
};

/// Malformed polynomial text or variety file.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed the configured work budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A computed identity or consistency check failed.
class VerificationError : public Error {
public:
    using Error::Error;
};

} // namespace cfz
