#pragma once

#include <stdexcept>
#include <string>

namespace solenoid {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed type descriptor, permutation or fraction text.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Argument outside the operation's domain (r < 1, entry < 2, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The operation needs bonding entries the type description does not provide.
class HorizonError : public Error {
public:
    using Error::Error;
};

/// Explicit enumeration would exceed the state budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// A documented precondition does not hold; the message names the offender.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class CrossCheckError : public Error {
public:
    using Error::Error;
};

} // namespace solenoid
