#pragma once

#include <stdexcept>
#include <string>

namespace jb {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A jet variable would exceed the configured component or order cap.
class OrderCapExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (polynomial text, fixture file, CLI argument).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A precondition of an operation was violated by its caller.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A configured resource budget (pairs, lattice cap) was exhausted.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace jb
