#pragma once

#include <stdexcept>
#include <string>

namespace mdim {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input violates an operation's precondition (bad parameters, invalid design).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A text file could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A solver ran out of budget or retries without producing an answer.
class SolverError : public Error {
public:
    using Error::Error;
};

} // namespace mdim
