#pragma once

#include <stdexcept>
#include <string>

namespace gaudin {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands belong to different prime fields.
class ContextError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Malformed arguments: repeated points, indices out of range, bad degrees.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A hypothesis of a theorem (such as p > |m| + 1) does not hold for the
/// requested instance. The message names the hypothesis.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An identity that must hold on every valid instance failed. Reaching one of
/// these is a finding, not a usage error.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

} // namespace gaudin
