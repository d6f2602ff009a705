#pragma once

#include <stdexcept>
#include <string>

namespace rasp {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input or violated operation precondition (bad JSON, bad
/// instance data, wrong variant for the instance at hand).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A size guard tripped: the requested computation is outside the limits
/// an exact/enumerative routine is willing to attempt.
class GuardError : public Error {
public:
    using Error::Error;
};

/// An iteration or event cap was reached before the computation finished.
/// Distinct from any verdict: callers must not interpret this as a result.
class CapError : public Error {
public:
    using Error::Error;
};

/// A state the underlying theory rules out, or a failed exact re-check of
/// a numerical result. Always indicates a bug somewhere, never bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace rasp
