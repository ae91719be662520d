#pragma once

#include <stdexcept>
#include <string>

namespace invforms {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands do not fit together (variable counts, vector lengths, form degrees).
class StructuralError : public Error {
public:
    using Error::Error;
};

/// A form or polynomial expected to be homogeneous carries two different weights.
class InhomogeneityError : public Error {
public:
    using Error::Error;
};

/// An action description is malformed.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A desk-scale guard was tripped (for example, group enumeration too large).
class ResourceError : public Error {
public:
    using Error::Error;
};

/// The requested decision route does not apply to this action.
class UnsupportedRouteError : public Error {
public:
    using Error::Error;
};

/// Two computations that must agree by theory disagree; indicates a bug.
class EngineInconsistency : public Error {
public:
    using Error::Error;
};

} // namespace invforms
