#pragma once

#include <stdexcept>
#include <string>

namespace cfgeom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Violated precondition on an argument (bad parameters, mismatched sizes).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Geometry that the predicates cannot decide (coincident boundaries etc.).
class DegenerateGeometry : public Error {
public:
    using Error::Error;
};

/// A peel step found no vertex of degree <= 5 in the auxiliary graph.
class PlanarityViolation : public Error {
public:
    using Error::Error;
};

/// A coloring that was supposed to be verified failed verification.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

}  // namespace cfgeom
