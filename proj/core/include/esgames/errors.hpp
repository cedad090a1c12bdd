#pragma once

#include <stdexcept>
#include <string>

namespace esgames {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed documents, unresolved references, structures that are not
/// well-formed where well-formedness is a precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A constructor was applied outside its domain (e.g. ! on a mixed game).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured resource bound (configurations, group order, search size)
/// would be exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// No (unique) factorization αβ = β'α' exists between two subgroups.
class FactorizationError : public Error {
 public:
  using Error::Error;
};

/// An identity that follows from the axioms failed; indicates broken input
/// that slipped past validation or a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace esgames
