#pragma once

#include <stdexcept>
#include <string>

namespace bistellar {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An index or dimension argument lies outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

class NotAFaceError : public Error {
 public:
  using Error::Error;
};

/// Some codimension-one face lies in three or more facets.
class NonPseudomanifoldError : public Error {
 public:
  using Error::Error;
};

/// Identifying two copies along a boundary would merge faces that are not
/// boundary faces, so the result is not a simplicial complex.
class GluingError : public Error {
 public:
  using Error::Error;
};

/// A move site that is not admissible in the complex it is applied to.
class StaleSiteError : public Error {
 public:
  using Error::Error;
};

class NotAnInvariantError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An input violates the documented precondition of an operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace bistellar
