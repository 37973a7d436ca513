#pragma once

#include <stdexcept>
#include <string>

namespace ergodic {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain where a function is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Grid functions with incompatible resolution, mode or support.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A system or potential could not be built from its inputs.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

/// No branch preimage of a grid point lies where the potential is defined.
class CoverageError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

/// A closed-form reference was asked for a parameter outside its validity window.
class UnsupportedParameterError : public Error {
 public:
  using Error::Error;
};

}  // namespace ergodic
