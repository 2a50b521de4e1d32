#pragma once

#include <stdexcept>
#include <string>

namespace thompson {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// core_trees
class AntichainViolation : public Error {
 public:
  using Error::Error;
};
class IncompleteTree : public Error {
 public:
  using Error::Error;
};
class EmptyTree : public Error {
 public:
  using Error::Error;
};
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration or search bound was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// diagrams
class InvalidDiagram : public Error {
 public:
  using Error::Error;
};
class NotRefinement : public Error {
 public:
  using Error::Error;
};
class UnknownSymbol : public Error {
 public:
  using Error::Error;
};

// folner
class ZeroMass : public Error {
 public:
  using Error::Error;
};
class PartialMap : public Error {
 public:
  using Error::Error;
};

/// Raised when an internal mathematical invariant is observed to fail.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace thompson
