#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace toriclci {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not match the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An input document could not be decoded at all (bad JSON, wrong types).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structural defects of a free-parameter matrix (1-based row index).
class ZeroRowError : public Error {
 public:
  explicit ZeroRowError(int row)
      : Error("row " + std::to_string(row) + " of the parameter matrix is zero"), row(row) {}
  int row;
};

class BadShapeError : public Error {
 public:
  BadShapeError(int row, const std::string& what) : Error(what), row(row) {}
  int row;  // -1 when the row list itself has the wrong length
};

class NonPositiveLeadError : public Error {
 public:
  NonPositiveLeadError() : Error("leading entry m_{1,1} must be >= 1") {}
};

// A basic cone failed its unit-determinant check; signals a bug, not bad input.
class DetNotUnitError : public Error {
 public:
  explicit DetNotUnitError(std::vector<int> epsilon)
      : Error("basic cone determinant is not a unit"), epsilon(std::move(epsilon)) {}
  std::vector<int> epsilon;
};

// A construction violated one of its own theorems (NegativeMuZero,
// InternalMismatch, NotDominating, MalformedEliminationTarget,
// UnboundedSearch).  Always an implementation bug.
class InternalCheckError : public Error {
 public:
  InternalCheckError(std::string check, const std::string& what)
      : Error(check + ": " + what), check(std::move(check)) {}
  std::string check;
};

}  // namespace toriclci
