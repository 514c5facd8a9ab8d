#pragma once

#include <stdexcept>
#include <string>

namespace charslope {

// Every failure raised by the library derives from Error. The CLI maps
// UsageError subclasses to exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input (knot names, polynomials, PD codes, slopes).
class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : UsageError(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ParityError : public UsageError {
 public:
  using UsageError::UsageError;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ZeroEvaluationPointError : public DomainError {
 public:
  using DomainError::DomainError;
};

class AsymmetricError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegreeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ZeroDenominatorError : public DomainError {
 public:
  using DomainError::DomainError;
};

class OverflowError : public DomainError {
 public:
  using DomainError::DomainError;
};

class EvaluationAtRootError : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidSeifertMatrix : public DomainError {
 public:
  using DomainError::DomainError;
};

class InconsistencyError : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnknownKnotError : public DomainError {
 public:
  using DomainError::DomainError;
};

class FixtureError : public DomainError {
 public:
  using DomainError::DomainError;
};

class PdCodeError : public UsageError {
 public:
  using UsageError::UsageError;
};

class MultiComponentError : public DomainError {
 public:
  using DomainError::DomainError;
};

class IdenticalSpecError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Thrown when an internal consistency check fails; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace charslope
