#pragma once

#include <stdexcept>
#include <string>

namespace equitest {

// Base class for every error raised by the library.  The CLI maps these onto
// exit codes: input/parse errors -> 1, statistical precondition violations -> 2,
// numerical non-convergence -> 3.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- input / parse errors (exit code 1) ---

class FileNotFound : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ColumnError : public Error {
 public:
  using Error::Error;
};

// --- statistical precondition violations (exit code 2) ---

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NonFiniteInput : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class TooFewObservations : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class RankDeficient : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DegenerateFit : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class IndexOutOfRange : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class InvalidMargin : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Standardized-scale margin whose noncentrality denominator is non-positive.
// The message reports the largest feasible |delta| for the fit at hand.
class InfeasibleMargin : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class InvalidThreshold : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class InfeasibleDesign : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class InfeasibleCorrelation : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DomainError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// --- numerical failures (exit code 3) ---

class NonConvergence : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public NonConvergence {
 public:
  using NonConvergence::NonConvergence;
};

}  // namespace equitest
