#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locoh {

/// Base of every exception thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

/// A map does not respect the subquotients it is supposed to act on.
class WellDefinednessError : public Error {
 public:
  using Error::Error;
};

class NonHomogeneousError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariableError : public ParseError {
 public:
  UnknownVariableError(const std::string& name, std::size_t position);
};

class ZeroGeneratorError : public Error {
 public:
  using Error::Error;
};

class ConventionMismatchError : public Error {
 public:
  using Error::Error;
};

class OrderError : public Error {
 public:
  using Error::Error;
};

class EmptyGeneratorsError : public Error {
 public:
  using Error::Error;
};

class NotRegularError : public Error {
 public:
  NotRegularError(int homological_index, int degree, std::size_t dim);
  int homological_index() const noexcept { return index_; }
  int degree() const noexcept { return degree_; }
  std::size_t dimension() const noexcept { return dim_; }

 private:
  int index_;
  int degree_;
  std::size_t dim_;
};

/// Structural validation failure: d^2 != 0, a chain map that does not
/// commute, mismatched shapes.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A condition that holds by construction was found violated.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace locoh
