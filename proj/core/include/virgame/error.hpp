#pragma once

#include <stdexcept>
#include <string>

namespace virgame {

// Base of every error raised by the library. Callers that only need to
// distinguish "bad input" from "environment failure" can catch InputError
// vs. IoError.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid caller-supplied data: out-of-range scores, broken preconditions,
// malformed documents, mismatched dimensions.
class InputError : public Error {
 public:
  using Error::Error;
};

// A value fell outside its permitted interval. `field()` names the offending
// variable (e.g. "A" or "base_infection_prob").
class DomainError : public InputError {
 public:
  DomainError(std::string field, const std::string& what)
      : InputError(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

class ParameterError : public InputError {
 public:
  using InputError::InputError;
};

// Structural problems in an ingested document. Carries the key (if any) and
// the 1-based source line it was found on (0 when unknown).
class ValidationError : public InputError {
 public:
  ValidationError(std::string key, int line, const std::string& what)
      : InputError(what), key_(std::move(key)), line_(line) {}
  const std::string& key() const noexcept { return key_; }
  int line() const noexcept { return line_; }

 private:
  std::string key_;
  int line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace virgame
