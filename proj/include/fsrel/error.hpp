#pragma once

#include <stdexcept>
#include <string>

namespace fsrel {

// Caller-side errors: bad input, violated preconditions. The CLI maps these
// to exit code 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

class NormalizationError : public Error {
public:
  using Error::Error;
};

class IncommensurableError : public Error {
public:
  using Error::Error;
};

class ModeError : public Error {
public:
  using Error::Error;
};

class ValidationError : public Error {
public:
  using Error::Error;
};

class ParseError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

// Broken internal invariant (e.g. two decision rules disagreeing). Maps to
// exit code 3; never caused by user input alone.
class InternalAssertion : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace fsrel
