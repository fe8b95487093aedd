#pragma once

#include <stdexcept>
#include <string>

namespace flownav {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition / invariant violations in operation contracts.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Camera pose strictly inside scene solid; callers treat it as a collision.
class DegeneratePoseError : public Error {
 public:
  using Error::Error;
};

// Rejection sampling exhausted its retry budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

// File-format failures, split so callers can distinguish load outcomes.
class FormatError : public Error {
 public:
  using Error::Error;
};
class VersionError : public FormatError {
 public:
  using FormatError::FormatError;
};
class TruncationError : public FormatError {
 public:
  using FormatError::FormatError;
};

}  // namespace flownav
