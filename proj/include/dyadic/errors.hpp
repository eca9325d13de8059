#pragma once

#include <stdexcept>
#include <string>

namespace dyadic {

// Error kinds. Each carries a category name so the CLI can report it uniformly.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

struct DomainError : Error {
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

struct PoleError : Error {
  using Error::Error;
  const char* kind() const noexcept override { return "pole"; }
};

struct SingularMatrixError : Error {
  using Error::Error;
  const char* kind() const noexcept override { return "singular-matrix"; }
};

struct PrecisionError : Error {
  using Error::Error;
  const char* kind() const noexcept override { return "precision"; }
};

struct RangeError : Error {
  using Error::Error;
  const char* kind() const noexcept override { return "range"; }
};

struct GuardError : Error {
  using Error::Error;
  const char* kind() const noexcept override { return "guard"; }
};

struct NonPolynomialError : Error {
  using Error::Error;
  const char* kind() const noexcept override { return "non-polynomial"; }
};

}  // namespace dyadic
