#pragma once

#include <stdexcept>
#include <string>

namespace phasespace {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameter or grid (maps to CLI exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A state or distribution is not contained by its sampling grid.
class ContainmentError : public Error {
 public:
  using Error::Error;
};

/// Quadrature or resolution refinement failed to converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Zero-norm state or a distribution whose integral is not 1.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

}  // namespace phasespace
