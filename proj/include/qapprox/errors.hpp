#pragma once

#include <stdexcept>
#include <string>

namespace qapprox {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the region where the requested quantity is defined
// (q outside (0,1), x beyond the operator's guarded domain, k > n, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A series hit its hard term cap before the tail bound fell below tolerance.
class TruncationError : public Error {
 public:
  using Error::Error;
};

// A user-supplied function returned a non-finite value.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

}  // namespace qapprox
