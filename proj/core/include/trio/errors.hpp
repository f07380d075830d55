#pragma once

#include <stdexcept>
#include <string>

namespace trio {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad index, mismatched
/// truncation orders, zero constant term, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested working precision cannot support the computation.
class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what, long required_bits)
      : Error(what), required_bits_(required_bits) {}

  long required_bits() const noexcept { return required_bits_; }

 private:
  long required_bits_;
};

/// An iterative method ran out of its iteration budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace trio
