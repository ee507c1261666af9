#pragma once

#include <stdexcept>
#include <string>

namespace superlum {

// Base for every numerical or domain failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters violate a documented invariant (negative rate, zero decay, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// The steady-state linear system is (numerically) singular.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

// Time evolution drifted away from a unit-trace Hermitian state.
class NonPhysicalState : public Error {
 public:
  using Error::Error;
};

// 3-point and 5-point finite differences disagree.
class DerivativeUnstable : public Error {
 public:
  using Error::Error;
};

// A closed-form expression was called outside the regime it was derived for.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

}  // namespace superlum
