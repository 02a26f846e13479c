#pragma once

#include <stdexcept>
#include <string>

namespace schurid {

// Base for every precondition or domain failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A rational function was evaluated at a root of its denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

// A partition or vector is longer than the context allows.
class LengthError : public Error {
 public:
  using Error::Error;
};

// Removing a rectangle from a partition that does not contain it.
class ContainmentError : public Error {
 public:
  using Error::Error;
};

// Appending a partition whose first part exceeds the last part of the base.
class OrderError : public Error {
 public:
  using Error::Error;
};

// Evaluation points (or eigenvalues) that must be distinct are not.
class RepeatedPointError : public Error {
 public:
  using Error::Error;
};

// A Cauchy-type entry 1/(k_i + l_j - s + 1) has a zero denominator.
class SingularDenominatorError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

// Two closed forms that must agree produced different values.
class MismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace schurid
