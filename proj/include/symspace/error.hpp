#pragma once

#include <stdexcept>
#include <string>

namespace symspace {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the domain where an operation is defined.
struct DomainError : Error {
  using Error::Error;
};

// A Gamma pole or a zero of c was hit.
struct SingularValueError : Error {
  using Error::Error;
};

struct ConvergenceError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

// Complexified Iwasawa factor has no continuous continuation along the path.
struct PathError : Error {
  using Error::Error;
};

struct InconsistentInputError : Error {
  using Error::Error;
};

}  // namespace symspace
