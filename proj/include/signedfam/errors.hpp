#pragma once

#include <stdexcept>
#include <string>

namespace signedfam {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid Params, or two values built over different ambient parameters.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// An integer argument lies outside the documented range of an operation.
class RangeError : public Error {
public:
  using Error::Error;
};

/// A formula is evaluated where it is undefined (division by zero, excluded cases).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A signed set or family violates its structural invariants.
class ValidityError : public Error {
public:
  using Error::Error;
};

/// The caller broke an operation's precondition on family structure.
class ContractError : public Error {
public:
  using Error::Error;
};

/// Input exceeds the desk-scale capacity of an exact search.
class CapacityError : public Error {
public:
  using Error::Error;
};

} // namespace signedfam
