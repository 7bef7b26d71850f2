#pragma once

#include <stdexcept>
#include <string>

namespace otoric {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

class ArgumentError : public Error {
public:
  using Error::Error;
};

/// Malformed graph document. The message carries line/column or field path.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Well-formed document whose graph breaks an invariant (loop, parallel
/// edge, weight < 1, dangling endpoint, duplicate id).
class ValidationError : public Error {
public:
  using Error::Error;
};

class UnbalancedCycleError : public Error {
public:
  using Error::Error;
};

class UnbalancedCycleRequiredError : public Error {
public:
  using Error::Error;
};

class SupportShapeError : public Error {
public:
  using Error::Error;
};

class BalancedOuterCycleError : public Error {
public:
  using Error::Error;
};

class BudgetExceeded : public Error {
public:
  using Error::Error;
};

class OutOfClassError : public Error {
public:
  using Error::Error;
};

} // namespace otoric
