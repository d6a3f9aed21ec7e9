#pragma once

#include <stdexcept>
#include <string>

namespace bellcert {

// Argument outside the mathematical domain of a function (e.g. W on x < 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A bound was requested for an index or parameter outside the range where
// the underlying inequality has been established.
class ValidityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured resource cap (e.g. the largest exactly tabulated Bell index)
// would be exceeded.
class ResourceLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// The working precision was not enough to decide a result; callers are
// expected to retry at a higher precision.
class IndeterminateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed. Seeing one of these is a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace bellcert
