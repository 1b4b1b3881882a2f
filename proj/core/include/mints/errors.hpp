#ifndef MINTS_ERRORS_HPP
#define MINTS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mints {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Exact integer arithmetic left the supported range. Never wraps.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A direction was requested for the zero vector.
class ZeroVectorError : public Error {
 public:
  using Error::Error;
};

// Scheme data violates a structural invariant (negative entry, zero
// column, entry above kEntryMax, bad shape).
class InvalidSchemeError : public Error {
 public:
  using Error::Error;
};

// An operation that requires a feasible scheme was given an infeasible one.
class InfeasibleSchemeError : public Error {
 public:
  using Error::Error;
};

// Caller-supplied configuration or arguments are unusable.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace mints

#endif  // MINTS_ERRORS_HPP
