#pragma once

#include <stdexcept>
#include <string>

namespace kostant {

/// Bad input: out-of-range indices, rank mismatches, unsupported queries.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request that exceeds a configured enumeration cap (factorial or
/// exponential work). The message names the cap and how to raise it.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixed-width coefficient arithmetic would have wrapped.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// An invariant that the mathematics guarantees was violated. Reaching one of
/// these is a bug in this library, never a property of the input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kostant
