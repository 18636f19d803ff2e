#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace frobcov {

inline constexpr const char* kVersion = "1.0.0";

using Int = std::int64_t;
__extension__ typedef __int128 Wide;
using IntVec = std::vector<Int>;

/// Caller supplied an input outside an operation's domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed; indicates a bug, never bad data.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A finite search window turned out to be too small.
class BoundExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Int narrow(Wide v, const char* what) {
  if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN)) {
    throw InternalError(std::string("64-bit overflow in ") + what);
  }
  return static_cast<Int>(v);
}

}  // namespace frobcov
