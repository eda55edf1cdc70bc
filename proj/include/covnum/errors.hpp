#pragma once

#include <stdexcept>
#include <string>

namespace covnum {

// Bad input: violated precondition, malformed file, out-of-range parameter.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A self-check inside the library failed (e.g. a count that must be integral
// was not). Always a bug, never a user error.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ValidationError(message);
}

inline void ensure(bool condition, const std::string& message) {
  if (!condition) throw InternalError(message);
}

}  // namespace covnum
