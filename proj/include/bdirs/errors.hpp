#pragma once

#include <stdexcept>
#include <string>

namespace bdirs {

// Matrix inversion rejected because the operand's condition number exceeds
// the configured cap. Signals a non-physical or degenerate input rather
// than returning silent garbage.
class IllConditionedError : public std::runtime_error {
 public:
  explicit IllConditionedError(const std::string& what)
      : std::runtime_error(what) {}
};

// (I + Phi) is numerically singular: the reflection has an eigenvalue at -1
// (full out-of-phase reflection). Callers may perturb Phi and retry.
class DegenerateReflectionError : public IllConditionedError {
 public:
  explicit DegenerateReflectionError(const std::string& what)
      : IllConditionedError(what) {}
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bdirs
