#pragma once

#include <stdexcept>
#include <string>

namespace kp5 {

// Bad user-facing input: unknown experiment, non-admissible n, malformed grid.
struct parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Runtime breakdown: solver blow-up, conservation drift, violated constraint.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr const char* artifact_version = "0.1.0";

}  // namespace kp5
