#pragma once

#include <stdexcept>

namespace lcaspan {

/// Query named a pair that is not an edge of the input graph.
struct NotAnEdgeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Conditioned-row rejection sampling hit its retry cap.
struct RetryExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A walk assumed a parameter regime the input graph does not satisfy.
struct RegimeViolationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lcaspan
