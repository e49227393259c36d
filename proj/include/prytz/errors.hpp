#pragma once

#include <stdexcept>

namespace prytz {

// Raised when an integration or evaluation produces non-finite values.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace prytz
