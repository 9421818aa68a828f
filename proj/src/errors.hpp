#pragma once

#include <stdexcept>

namespace mnp {

// Unusable input: bad group token, out-of-range parameter, non-generic
// tiebreak, precondition violation.
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Charge vector outside the coroot lattice.
struct IntegralityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A cross-check between independent computation routes disagreed.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace mnp
