#ifndef STARCONF_ERRORS_HPP
#define STARCONF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace starconf {

/// Malformed or unsupported input (CLI exit code 1).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An exhaustive computation was asked for beyond its size cap (exit code 2).
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A cross-check between independent routes failed (exit code 3).
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Hilbert-function fitting did not stabilise inside the allowed window.
struct Inconclusive : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace starconf

#endif  // STARCONF_ERRORS_HPP
