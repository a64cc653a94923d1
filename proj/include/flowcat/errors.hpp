#ifndef FLOWCAT_ERRORS_HPP
#define FLOWCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flowcat {

// Caller supplied something outside an operation's domain.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed the configured size cap.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed (e.g. an interpolated Ehrhart
// polynomial does not reproduce a sampled count, or a pi power survives).
class DefectDetected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumeration cap from FLOWCAT_MAX_CELLS, default 5'000'000.
std::size_t enumeration_cap();

}  // namespace flowcat

#endif
