#pragma once

#include <stdexcept>
#include <string>

namespace nlsbeat {

// Enumeration bound above the capacity guard, oversized decomposition, etc.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument shape (wrong cardinality, modes outside the grid, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematical domain violation (negative action under a square root,
// resonant divisor where a nonzero one is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Adaptive integration could not proceed (step rejection exhaustion).
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The orbit did not return to the section within the time cap.
class PeriodDetectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite value detected during PDE evolution.
class BlowupError : public std::runtime_error {
 public:
  BlowupError(const std::string& what, double last_good_time)
      : std::runtime_error(what), last_good_time_(last_good_time) {}
  double last_good_time() const { return last_good_time_; }

 private:
  double last_good_time_;
};

}  // namespace nlsbeat
