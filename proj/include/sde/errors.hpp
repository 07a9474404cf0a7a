#pragma once

#include <stdexcept>
#include <string>

namespace sde {

/// A closed form or reconstruction would divide by zero: the input lies in
/// the forbidden set. `index` is the sequence index of the vanishing term.
class ForbiddenInput : public std::domain_error {
 public:
  ForbiddenInput(std::string restriction, long index)
      : std::domain_error("forbidden input: " + restriction + " vanishes at index " +
                          std::to_string(index)),
        restriction_(std::move(restriction)),
        index_(index) {}
  const std::string& restriction() const noexcept { return restriction_; }
  long index() const noexcept { return index_; }

 private:
  std::string restriction_;
  long index_;
};

/// Input rejected before any computation (zero initial values where the
/// recurrence divides by them, singular trajectories passed to reducers...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A case tag was requested for parameters it does not cover.
class InconsistentCase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace sde
