#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fraclap {

/// A parameter violates a documented precondition (alpha, N, r, L, dt, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Array lengths do not match the grid they are supposed to live on.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reading or writing an external file failed.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical routine left its supported range (e.g. series non-convergence).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The time integrator produced a non-finite sample.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(std::size_t index, double time)
      : std::runtime_error("non-finite value in psi at node " + std::to_string(index) +
                           ", t = " + std::to_string(time)),
        index_(index),
        time_(time) {}

  std::size_t index() const noexcept { return index_; }
  double time() const noexcept { return time_; }

 private:
  std::size_t index_;
  double time_;
};

}  // namespace fraclap
