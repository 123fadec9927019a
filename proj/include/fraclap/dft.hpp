#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "fraclap/types.hpp"

namespace fraclap::dft {

/// Precomputed transform of a fixed length. Powers of two use a recursive
/// radix-2 kernel; every other length goes through Bluestein's chirp
/// transform on a power-of-two convolution.
///
/// Conventions: forward is unnormalized, X_p = sum_m x_m exp(-2 pi i m p / M);
/// inverse carries the 1/M factor. A plan is immutable after construction
/// and may be shared between threads.
class Plan {
 public:
  explicit Plan(std::size_t n);
  ~Plan();
  Plan(Plan&&) noexcept;
  Plan& operator=(Plan&&) noexcept;

  std::size_t size() const noexcept { return n_; }

  void forward(std::span<Complex> data) const;
  void inverse(std::span<Complex> data) const;

  /// Same transforms with the spectrum in a plan-specific order (bit-reversed
  /// for powers of two). Only good for forward, pointwise work, inverse.
  void forward_permuted(std::span<Complex> data) const;
  void inverse_permuted(std::span<Complex> data) const;

 private:
  struct Bluestein;

  void radix2(std::span<Complex> data) const;
  void dif(Complex* p, std::size_t len) const;
  void dit_conj(Complex* p, std::size_t len) const;
  void check(std::span<Complex> data) const;

  std::size_t n_;
  // radix-2 only: one block per stage length len = n, n/2, ..., 2 holding
  // exp(-2 pi i k / len), k < len/2, starting at offset n - len
  std::vector<Complex> twiddles_;
  std::unique_ptr<Bluestein> bluestein_;
};

/// One-shot forward transform. Throws ShapeError on empty input.
ComplexVector forward(std::span<const Complex> v);

/// One-shot inverse transform. Throws ShapeError on empty input.
ComplexVector inverse(std::span<const Complex> v);

bool is_power_of_two(std::size_t n) noexcept;

/// Smallest power of two >= n (and >= 1).
std::size_t next_power_of_two(std::size_t n) noexcept;

}  // namespace fraclap::dft
