#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "fraclap/dft.hpp"
#include "fraclap/grid.hpp"
#include "fraclap/quadrature.hpp"
#include "fraclap/types.hpp"

namespace fraclap {

/// Fourier coefficients u^(k), k = -N..N-1, of a function on [0, 2pi).
/// Stored in transform order: slot p holds k = p for p < N and k = p - 2N
/// otherwise.
class SpectralCoefficients {
 public:
  /// Throws ShapeError on odd or empty storage.
  explicit SpectralCoefficients(ComplexVector coeffs);

  std::int64_t N() const noexcept { return static_cast<std::int64_t>(coeffs_.size() / 2); }
  const Complex& at(std::int64_t k) const { return coeffs_[slot(k)]; }
  Complex& at(std::int64_t k) { return coeffs_[slot(k)]; }
  std::span<const Complex> raw() const noexcept { return coeffs_; }

 private:
  std::size_t slot(std::int64_t k) const;
  ComplexVector coeffs_;
};

using SFunction = std::function<Complex(double)>;

/// f(s) = sin(s) u_ss(s) + 2 cos(s) u_s(s) at every cell midpoint.
MidpointSamples f_from_analytic(const SFunction& us, const SFunction& uss, const GridSpec& g);

/// Same f written through the x-derivatives of u: f = L^2 u_xx(x(s)) / sin^3(s).
MidpointSamples f_from_x_derivative(const SFunction& uxx_of_x, const GridSpec& g);

/// Coefficients from the N samples u(s_j), j = 0..N-1, on (0, pi). The even
/// extension u(pi + s) = u(pi - s) is applied here, then the Krasny filter
/// with the default threshold.
SpectralCoefficients coefficients_from_samples(std::span<const Complex> u_vals);

/// Coefficients from 2N samples already covering [0, 2pi). Unfiltered.
/// Throws ShapeError on odd length.
SpectralCoefficients coefficients_from_periodic_samples(std::span<const Complex> u_vals);

/// Zeroes every coefficient with modulus below threshold.
SpectralCoefficients krasny_filter(SpectralCoefficients c, double threshold);

/// machine epsilon * max_k |u^(k)|.
double default_krasny_threshold(const SpectralCoefficients& c);

struct MidpointDerivatives {
  ComplexVector us;
  ComplexVector uss;
};

/// u_s and u_ss at the 2rN midpoints of g, from the zero-padded series
/// evaluated by two inverse transforms of length 4rN.
MidpointDerivatives derivatives_at_midpoints(const SpectralCoefficients& c, const GridSpec& g);

/// The whole pseudospectral route: samples u(s_j) on the N output nodes of g
/// to the midpoint samples of f.
MidpointSamples f_from_samples(std::span<const Complex> u_vals, const GridSpec& g);

/// f_from_samples with the transform plans of lengths 2N and 4rN kept
/// between calls. Const member functions are reentrant.
class SpectralSampler {
 public:
  explicit SpectralSampler(const GridSpec& g);

  const GridSpec& grid() const noexcept { return grid_; }

  SpectralCoefficients coefficients(std::span<const Complex> u_vals) const;
  MidpointDerivatives derivatives(const SpectralCoefficients& c) const;
  MidpointSamples f_from_samples(std::span<const Complex> u_vals) const;

 private:
  GridSpec grid_;
  dft::Plan periodic_plan_;
  dft::Plan midpoint_plan_;
};

}  // namespace fraclap
