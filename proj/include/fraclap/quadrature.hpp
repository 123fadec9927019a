#pragma once

#include <span>

#include "fraclap/grid.hpp"
#include "fraclap/types.hpp"

namespace fraclap {

/// Exponents of the kernel sin^beta(eta) |sin(eta - s)|^gamma.
/// Requires beta > 0 and gamma > -1.
struct SingularParams {
  SingularParams(double beta, double gamma);

  double beta;
  double gamma;
};

/// f sampled at the 2rN cell midpoints of a grid.
class MidpointSamples {
 public:
  /// Throws ShapeError unless values.size() == 2rN.
  MidpointSamples(GridSpec grid, ComplexVector values);

  const GridSpec& grid() const noexcept { return grid_; }
  std::span<const Complex> values() const noexcept { return values_; }
  ComplexVector& mutable_values() noexcept { return values_; }

 private:
  GridSpec grid_;
  ComplexVector values_;
};

/// sin(z)/z, with the series 1 - z^2/6 near the origin.
double sinc(double z) noexcept;

/// Modified midpoint rule on [a, b]: x^beta integrated exactly on each cell,
/// f frozen at the cell midpoint. f_mid[n] = f(a + h(n + 1/2)).
Complex modified_midpoint(std::span<const Complex> f_mid, double a, double b, double beta);

/// sign_next |x_next|^e - sign_prev |x_prev|^e. When both endpoints share a
/// sign the difference is formed through expm1/log1p so neighbouring cells of
/// a large index do not cancel.
double signed_power_bracket(double x_next, double x_prev, double exponent, int sign_next,
                            int sign_prev) noexcept;

/// [sign_next |x_next|^(g+1) - sign_prev |x_prev|^(g+1)] / (g+1), the exact
/// integral of |x|^g over [x_prev, x_next] when the signs are those of the
/// endpoints.
double signed_power_difference(double x_next, double x_prev, double gamma, int sign_next,
                               int sign_prev);

/// A_{1,j} + A_{2,j} for j = 0..N-1 by literal double summation, O(rN^2).
/// Kept as the reference the fast convolution is checked against.
ComplexVector singular_integral_direct(const MidpointSamples& F, const SingularParams& p);

}  // namespace fraclap
