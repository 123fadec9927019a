#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fraclap/fastconv.hpp"
#include "fraclap/grid.hpp"
#include "fraclap/quadrature.hpp"
#include "fraclap/types.hpp"

namespace fraclap {

/// Order alpha in (0,1) U (1,2) on a grid. alpha within 1e-8 of 1 is
/// rejected: that case is the Hilbert transform and is not handled here.
class FracLapParams {
 public:
  FracLapParams(double alpha, GridSpec grid);

  double alpha() const noexcept { return alpha_; }
  const GridSpec& grid() const noexcept { return grid_; }

  /// beta = alpha, gamma = 1 - alpha.
  SingularParams kernel() const { return {alpha_, 1.0 - alpha_}; }

 private:
  double alpha_;
  GridSpec grid_;
};

/// c_alpha = alpha 2^(alpha-1) Gamma((1+alpha)/2) / (sqrt(pi) Gamma(1 - alpha/2)).
double normalization_constant(double alpha);

/// sin^(alpha-1)(s_j) / (L^alpha 2 Gamma(2-alpha) cos(pi alpha / 2)).
double prefactor(const FracLapParams& p, std::int64_t j);

/// (-Delta)^(alpha/2) u at x_j = L cot(s_j), j = 0..N-1, from the midpoint
/// samples of f = sin(s) u_ss + 2 cos(s) u_s.
ComplexVector apply(const MidpointSamples& F, const FracLapParams& p);

/// apply() with the f-independent kernel work done once at construction.
class FractionalLaplacian {
 public:
  explicit FractionalLaplacian(const FracLapParams& p);

  const FracLapParams& params() const noexcept { return params_; }
  ComplexVector apply(std::span<const Complex> f) const;

 private:
  FracLapParams params_;
  SingularIntegralOperator op_;
  std::vector<double> prefactors_;
};

}  // namespace fraclap
