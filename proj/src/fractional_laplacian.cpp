#include "fraclap/fractional_laplacian.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fraclap/errors.hpp"

namespace fraclap {

FracLapParams::FracLapParams(double alpha, GridSpec grid) : alpha_(alpha), grid_(grid) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw ParameterError("alpha must lie in (0, 2), got " + std::to_string(alpha));
  }
  if (std::abs(alpha - 1.0) < 1e-8) {
    throw ParameterError("alpha = 1 (Hilbert transform case) is not supported");
  }
}

double normalization_constant(double alpha) {
  return alpha * std::pow(2.0, alpha - 1.0) * std::tgamma(0.5 + 0.5 * alpha) /
         (std::sqrt(std::numbers::pi) * std::tgamma(1.0 - 0.5 * alpha));
}

double prefactor(const FracLapParams& p, std::int64_t j) {
  const GridSpec& g = p.grid();
  if (j < 0 || j >= g.N()) throw ParameterError("prefactor: node index out of range");
  const double a = p.alpha();
  const double s = pi_fraction(2 * j + 1, 2 * g.N());
  return std::pow(std::sin(s), a - 1.0) /
         (std::pow(g.L(), a) * 2.0 * std::tgamma(2.0 - a) * std::cos(std::numbers::pi * a / 2.0));
}

ComplexVector apply(const MidpointSamples& F, const FracLapParams& p) {
  if (F.grid().N() != p.grid().N() || F.grid().r() != p.grid().r() || F.grid().L() != p.grid().L()) {
    throw ShapeError("fractional Laplacian: samples and parameters live on different grids");
  }
  auto out = fast_singular_integral(F, p.kernel());
  for (std::int64_t j = 0; j < p.grid().N(); ++j) out[j] *= prefactor(p, j);
  return out;
}

FractionalLaplacian::FractionalLaplacian(const FracLapParams& p)
    : params_(p), op_(p.grid(), p.kernel()), prefactors_(static_cast<std::size_t>(p.grid().N())) {
  for (std::int64_t j = 0; j < p.grid().N(); ++j) prefactors_[j] = prefactor(p, j);
}

ComplexVector FractionalLaplacian::apply(std::span<const Complex> f) const {
  auto out = op_.apply(f);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] *= prefactors_[j];
  return out;
}

}  // namespace fraclap
