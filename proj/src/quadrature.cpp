#include "fraclap/quadrature.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "fraclap/errors.hpp"

namespace fraclap {

namespace {

// x^p for x >= 0; 0^p = 0 for p > 0.
double power(double x, double p) {
  if (x == 0.0) return 0.0;
  return std::exp(p * std::log(x));
}

}  // namespace

SingularParams::SingularParams(double beta_, double gamma_) : beta(beta_), gamma(gamma_) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw ParameterError("beta must be > 0, got " + std::to_string(beta));
  }
  if (!(gamma > -1.0) || !std::isfinite(gamma)) {
    throw ParameterError("gamma must be > -1, got " + std::to_string(gamma));
  }
}

MidpointSamples::MidpointSamples(GridSpec grid, ComplexVector values)
    : grid_(grid), values_(std::move(values)) {
  if (static_cast<std::int64_t>(values_.size()) != grid_.cells()) {
    throw ShapeError("midpoint samples: expected " + std::to_string(grid_.cells()) +
                     " values, got " + std::to_string(values_.size()));
  }
}

double sinc(double z) noexcept {
  if (std::abs(z) < 1e-8) return 1.0 - z * z / 6.0;
  return std::sin(z) / z;
}

Complex modified_midpoint(std::span<const Complex> f_mid, double a, double b, double beta) {
  if (f_mid.empty()) throw ShapeError("modified_midpoint: no samples");
  if (!(b > a) || a < 0.0) throw ParameterError("modified_midpoint: need 0 <= a < b");
  if (beta == -1.0) throw ParameterError("modified_midpoint: beta = -1 is not supported");
  if (a == 0.0 && beta < -1.0) throw ParameterError("modified_midpoint: beta must exceed -1 when a = 0");

  const double h = (b - a) / static_cast<double>(f_mid.size());
  Complex sum{};
  for (std::size_t n = 0; n < f_mid.size(); ++n) {
    const double lo = a + h * static_cast<double>(n);
    const double hi = a + h * static_cast<double>(n + 1);
    sum += signed_power_difference(hi, lo, beta, 1, lo == 0.0 ? 0 : 1) * f_mid[n];
  }
  return sum;
}

double signed_power_bracket(double x_next, double x_prev, double exponent, int sign_next,
                            int sign_prev) noexcept {
  const double a = std::abs(x_next);
  const double b = std::abs(x_prev);
  if (sign_next != 0 && sign_next == sign_prev && a > 0.0 && b > 0.0) {
    // s (a^e - b^e) = s b^e expm1(e log1p((a - b)/b)); a - b is exact when
    // the endpoints are within a factor two of each other.
    return sign_next * power(b, exponent) * std::expm1(exponent * std::log1p((a - b) / b));
  }
  return sign_next * power(a, exponent) - sign_prev * power(b, exponent);
}

double signed_power_difference(double x_next, double x_prev, double gamma, int sign_next,
                               int sign_prev) {
  if (gamma == -1.0) throw ParameterError("signed_power_difference: gamma = -1 is not supported");
  const double p = gamma + 1.0;
  return signed_power_bracket(x_next, x_prev, p, sign_next, sign_prev) / p;
}

ComplexVector singular_integral_direct(const MidpointSamples& F, const SingularParams& p) {
  const GridSpec& g = F.grid();
  const std::int64_t N = g.N();
  const std::int64_t r = g.r();
  const std::int64_t rN = r * N;
  const std::int64_t cells = g.cells();
  const double h = g.h();
  const auto f = F.values();

  // Weight of the sin^beta factor per cell, independent of j.
  std::vector<double> beta_weight(static_cast<std::size_t>(cells));
  for (std::int64_t n = 0; n < cells; ++n) {
    const double mid = h * (static_cast<double>(n) + 0.5);
    if (n < rN) {
      // (sin(s)/s)^beta * (s_{n+1}^{beta+1} - s_n^{beta+1}) / (beta+1)
      const double lo = h * static_cast<double>(n);
      const double hi = h * static_cast<double>(n + 1);
      beta_weight[n] = std::pow(sinc(mid), p.beta) *
                       signed_power_difference(hi, lo, p.beta, 1, n == 0 ? 0 : 1);
    } else {
      // (sin(s)/(pi - s))^beta * ((pi - s_n)^{beta+1} - (pi - s_{n+1})^{beta+1}) / (beta+1)
      const double dist_mid = h * (static_cast<double>(cells - n) - 0.5);
      const double dist_lo = h * static_cast<double>(cells - n);
      const double dist_hi = h * static_cast<double>(cells - n - 1);
      beta_weight[n] = std::pow(sinc(dist_mid), p.beta) *
                       signed_power_difference(dist_lo, dist_hi, p.beta, 1,
                                               n + 1 == cells ? 0 : 1);
    }
  }

  ComplexVector out(static_cast<std::size_t>(N));
  for (std::int64_t j = 0; j < N; ++j) {
    const std::int64_t centre = (2 * j + 1) * r;  // s_j = s~_centre
    Complex acc{};
    for (std::int64_t n = 0; n < cells; ++n) {
      const double mid_offset = h * (static_cast<double>(n - centre) + 0.5);
      const double next_offset = h * static_cast<double>(n + 1 - centre);
      const double prev_offset = h * static_cast<double>(n - centre);
      const double gamma_weight =
          std::pow(sinc(mid_offset), p.gamma) *
          signed_power_difference(next_offset, prev_offset, p.gamma, index_sign(n + 1, j, r),
                                  index_sign(n, j, r));
      acc += beta_weight[n] * gamma_weight * f[n];
    }
    out[j] = acc / h;
  }
  return out;
}

}  // namespace fraclap
