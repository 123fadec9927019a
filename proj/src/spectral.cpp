#include "fraclap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "fraclap/dft.hpp"
#include "fraclap/errors.hpp"

namespace fraclap {

namespace {

// exp(i pi num / den)
Complex phase(std::int64_t num, std::int64_t den) {
  const double a = pi_fraction(num, den);
  return {std::cos(a), std::sin(a)};
}

}  // namespace

SpectralCoefficients::SpectralCoefficients(ComplexVector coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_.size() % 2 != 0) {
    throw ShapeError("spectral coefficients need an even, nonzero length; got " +
                     std::to_string(coeffs_.size()));
  }
}

std::size_t SpectralCoefficients::slot(std::int64_t k) const {
  const std::int64_t n = N();
  if (k < -n || k >= n) throw ShapeError("mode " + std::to_string(k) + " outside [-N, N)");
  return static_cast<std::size_t>(k >= 0 ? k : k + 2 * n);
}

MidpointSamples f_from_analytic(const SFunction& us, const SFunction& uss, const GridSpec& g) {
  const auto s = midpoint_nodes(g);
  ComplexVector f(s.size());
  for (std::size_t n = 0; n < s.size(); ++n) {
    f[n] = std::sin(s[n]) * uss(s[n]) + 2.0 * std::cos(s[n]) * us(s[n]);
  }
  return {g, std::move(f)};
}

MidpointSamples f_from_x_derivative(const SFunction& uxx_of_x, const GridSpec& g) {
  const auto s = midpoint_nodes(g);
  const double L = g.L();
  ComplexVector f(s.size());
  for (std::size_t n = 0; n < s.size(); ++n) {
    const double sn = std::sin(s[n]);
    f[n] = L * L * uxx_of_x(map_to_real(s[n], L)) / (sn * sn * sn);
  }
  return {g, std::move(f)};
}

namespace {

SpectralCoefficients periodic_coefficients(std::span<const Complex> u_vals, const dft::Plan& plan) {
  const auto two_n = static_cast<std::int64_t>(u_vals.size());
  const std::int64_t n = two_n / 2;
  ComplexVector c(u_vals.begin(), u_vals.end());
  plan.forward(c);
  const double scale = 1.0 / static_cast<double>(two_n);
  for (std::int64_t p = 0; p < two_n; ++p) {
    const std::int64_t k = p < n ? p : p - two_n;
    c[p] *= phase(-k, two_n) * scale;  // exp(-i k pi / (2N)) / (2N)
  }
  return SpectralCoefficients(std::move(c));
}

ComplexVector even_extension(std::span<const Complex> u_vals) {
  if (u_vals.empty()) throw ShapeError("coefficients_from_samples: no samples");
  const std::size_t n = u_vals.size();
  ComplexVector ext(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    ext[j] = u_vals[j];
    ext[2 * n - 1 - j] = u_vals[j];
  }
  return ext;
}

SpectralCoefficients filtered(SpectralCoefficients c) {
  const double threshold = default_krasny_threshold(c);
  return krasny_filter(std::move(c), threshold);
}

// Slot p of the length-4rN buffer carries mode k = p (p < 2rN) or p - 4rN;
// only -N <= k < N are nonzero after padding.
MidpointDerivatives midpoint_derivatives(const SpectralCoefficients& c, const GridSpec& g,
                                         const dft::Plan& plan) {
  if (c.N() != g.N()) {
    throw ShapeError("derivatives_at_midpoints: coefficients have N = " + std::to_string(c.N()) +
                     ", grid has N = " + std::to_string(g.N()));
  }
  const std::int64_t n = g.N();
  const std::int64_t half = g.cells();  // 2rN
  const std::int64_t m = 2 * half;      // 4rN
  const auto scale = static_cast<double>(m);  // undo the 1/M of the inverse

  auto transform = [&](int order) {
    ComplexVector buf(static_cast<std::size_t>(m));
    for (std::int64_t k = -n; k < n; ++k) {
      const Complex uk = c.at(k);
      if (uk == Complex{}) continue;
      const auto kd = static_cast<double>(k);
      const Complex factor = order == 1 ? Complex{0.0, kd} : Complex{-kd * kd, 0.0};
      buf[k >= 0 ? k : k + m] = factor * uk * phase(k, m);  // exp(i k pi / (4rN))
    }
    plan.inverse(buf);
    ComplexVector out(buf.begin(), buf.begin() + half);
    for (auto& z : out) z *= scale;
    return out;
  };

  MidpointDerivatives d;
  d.us = transform(1);
  d.uss = transform(2);
  return d;
}

MidpointSamples assemble_f(MidpointDerivatives d, const GridSpec& g) {
  const std::int64_t cells = g.cells();
  // Reuse the u_s buffer for f.
  for (std::int64_t n = 0; n < cells; ++n) {
    const double s = pi_fraction(2 * n + 1, 2 * cells);
    d.us[n] = std::sin(s) * d.uss[n] + 2.0 * std::cos(s) * d.us[n];
  }
  d.uss = ComplexVector{};
  return {g, std::move(d.us)};
}

void check_sample_count(std::span<const Complex> u_vals, const GridSpec& g) {
  if (static_cast<std::int64_t>(u_vals.size()) != g.N()) {
    throw ShapeError("f_from_samples: expected " + std::to_string(g.N()) + " samples, got " +
                     std::to_string(u_vals.size()));
  }
}

}  // namespace

SpectralCoefficients coefficients_from_periodic_samples(std::span<const Complex> u_vals) {
  if (u_vals.empty() || u_vals.size() % 2 != 0) {
    throw ShapeError("periodic samples need an even, nonzero length; got " +
                     std::to_string(u_vals.size()));
  }
  return periodic_coefficients(u_vals, dft::Plan(u_vals.size()));
}

SpectralCoefficients coefficients_from_samples(std::span<const Complex> u_vals) {
  return filtered(coefficients_from_periodic_samples(even_extension(u_vals)));
}

double default_krasny_threshold(const SpectralCoefficients& c) {
  double peak = 0.0;
  for (const auto& z : c.raw()) peak = std::max(peak, std::abs(z));
  return std::numeric_limits<double>::epsilon() * peak;
}

SpectralCoefficients krasny_filter(SpectralCoefficients c, double threshold) {
  if (threshold < 0.0) throw ParameterError("krasny_filter: threshold must be >= 0");
  for (std::int64_t k = -c.N(); k < c.N(); ++k) {
    if (std::abs(c.at(k)) < threshold) c.at(k) = Complex{};
  }
  return c;
}

MidpointDerivatives derivatives_at_midpoints(const SpectralCoefficients& c, const GridSpec& g) {
  return midpoint_derivatives(c, g, dft::Plan(static_cast<std::size_t>(2 * g.cells())));
}

MidpointSamples f_from_samples(std::span<const Complex> u_vals, const GridSpec& g) {
  check_sample_count(u_vals, g);
  const auto coeffs = coefficients_from_samples(u_vals);
  return assemble_f(derivatives_at_midpoints(coeffs, g), g);
}

SpectralSampler::SpectralSampler(const GridSpec& g)
    : grid_(g),
      periodic_plan_(static_cast<std::size_t>(2 * g.N())),
      midpoint_plan_(static_cast<std::size_t>(2 * g.cells())) {}

SpectralCoefficients SpectralSampler::coefficients(std::span<const Complex> u_vals) const {
  check_sample_count(u_vals, grid_);
  return filtered(periodic_coefficients(even_extension(u_vals), periodic_plan_));
}

MidpointDerivatives SpectralSampler::derivatives(const SpectralCoefficients& c) const {
  return midpoint_derivatives(c, grid_, midpoint_plan_);
}

MidpointSamples SpectralSampler::f_from_samples(std::span<const Complex> u_vals) const {
  return assemble_f(derivatives(coefficients(u_vals)), grid_);
}

}  // namespace fraclap
