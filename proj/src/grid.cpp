#include "fraclap/grid.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "fraclap/errors.hpp"

namespace fraclap {

GridSpec::GridSpec(std::int64_t N, std::int64_t r, double L) : n_(N), r_(r), l_(L) {
  if (N < 1) throw ParameterError("N must be >= 1, got " + std::to_string(N));
  if (r < 1) throw ParameterError("r must be >= 1, got " + std::to_string(r));
  if (!(L > 0.0) || !std::isfinite(L)) throw ParameterError("L must be a positive finite number");
  // Spectral upsampling indexes up to 4rN; keep that well inside int64 and
  // the exactly representable integer range of a double.
  constexpr std::int64_t kMaxCells = std::int64_t{1} << 50;
  if (r > kMaxCells / (4 * N)) throw ParameterError("r*N too large for index arithmetic");
  h_ = pi_fraction(1, 2 * r_ * n_);
}

double pi_fraction(std::int64_t num, std::int64_t den) {
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return static_cast<double>(num) * std::numbers::pi / static_cast<double>(den);
}

std::vector<double> output_nodes(const GridSpec& g) {
  std::vector<double> s(static_cast<std::size_t>(g.N()));
  for (std::int64_t j = 0; j < g.N(); ++j) s[j] = pi_fraction(2 * j + 1, 2 * g.N());
  return s;
}

std::vector<double> midpoint_nodes(const GridSpec& g) {
  const std::int64_t m = g.cells();
  std::vector<double> s(static_cast<std::size_t>(m));
  for (std::int64_t n = 0; n < m; ++n) s[n] = pi_fraction(2 * n + 1, 2 * m);
  return s;
}

double cell_node(const GridSpec& g, std::int64_t n) { return pi_fraction(n, g.cells()); }

double map_to_real(double s, double L) {
  if (!(s > 0.0 && s < std::numbers::pi)) {
    throw ParameterError("map_to_real: s must lie in (0, pi), got " + std::to_string(s));
  }
  return L * std::cos(s) / std::sin(s);
}

double map_from_real(double x, double L) { return std::atan2(L, x); }

int index_sign(std::int64_t n, std::int64_t j, std::int64_t r) noexcept {
  const std::int64_t d = n - (2 * j + 1) * r;
  return (d > 0) - (d < 0);
}

}  // namespace fraclap
