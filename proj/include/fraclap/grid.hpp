#pragma once

#include <cstdint>
#include <vector>

namespace fraclap {

/// Discretization of (0, pi): N output nodes s_j = (2j+1)pi/(2N) and 2rN
/// quadrature cells of width h_r = pi/(2rN). L scales the map x = L cot(s).
class GridSpec {
 public:
  GridSpec(std::int64_t N, std::int64_t r, double L);

  std::int64_t N() const noexcept { return n_; }
  std::int64_t r() const noexcept { return r_; }
  double L() const noexcept { return l_; }
  double h() const noexcept { return h_; }

  /// Number of quadrature cells, 2rN.
  std::int64_t cells() const noexcept { return 2 * r_ * n_; }

 private:
  std::int64_t n_;
  std::int64_t r_;
  double l_;
  double h_;
};

/// num * pi / den with the fraction reduced first, so equal rationals give
/// bit-identical doubles.
double pi_fraction(std::int64_t num, std::int64_t den);

/// s_j = (2j+1)pi/(2N), j = 0..N-1.
std::vector<double> output_nodes(const GridSpec& g);

/// Midpoints h_r(n+1/2), n = 0..2rN-1.
std::vector<double> midpoint_nodes(const GridSpec& g);

/// Cell boundary h_r * n.
double cell_node(const GridSpec& g, std::int64_t n);

/// x = L cot(s) for s in (0, pi). Throws ParameterError outside.
double map_to_real(double s, double L);

/// Inverse of map_to_real, branch in (0, pi).
double map_from_real(double x, double L);

/// sgn(n - (2j+1)r) in integer arithmetic; the sign of s~_n - s_j.
int index_sign(std::int64_t n, std::int64_t j, std::int64_t r) noexcept;

}  // namespace fraclap
