#include "oracles.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

namespace bq = boost::math::quadrature;
constexpr double kPi = boost::math::constants::pi<double>();

ComplexVector direct_dft(std::span<const Complex> v, bool inverse) {
  const std::size_t M = v.size();
  ComplexVector out(M);
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t p = 0; p < M; ++p) {
    Complex acc = 0.0;
    for (std::size_t m = 0; m < M; ++m) {
      // reduce m*p mod M in integers before the angle is formed
      const double angle = sign * 2.0 * kPi * static_cast<double>((m * p) % M) / static_cast<double>(M);
      acc += v[m] * Complex{std::cos(angle), std::sin(angle)};
    }
    out[p] = inverse ? acc / static_cast<double>(M) : acc;
  }
  return out;
}

ComplexVector cyclic_convolution(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw std::invalid_argument("cyclic_convolution: length mismatch");
  const std::size_t M = a.size();
  ComplexVector out(M);
  for (std::size_t m = 0; m < M; ++m) {
    for (std::size_t k = 0; k < M; ++k) out[m] += a[k] * b[(m + M - k) % M];
  }
  return out;
}

ComplexVector random_complex(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexVector out(n);
  for (auto& z : out) {
    const double re = dist(gen);
    z = {re, dist(gen)};
  }
  return out;
}

double c_alpha(double alpha) {
  return alpha * std::pow(2.0, alpha - 1.0) * boost::math::tgamma(0.5 + 0.5 * alpha) /
         (std::sqrt(kPi) * boost::math::tgamma(1.0 - 0.5 * alpha));
}

namespace {

template <typename F>
Complex split_integrate(F&& integrate_real) {
  return {integrate_real([](Complex z) { return z.real(); }), integrate_real([](Complex z) { return z.imag(); })};
}

}  // namespace

Complex fraclap_integral(double alpha, double x, const CFun& ux, const CFun& uxx) {
  // y in [0, 1]: y^(1-alpha) G(y), G(y) = int_{-1}^{1} u_xx(x + y t) dt.
  auto G = [&](double y) {
    return split_integrate([&](auto part) {
      return bq::gauss<double, 30>::integrate([&](double t) { return part(uxx(x + y * t)); }, -1.0, 1.0);
    });
  };
  // G(0) = 2 u_xx(x) is integrated in closed form; for alpha near 2 most of
  // the mass of y^(1-alpha) sits below the smallest double.
  const Complex G0 = 2.0 * uxx(x);
  bq::tanh_sinh<double> ts;
  const Complex near = G0 / (2.0 - alpha) + split_integrate([&](auto part) {
    return ts.integrate([&](double y) { return y <= 0.0 ? 0.0 : std::pow(y, 1.0 - alpha) * part(G(y) - G0); },
                        0.0, 1.0, 1e-14);
  });

  // y >= 1: the difference has no cancellation left.
  auto D = [&](double y) { return (ux(x - y) - ux(x + y)) / std::pow(y, alpha); };
  std::vector<double> cuts{1.0};
  const double ax = std::abs(x);
  for (double c : {ax - 2.0, ax + 2.0, ax + 40.0}) {
    if (c > cuts.back()) cuts.push_back(c);
  }
  Complex far = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    far += split_integrate([&](auto part) {
      return bq::gauss_kronrod<double, 61>::integrate([&](double y) { return part(D(y)); }, cuts[i], cuts[i + 1],
                                                      20, 1e-14);
    });
  }
  bq::exp_sinh<double> es;
  const double tail_start = cuts.back();
  far += split_integrate([&](auto part) {
    return es.integrate([&](double y) { return part(D(tail_start + y)); }, 0.0,
                        std::numeric_limits<double>::infinity(), 1e-14);
  });

  return c_alpha(alpha) / alpha * (far - near);
}

Complex fraclap_rational(double alpha, double x) {
  // u = (ix-1)/(ix+1) = 1 - 2/(1+ix)
  auto ux = [](double t) { return 2.0 * Complex{0.0, 1.0} / std::pow(Complex{1.0, t}, 2); };
  auto uxx = [](double t) { return 4.0 / std::pow(Complex{1.0, t}, 3); };
  return fraclap_integral(alpha, x, ux, uxx);
}

double fraclap_erf(double alpha, double x) {
  const double k = 2.0 / std::sqrt(kPi);
  auto ux = [k](double t) { return Complex{k * std::exp(-t * t), 0.0}; };
  auto uxx = [k](double t) { return Complex{-2.0 * t * k * std::exp(-t * t), 0.0}; };
  return fraclap_integral(alpha, x, ux, uxx).real();
}

Complex erf_map_us(double s, double L) {
  const double sn = std::sin(s);
  const double x = L * std::cos(s) / sn;
  const double g = 2.0 / std::sqrt(kPi) * std::exp(-x * x);
  return g * (-L / (sn * sn));
}

Complex erf_map_uss(double s, double L) {
  const double sn = std::sin(s);
  const double x = L * std::cos(s) / sn;
  const double g = 2.0 / std::sqrt(kPi) * std::exp(-x * x);
  return g * (-2.0 * x * L * L / std::pow(sn, 4) + 2.0 * L * std::cos(s) / std::pow(sn, 3));
}

double loglog_slope(std::span<const double> n, std::span<const double> err) {
  const std::size_t m = n.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double lx = std::log(n[i]);
    const double ly = std::log(err[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

double max_abs(std::span<const Complex> v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_abs_diff: length mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace oracle
