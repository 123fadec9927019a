#include <doctest.h>

#include <boost/math/special_functions/hypergeometric_1F1.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "fraclap/errors.hpp"
#include "fraclap/reference.hpp"
#include "oracles.hpp"

using namespace fraclap;
using std::numbers::pi;

TEST_CASE("error norms") {
  const ComplexVector a{1.0, Complex{2.0, 1.0}};
  const auto same = error_norms(a, a);
  CHECK(same.l2 == 0.0);
  CHECK(same.linf == 0.0);

  const auto three = error_norms(ComplexVector{4.0}, ComplexVector{1.0});
  CHECK(three.l2 == 3.0);
  CHECK(three.linf == 3.0);

  const auto ones = error_norms(ComplexVector{1.0, 1.0}, ComplexVector{0.0, 0.0}, 4, 0.3);
  CHECK(ones.l2 == doctest::Approx(1.0));
  CHECK(ones.linf == 1.0);
  CHECK(ones.l2_euclidean == doctest::Approx(std::sqrt(2.0)));
  CHECK(ones.N == 2);
  CHECK(ones.r == 4);
  CHECK(ones.alpha == 0.3);

  CHECK_THROWS_AS(error_norms(ComplexVector{1.0}, ComplexVector{1.0, 2.0}), ShapeError);
  CHECK_THROWS_AS(error_norms(ComplexVector{}, ComplexVector{}), ShapeError);
}

TEST_CASE("l2 never exceeds linf") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = oracle::random_complex(1 + seed * 7, seed);
    const auto b = oracle::random_complex(1 + seed * 7, seed + 100);
    const auto e = error_norms(a, b);
    CHECK(e.l2 >= 0.0);
    CHECK(e.l2 <= e.linf);
  }
}

TEST_CASE("exact rational solution") {
  CHECK(std::abs(exact_rational(1.0, pi / 2) - Complex{-2.0}) < 1e-15);
  for (double a : {0.3, 1.3, 1.9}) {
    CHECK(std::abs(exact_rational(a, pi / 2) - Complex{-2.0 * std::tgamma(1.0 + a)}) < 1e-14);
  }
  CHECK_THROWS_AS(exact_rational(1.3, 0.0), ParameterError);
  CHECK_THROWS_AS(exact_rational(1.3, pi), ParameterError);
  CHECK_THROWS_AS(exact_rational_at(2.0, 1.0), ParameterError);
}

TEST_CASE("rational test function is e^{2is} under x = cot(s)") {
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> dist(1e-3, pi - 1e-3);
  for (int i = 0; i < 100; ++i) {
    const double s = dist(gen);
    CHECK(std::abs(rational_u(std::cos(s) / std::sin(s)) - std::exp(Complex{0.0, 2.0 * s})) < 1e-13);
  }
  // u_xx by central differences of u_x
  for (double x : {-3.0, 0.0, 0.7}) {
    const double h = 1e-4;
    auto ux = [](double t) { return 2.0 * Complex{0.0, 1.0} / std::pow(Complex{1.0, t}, 2); };
    CHECK(std::abs(rational_uxx(x) - (ux(x + h) - ux(x - h)) / (2 * h)) < 1e-7);
  }
}

TEST_CASE("exact solutions against quadrature of the integral form") {
  CHECK(std::abs(exact_rational(1.3, pi / 4) - oracle::fraclap_rational(1.3, 1.0)) < 1e-8);
  CHECK(std::abs(exact_erf(0.9, 1.0) - oracle::fraclap_erf(0.9, 1.0)) < 1e-8);
  // the 1F1 case a = 0.95, b = 1.5, z = -4 through exact_erf at x = 2
  CHECK(std::abs(exact_erf(0.9, 2.0) - oracle::fraclap_erf(0.9, 2.0)) < 1e-8);
  for (double a : {0.1, 0.7, 1.5, 1.99}) {
    for (double x : {-4.5, -0.3, 0.0, 2.2, 9.0}) {
      CAPTURE(a);
      CAPTURE(x);
      CHECK(std::abs(exact_rational_at(a, x) - oracle::fraclap_rational(a, x)) < 1e-8);
      CHECK(std::abs(exact_erf(a, x) - oracle::fraclap_erf(a, x)) < 1e-8);
    }
  }
}

TEST_CASE("exact erf symmetry") {
  CHECK(exact_erf(0.9, 0.0) == 0.0);
  for (double x : {0.1, 1.0, 5.0, 30.0, 300.0}) CHECK(exact_erf(1.2, -x) == -exact_erf(1.2, x));
  CHECK_THROWS_AS(exact_erf(0.0, 1.0), ParameterError);
}

TEST_CASE("Kummer 1F1 special values") {
  CHECK(kummer_1f1(0.95, 1.5, 0.0) == 1.0);
  for (double z : {-0.5, -10.0, -100.0}) CHECK(kummer_1f1(1.25, 1.25, z) == doctest::Approx(std::exp(z)).epsilon(1e-15));
  CHECK_THROWS_AS(kummer_1f1(0.5, 1.5, 1.0), NumericError);
  CHECK_THROWS_AS(kummer_1f1(-0.5, 1.5, -1.0), NumericError);
}

TEST_CASE("Kummer 1F1 against Boost") {
  for (double a : {0.505, 0.75, 0.95, 1.15, 1.495}) {
    for (double t : {1e-6, 0.3, 4.0, 25.0, 39.9, 40.1, 55.0, 150.0, 900.0, 1e4, 1e6}) {
      const double ref = boost::math::hypergeometric_1F1(a, 1.5, -t);
      CAPTURE(a);
      CAPTURE(t);
      CHECK(kummer_1f1(a, 1.5, -t) == doctest::Approx(ref).epsilon(1e-10));
    }
  }
}

TEST_CASE("Kummer 1F1 is continuous across the method switch") {
  for (double a : {0.6, 1.3}) {
    const double lo = kummer_1f1(a, 1.5, -40.0);
    const double hi = kummer_1f1(a, 1.5, -std::nextafter(40.0, 41.0));
    CHECK(lo == doctest::Approx(hi).epsilon(1e-12));
  }
}
