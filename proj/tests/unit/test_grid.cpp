#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "fraclap/errors.hpp"
#include "fraclap/grid.hpp"

using namespace fraclap;
using std::numbers::pi;

TEST_CASE("output nodes") {
  CHECK(output_nodes(GridSpec(1, 1, 1.0)) == std::vector<double>{pi / 2});
  const auto two = output_nodes(GridSpec(2, 3, 1.0));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == doctest::Approx(pi / 4).epsilon(1e-16));
  CHECK(two[1] == doctest::Approx(3 * pi / 4).epsilon(1e-16));
  CHECK(output_nodes(GridSpec(4, 1, 1.0))[3] == doctest::Approx(7 * pi / 8).epsilon(1e-16));
}

TEST_CASE("midpoint nodes") {
  const std::vector<double> quarter{pi / 4, 3 * pi / 4};
  const auto a = midpoint_nodes(GridSpec(1, 1, 1.0));
  REQUIRE(a.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) CHECK(a[i] == doctest::Approx(quarter[i]).epsilon(1e-16));

  // N=2, r=1 and N=1, r=2 both split (0, pi) into four cells
  for (auto g : {GridSpec(2, 1, 1.0), GridSpec(1, 2, 1.0)}) {
    const auto m = midpoint_nodes(g);
    REQUIRE(m.size() == 4);
    for (int n = 0; n < 4; ++n) CHECK(m[n] == doctest::Approx((2 * n + 1) * pi / 8).epsilon(1e-16));
  }
}

TEST_CASE("h_r * 2rN reproduces pi") {
  for (std::int64_t N : {1, 3, 128, 10000019}) {
    for (std::int64_t r : {1, 7, 64}) {
      const GridSpec g(N, r, 1.0);
      CHECK(std::abs(g.h() * static_cast<double>(g.cells()) - pi) <= 4 * std::numeric_limits<double>::epsilon());
    }
  }
}

TEST_CASE("cell boundary (2j+1)r coincides with s_j") {
  for (std::int64_t N : {1, 5, 64}) {
    for (std::int64_t r : {1, 2, 3, 8}) {
      const GridSpec g(N, r, 1.0);
      const auto s = output_nodes(g);
      for (std::int64_t j = 0; j < N; ++j) {
        CHECK(cell_node(g, (2 * j + 1) * r) == s[j]);
        CHECK(index_sign((2 * j + 1) * r, j, r) == 0);
      }
    }
  }
}

TEST_CASE("output nodes are mirror symmetric about pi/2") {
  for (std::int64_t N : {1, 2, 9, 256, 1001}) {
    const auto s = output_nodes(GridSpec(N, 1, 1.0));
    for (std::int64_t j = 0; j < N; ++j) {
      CHECK(std::abs(s[N - 1 - j] - (pi - s[j])) <= 4 * std::numeric_limits<double>::epsilon());
      if (j > 0) CHECK(s[j] > s[j - 1]);
      CHECK(s[j] > 0.0);
      CHECK(s[j] < pi);
    }
  }
}

TEST_CASE("map_to_real") {
  CHECK(std::abs(map_to_real(pi / 2, 1.0)) < 1e-16);
  CHECK(map_to_real(pi / 4, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(map_to_real(pi / 4, 2.1) == doctest::Approx(2.1).epsilon(1e-15));
  // monotone decreasing
  double prev = map_to_real(1e-3, 1.5);
  for (int k = 1; k < 1000; ++k) {
    const double s = 1e-3 + k * (pi - 2e-3) / 1000;
    const double x = map_to_real(s, 1.5);
    CHECK(x < prev);
    prev = x;
  }
  CHECK_THROWS_AS(map_to_real(0.0, 1.0), ParameterError);
  CHECK_THROWS_AS(map_to_real(pi, 1.0), ParameterError);
  CHECK_THROWS_AS(map_to_real(-0.5, 1.0), ParameterError);
}

TEST_CASE("map_from_real inverts map_to_real") {
  for (double s : {1e-6, 0.1, 1.0, pi / 2, 2.0, 3.1}) {
    for (double L : {0.5, 1.0, 200.0}) {
      CHECK(map_from_real(map_to_real(s, L), L) == doctest::Approx(s).epsilon(1e-14));
    }
  }
}

TEST_CASE("index_sign") {
  CHECK(index_sign(3, 1, 1) == 0);
  CHECK(index_sign(2, 1, 1) == -1);
  CHECK(index_sign(4, 1, 1) == 1);
  // agrees with the sign of the floating-point node difference away from ties
  const GridSpec g(7, 3, 1.0);
  const auto s = output_nodes(g);
  for (std::int64_t n = 0; n <= g.cells(); ++n) {
    for (std::int64_t j = 0; j < g.N(); ++j) {
      const double d = cell_node(g, n) - s[j];
      const int expect = n == (2 * j + 1) * g.r() ? 0 : (d > 0 ? 1 : -1);
      CHECK(index_sign(n, j, g.r()) == expect);
    }
  }
}

TEST_CASE("GridSpec validation") {
  CHECK_THROWS_AS(GridSpec(0, 1, 1.0), ParameterError);
  CHECK_THROWS_AS(GridSpec(-3, 1, 1.0), ParameterError);
  CHECK_THROWS_AS(GridSpec(4, 0, 1.0), ParameterError);
  CHECK_THROWS_AS(GridSpec(4, 1, 0.0), ParameterError);
  CHECK_THROWS_AS(GridSpec(4, 1, -1.0), ParameterError);
  CHECK_THROWS_AS(GridSpec(4, 1, std::numeric_limits<double>::quiet_NaN()), ParameterError);
  CHECK_THROWS_AS(GridSpec(4, 1, std::numeric_limits<double>::infinity()), ParameterError);
  CHECK_THROWS_AS(GridSpec(std::int64_t{1} << 40, std::int64_t{1} << 20, 1.0), ParameterError);
  const GridSpec g(5, 3, 2.5);
  CHECK(g.cells() == 30);
  CHECK(g.h() == doctest::Approx(pi / 30).epsilon(1e-16));
}

TEST_CASE("pi_fraction reduces before multiplying") {
  CHECK(pi_fraction(2, 4) == pi_fraction(1, 2));
  CHECK(pi_fraction(6, 8) == pi_fraction(3, 4));
  CHECK(pi_fraction(0, 5) == 0.0);
}
