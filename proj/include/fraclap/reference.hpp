#pragma once

#include <cstdint>
#include <span>

#include "fraclap/types.hpp"

namespace fraclap {

/// Error of a computed fractional Laplacian against an exact one.
struct ErrorReport {
  double l2 = 0.0;            ///< sqrt(mean |e_j|^2)
  double linf = 0.0;          ///< max |e_j|
  double l2_euclidean = 0.0;  ///< sqrt(sum |e_j|^2), the unnormalized norm
  std::int64_t N = 0;
  std::int64_t r = 0;
  double alpha = 0.0;
};

/// Throws ShapeError on length mismatch or empty input.
ErrorReport error_norms(std::span<const Complex> approx, std::span<const Complex> exact,
                        std::int64_t r = 0, double alpha = 0.0);

/// u(x) = (ix - 1)/(ix + 1), which is exp(2is) under x = cot(s).
Complex rational_u(double x);
Complex rational_uxx(double x);

/// (-Delta)^(alpha/2) (ix-1)/(ix+1) = -2 Gamma(1+alpha) / (ix + 1)^(1+alpha).
Complex exact_rational_at(double alpha, double x);

/// exact_rational_at(alpha, cot(s)); s must lie in (0, pi).
Complex exact_rational(double alpha, double s);

/// (-Delta)^(alpha/2) erf(x) = 2^(1+alpha)/pi Gamma((1+alpha)/2) x 1F1((1+alpha)/2; 3/2; -x^2).
double exact_erf(double alpha, double x);

/// Kummer's confluent hypergeometric function 1F1(a; b; z) for z <= 0 and
/// a, b > 0.
///
/// Strategy, with t = -z:
///  - t <= 40: Kummer's transformation 1F1(a;b;-t) = e^{-t} 1F1(b-a;b;t).
///    When b - a > 0 every term of the transformed series is positive, so
///    there is no cancellation; otherwise only the first few terms change
///    sign. A nonpositive integer b - a makes the series terminate, and it
///    is then used for every t.
///  - t > 40: the large-argument expansion
///    Gamma(b)/Gamma(b-a) t^{-a} sum_n (a)_n (a-b+1)_n / n! t^{-n},
///    truncated at its smallest term. The exponentially small companion term
///    is below 1e-15 relative there and is dropped.
/// a == b returns exp(z). Throws NumericError when a series fails to
/// converge or the parameters fall outside the supported set.
double kummer_1f1(double a, double b, double z);

}  // namespace fraclap
