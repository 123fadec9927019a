#include "fraclap/fastconv.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fraclap/errors.hpp"

namespace fraclap {

namespace {

int sign_of(std::int64_t v) { return (v > 0) - (v < 0); }

// Everything in here works in index units: a node h_r * k is passed around as
// the integer k and only turned into an angle where a sine needs it.
struct Layout {
  explicit Layout(const GridSpec& g, const SingularParams& p)
      : N(g.N()), r(g.r()), rN(g.r() * g.N()), nrows(padded_rows(g.N())), h(g.h()), params(p) {}

  std::int64_t N;
  std::int64_t r;
  std::int64_t rN;
  std::int64_t nrows;
  double h;
  SingularParams params;
};

// sinc^beta * [(n+1)^{beta+1} - n^{beta+1}] for the left half (which == 1),
// or the mirrored factor with rN - n for the right half (which == 2).
double k_weight(const Layout& lay, int which, std::int64_t n) {
  const double beta = lay.params.beta;
  const double e = beta + 1.0;
  if (which == 1) {
    const double s = std::pow(sinc(lay.h * (static_cast<double>(n) + 0.5)), beta);
    return s * signed_power_bracket(static_cast<double>(n + 1), static_cast<double>(n), e, 1,
                                    sign_of(n));
  }
  // sin(h(rN + n + 1/2)) / (h(rN - n - 1/2)) is sinc of the distance to pi.
  const std::int64_t far = lay.rN - n;  // pi - s~_{rN+n} in units of h
  const double s = std::pow(sinc(lay.h * (static_cast<double>(far) - 0.5)), beta);
  return s * signed_power_bracket(static_cast<double>(far), static_cast<double>(far - 1), e, 1,
                                  sign_of(far - 1));
}

// L(m, q) with offset a = base - 2rm, base = q - r (L1) or rN + q - r (L2):
// sinc(h(a + 1/2))^gamma * [sgn(a+1)|a+1|^{gamma+1} - sgn(a)|a|^{gamma+1}].
double l_value(const Layout& lay, int which, std::int64_t m, std::int64_t q) {
  const std::int64_t base = (which == 1 ? 0 : lay.rN) + q - lay.r;
  const std::int64_t a = base - 2 * lay.r * m;
  const double gamma = lay.params.gamma;
  const double s = std::pow(sinc(lay.h * (static_cast<double>(a) + 0.5)), gamma);
  return s * signed_power_bracket(static_cast<double>(a + 1), static_cast<double>(a), gamma + 1.0,
                                  sign_of(a + 1), sign_of(a));
}

std::int64_t active(const Layout& lay, std::int64_t q) {
  return q < lay.r ? (lay.N + 1) / 2 : lay.N / 2;
}

void fill_l_column(const Layout& lay, int which, std::int64_t q, std::span<Complex> col) {
  std::fill(col.begin(), col.end(), Complex{});
  for (std::int64_t m = 0; m < lay.N; ++m) col[m] = l_value(lay, which, m, q);
  const std::int64_t na = active(lay, q);
  for (std::int64_t m = -na + 1; m < 0; ++m) col[lay.nrows + m] = l_value(lay, which, m, q);
}

// K(m, q) = weight(n) * f(n), n = q + 2rm; the right half reads f at rN + n.
template <class Weight>
void fill_k_column(const Layout& lay, int which, std::int64_t q, std::span<const Complex> f,
                   Weight&& weight, std::span<Complex> col) {
  std::fill(col.begin(), col.end(), Complex{});
  const std::int64_t na = active(lay, q);
  const std::int64_t offset = which == 1 ? 0 : lay.rN;
  for (std::int64_t m = 0; m < na; ++m) {
    const std::int64_t n = q + 2 * lay.r * m;
    col[m] = weight(n) * f[offset + n];
  }
}

double output_scale(const Layout& lay) {
  const double beta = lay.params.beta;
  const double gamma = lay.params.gamma;
  return std::pow(lay.h, beta + gamma + 1.0) / ((beta + 1.0) * (gamma + 1.0));
}

void check_length(const GridSpec& g, std::size_t len) {
  if (static_cast<std::int64_t>(len) != g.cells()) {
    throw ShapeError("fast convolution: expected " + std::to_string(g.cells()) +
                     " midpoint samples, got " + std::to_string(len));
  }
}

}  // namespace

std::int64_t padded_rows(std::int64_t N) {
  const std::int64_t needed = (N + 1) / 2 + N - 1;
  const auto rows = static_cast<std::int64_t>(dft::next_power_of_two(static_cast<std::size_t>(needed)));
  return std::max<std::int64_t>(rows, 2);
}

std::int64_t active_rows(const GridSpec& g, std::int64_t q) {
  return q < g.r() ? (g.N() + 1) / 2 : g.N() / 2;
}

KernelColumns build_kernels(const MidpointSamples& F, const SingularParams& p) {
  const Layout lay(F.grid(), p);
  const std::int64_t cols = 2 * lay.r;
  KernelColumns k;
  k.nrows = lay.nrows;
  k.K1 = ColumnMatrix(lay.nrows, cols);
  k.K2 = ColumnMatrix(lay.nrows, cols);
  k.L1 = ColumnMatrix(lay.nrows, cols);
  k.L2 = ColumnMatrix(lay.nrows, cols);
  const auto f = F.values();
  for (std::int64_t q = 0; q < cols; ++q) {
    fill_k_column(lay, 1, q, f, [&](std::int64_t n) { return k_weight(lay, 1, n); }, k.K1.column(q));
    fill_k_column(lay, 2, q, f, [&](std::int64_t n) { return k_weight(lay, 2, n); }, k.K2.column(q));
    fill_l_column(lay, 1, q, k.L1.column(q));
    fill_l_column(lay, 2, q, k.L2.column(q));
  }
  return k;
}

ComplexVector fast_singular_integral(const MidpointSamples& F, const SingularParams& p) {
  const Layout lay(F.grid(), p);
  const auto f = F.values();
  const dft::Plan plan(static_cast<std::size_t>(lay.nrows));
  ComplexVector acc(static_cast<std::size_t>(lay.nrows));
  ComplexVector kcol(acc.size());
  ComplexVector lcol(acc.size());

  for (std::int64_t q = 0; q < 2 * lay.r; ++q) {
    for (int which : {1, 2}) {
      fill_k_column(lay, which, q, f, [&](std::int64_t n) { return k_weight(lay, which, n); }, kcol);
      fill_l_column(lay, which, q, lcol);
      plan.forward_permuted(kcol);
      plan.forward_permuted(lcol);
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += kcol[i] * lcol[i];
    }
  }
  plan.inverse_permuted(acc);

  const double scale = output_scale(lay);
  ComplexVector out(static_cast<std::size_t>(lay.N));
  for (std::int64_t j = 0; j < lay.N; ++j) out[j] = scale * acc[j];
  return out;
}

SingularIntegralOperator::SingularIntegralOperator(const GridSpec& g, const SingularParams& p)
    : grid_(g),
      params_(p),
      nrows_(padded_rows(g.N())),
      plan_(static_cast<std::size_t>(nrows_)),
      l1_hat_(nrows_, 2 * g.r()),
      l2_hat_(nrows_, 2 * g.r()) {
  const Layout lay(g, p);
  k1_weight_.resize(static_cast<std::size_t>(lay.rN));
  k2_weight_.resize(static_cast<std::size_t>(lay.rN));
  for (std::int64_t n = 0; n < lay.rN; ++n) {
    k1_weight_[n] = k_weight(lay, 1, n);
    k2_weight_[n] = k_weight(lay, 2, n);
  }
  for (std::int64_t q = 0; q < 2 * lay.r; ++q) {
    fill_l_column(lay, 1, q, l1_hat_.column(q));
    fill_l_column(lay, 2, q, l2_hat_.column(q));
    plan_.forward_permuted(l1_hat_.column(q));
    plan_.forward_permuted(l2_hat_.column(q));
  }
}

ComplexVector SingularIntegralOperator::apply(std::span<const Complex> f) const {
  check_length(grid_, f.size());
  const Layout lay(grid_, params_);
  ComplexVector acc(static_cast<std::size_t>(nrows_));
  ComplexVector kcol(acc.size());
  for (std::int64_t q = 0; q < 2 * lay.r; ++q) {
    for (int which : {1, 2}) {
      const auto& weights = which == 1 ? k1_weight_ : k2_weight_;
      fill_k_column(lay, which, q, f, [&](std::int64_t n) { return weights[n]; }, kcol);
      plan_.forward_permuted(kcol);
      const auto lhat = (which == 1 ? l1_hat_ : l2_hat_).column(q);
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += kcol[i] * lhat[i];
    }
  }
  plan_.inverse_permuted(acc);

  const double scale = output_scale(lay);
  ComplexVector out(static_cast<std::size_t>(lay.N));
  for (std::int64_t j = 0; j < lay.N; ++j) out[j] = scale * acc[j];
  return out;
}

}  // namespace fraclap
