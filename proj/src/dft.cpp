#include "fraclap/dft.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

#include "fraclap/errors.hpp"

namespace fraclap::dft {

namespace {

// exp(-i pi num / den) with the angle reduced to [0, 2pi) in integer
// arithmetic before it is ever rounded.
Complex unit_root(std::uint64_t num, std::uint64_t den) {
  num %= 2 * den;
  const double angle = std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
  return {std::cos(angle), -std::sin(angle)};
}

void bit_reverse(std::span<Complex> a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
}

}  // namespace

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && std::has_single_bit(n); }

std::size_t next_power_of_two(std::size_t n) noexcept { return n <= 1 ? 1 : std::bit_ceil(n); }

struct Plan::Bluestein {
  std::vector<Complex> chirp;  // exp(-i pi k^2 / n), k < n
  std::vector<Complex> kernel_hat;
  Plan inner;

  explicit Bluestein(std::size_t n) : chirp(n), inner(next_power_of_two(2 * n - 1)) {
    const std::uint64_t two_n = 2 * static_cast<std::uint64_t>(n);
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t kk = static_cast<std::uint64_t>(k);
      chirp[k] = unit_root((kk * kk) % two_n, n);
    }
    const std::size_t m = inner.size();
    kernel_hat.assign(m, Complex{});
    kernel_hat[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) {
      kernel_hat[k] = std::conj(chirp[k]);
      kernel_hat[m - k] = std::conj(chirp[k]);
    }
    inner.forward(kernel_hat);
  }

  void apply(std::span<Complex> data) const {
    const std::size_t n = chirp.size();
    const std::size_t m = inner.size();
    std::vector<Complex> work(m);
    for (std::size_t k = 0; k < n; ++k) work[k] = data[k] * chirp[k];
    inner.forward(work);
    for (std::size_t k = 0; k < m; ++k) work[k] *= kernel_hat[k];
    inner.inverse(work);
    for (std::size_t k = 0; k < n; ++k) data[k] = work[k] * chirp[k];
  }
};

Plan::Plan(std::size_t n) : n_(n) {
  if (n == 0) throw ShapeError("dft: transform length must be >= 1");
  if (is_power_of_two(n)) {
    twiddles_.resize(n - 1);
    for (std::size_t len = n; len >= 2; len /= 2) {
      for (std::size_t k = 0; k < len / 2; ++k) twiddles_[n - len + k] = unit_root(2 * k, len);
    }
  } else {
    bluestein_ = std::make_unique<Bluestein>(n);
  }
}

Plan::~Plan() = default;
Plan::Plan(Plan&&) noexcept = default;
Plan& Plan::operator=(Plan&&) noexcept = default;

// Decimation in frequency, depth first: once a block fits in cache every
// later stage on it stays there. Output is in bit-reversed order.
void Plan::radix2(std::span<Complex> a) const {
  dif(a.data(), a.size());
  bit_reverse(a);
}

void Plan::dif(Complex* p, std::size_t len) const {
  const std::size_t half = len / 2;
  const Complex* w = twiddles_.data() + (n_ - len);
  for (std::size_t k = 0; k < half; ++k) {
    const Complex u = p[k];
    const Complex v = p[k + half];
    p[k] = u + v;
    // Written out to avoid the NaN/Inf handling in operator*.
    const double dr = u.real() - v.real();
    const double di = u.imag() - v.imag();
    p[k + half] = {dr * w[k].real() - di * w[k].imag(), dr * w[k].imag() + di * w[k].real()};
  }
  if (half >= 2) {
    dif(p, half);
    dif(p + half, half);
  }
}

// Inverse of dif up to the 1/len factor: bit-reversed input, natural output,
// conjugated twiddles.
void Plan::dit_conj(Complex* p, std::size_t len) const {
  const std::size_t half = len / 2;
  if (half >= 2) {
    dit_conj(p, half);
    dit_conj(p + half, half);
  }
  const Complex* w = twiddles_.data() + (n_ - len);
  for (std::size_t k = 0; k < half; ++k) {
    const Complex v = p[k + half];
    const Complex t{v.real() * w[k].real() + v.imag() * w[k].imag(),
                    v.imag() * w[k].real() - v.real() * w[k].imag()};
    p[k + half] = p[k] - t;
    p[k] += t;
  }
}

void Plan::check(std::span<Complex> data) const {
  if (data.size() != n_) throw ShapeError("dft: buffer length does not match plan");
}

void Plan::forward(std::span<Complex> data) const {
  check(data);
  if (n_ == 1) return;
  if (bluestein_) {
    bluestein_->apply(data);
  } else {
    radix2(data);
  }
}

void Plan::inverse(std::span<Complex> data) const {
  check(data);
  for (auto& z : data) z = std::conj(z);
  forward(data);
  const double scale = 1.0 / static_cast<double>(n_);
  for (auto& z : data) z = std::conj(z) * scale;
}

void Plan::forward_permuted(std::span<Complex> data) const {
  check(data);
  if (bluestein_) {
    bluestein_->apply(data);
  } else if (n_ > 1) {
    dif(data.data(), n_);
  }
}

void Plan::inverse_permuted(std::span<Complex> data) const {
  if (bluestein_) {
    inverse(data);
    return;
  }
  check(data);
  if (n_ > 1) dit_conj(data.data(), n_);
  const double scale = 1.0 / static_cast<double>(n_);
  for (auto& z : data) z *= scale;
}

ComplexVector forward(std::span<const Complex> v) {
  if (v.empty()) throw ShapeError("dft: empty input");
  ComplexVector out(v.begin(), v.end());
  Plan(v.size()).forward(out);
  return out;
}

ComplexVector inverse(std::span<const Complex> v) {
  if (v.empty()) throw ShapeError("dft: empty input");
  ComplexVector out(v.begin(), v.end());
  Plan(v.size()).inverse(out);
  return out;
}

}  // namespace fraclap::dft
