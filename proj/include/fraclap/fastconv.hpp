#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fraclap/dft.hpp"
#include "fraclap/grid.hpp"
#include "fraclap/quadrature.hpp"
#include "fraclap/types.hpp"

namespace fraclap {

/// Dense column-major matrix of complex values.
class ColumnMatrix {
 public:
  ColumnMatrix() = default;
  ColumnMatrix(std::int64_t rows, std::int64_t cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

  std::int64_t rows() const noexcept { return rows_; }
  std::int64_t cols() const noexcept { return cols_; }

  Complex& operator()(std::int64_t row, std::int64_t col) { return data_[col * rows_ + row]; }
  const Complex& operator()(std::int64_t row, std::int64_t col) const {
    return data_[col * rows_ + row];
  }

  std::span<Complex> column(std::int64_t col) {
    return {data_.data() + col * rows_, static_cast<std::size_t>(rows_)};
  }
  std::span<const Complex> column(std::int64_t col) const {
    return {data_.data() + col * rows_, static_cast<std::size_t>(rows_)};
  }

 private:
  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  ComplexVector data_;
};

/// Zero-padded kernel columns of the residue decomposition n = 2rl + q.
/// Column q of K1/K2 holds K(m, q) for m < active_rows(q); column q of L1/L2
/// holds L(m, q) for m = 0..N-1 in rows 0..N-1 and m = -active_rows(q)+1..-1
/// wrapped into the last rows.
struct KernelColumns {
  std::int64_t nrows = 0;
  ColumnMatrix K1;
  ColumnMatrix K2;
  ColumnMatrix L1;
  ColumnMatrix L2;
};

/// max(2^ceil(log2(ceil(N/2) + N - 1)), 2).
std::int64_t padded_rows(std::int64_t N);

/// ceil(N/2) for q < r, floor(N/2) for q >= r.
std::int64_t active_rows(const GridSpec& g, std::int64_t q);

/// Builds all 8r columns. Memory is O(rN); meant for inspection and tests.
KernelColumns build_kernels(const MidpointSamples& F, const SingularParams& p);

/// A_{1,j} + A_{2,j}, j = 0..N-1, in O(rN log N). Columns are built and
/// transformed one at a time and accumulated in the frequency domain; a
/// single inverse transform finishes the job.
ComplexVector fast_singular_integral(const MidpointSamples& F, const SingularParams& p);

/// The same map as fast_singular_integral for a fixed grid and exponents,
/// with every f-independent piece precomputed: the transformed L columns and
/// the K weights. Repeated applications then cost 4r forward transforms and
/// one inverse transform. apply() is const and reentrant.
class SingularIntegralOperator {
 public:
  SingularIntegralOperator(const GridSpec& g, const SingularParams& p);

  const GridSpec& grid() const noexcept { return grid_; }
  const SingularParams& params() const noexcept { return params_; }
  std::int64_t nrows() const noexcept { return nrows_; }

  /// f holds the 2rN midpoint samples. Throws ShapeError on length mismatch.
  ComplexVector apply(std::span<const Complex> f) const;
  ComplexVector apply(const MidpointSamples& F) const { return apply(F.values()); }

 private:
  GridSpec grid_;
  SingularParams params_;
  std::int64_t nrows_;
  dft::Plan plan_;
  std::vector<double> k1_weight_;
  std::vector<double> k2_weight_;
  ColumnMatrix l1_hat_;
  ColumnMatrix l2_hat_;
};

}  // namespace fraclap
