#pragma once

#include <complex>
#include <vector>

namespace fraclap {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

}  // namespace fraclap
