#pragma once

#include <complex>
#include <vector>

namespace hds {

// Gamma on the complex plane (Lanczos, g = 7, n = 9), relative error ~1e-15 on Re z > 0;
// the reflection formula covers Re z < 1/2.
std::complex<double> gamma_complex(std::complex<double> z);

struct QuadratureRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Gauss-Legendre rule of order m (cached per order).
const QuadratureRule& gauss_legendre(unsigned m);

}  // namespace hds
