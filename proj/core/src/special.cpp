#include "hds/special.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include <boost/math/special_functions/legendre.hpp>

namespace hds {

std::complex<double> gamma_complex(std::complex<double> z) {
  using cplx = std::complex<double>;
  constexpr double pi = std::numbers::pi;
  if (z.real() < 0.5) return pi / (std::sin(pi * z) * gamma_complex(1.0 - z));
  static constexpr std::array<double, 9> c{
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double g = 7.0;
  z -= 1.0;
  cplx x = c[0];
  for (std::size_t i = 1; i < c.size(); ++i) x += c[i] / (z + static_cast<double>(i));
  const cplx t = z + g + 0.5;
  return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

const QuadratureRule& gauss_legendre(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, QuadratureRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  QuadratureRule rule;
  // legendre_p_zeros returns the nonnegative zeros in increasing order
  const std::vector<double> zeros = boost::math::legendre_p_zeros<double>(static_cast<int>(m));
  auto weight = [m](double x) {
    const double p = boost::math::legendre_p_prime<double>(static_cast<int>(m), x);
    return 2.0 / ((1.0 - x * x) * p * p);
  };
  for (auto r = zeros.rbegin(); r != zeros.rend(); ++r) {
    if (*r == 0.0) continue;
    rule.nodes.push_back(-*r);
    rule.weights.push_back(weight(*r));
  }
  for (double x : zeros) {
    rule.nodes.push_back(x);
    rule.weights.push_back(weight(x));
  }
  return cache.emplace(m, std::move(rule)).first->second;
}

}  // namespace hds
