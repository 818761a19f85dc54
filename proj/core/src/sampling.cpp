#include "hds/sampling.hpp"

#include <cmath>

namespace hds {

namespace {

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

OFElem random_elem(const Field& F, std::mt19937_64& rng, int bound) {
  const int a = uniform_int(rng, -bound, bound);
  const int b = F.degree() == 1 ? 0 : uniform_int(rng, -bound, bound);
  return F.elem(a, b);
}

ModMatrix random_modmatrix(const Field& F, std::mt19937_64& rng, int length, int bound) {
  ModMatrix M = ModMatrix::translation(random_elem(F, rng, bound));
  for (int k = 0; k < length; ++k)
    M = M * ModMatrix::translation(random_elem(F, rng, bound)) * ModMatrix::S(F);
  return uniform_int(rng, 0, 1) ? M : -M;
}

std::pair<OFElem, OFElem> random_coprime_pair(const Field& F, std::mt19937_64& rng,
                                              long long norm_bound) {
  const int bound = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(norm_bound))));
  for (;;) {
    const OFElem c = random_elem(F, rng, bound);
    const OFElem d = random_elem(F, rng, bound);
    if (c.is_zero() || d.is_zero()) continue;
    if (abs_int(c.norm()) > norm_bound || abs_int(d.norm()) > norm_bound) continue;
    if (!gcd(c, d).is_unit()) continue;
    return {d, c};
  }
}

UHPoint random_point(std::mt19937_64& rng, std::size_t m, double y_lo, double y_hi) {
  std::uniform_real_distribution<double> ux(-1.0, 1.0), uy(y_lo, y_hi);
  std::vector<cplx> zs;
  for (std::size_t k = 0; k < m; ++k) {
    const double x = ux(rng);
    const double y = uy(rng);
    zs.emplace_back(x, y);
  }
  return UHPoint(zs);
}

}  // namespace hds
