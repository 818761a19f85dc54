#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "hds/field.hpp"

namespace hds {

namespace detail {

template <class Fn>
void for_each_in_box_plain(const FieldData& F, double lo0, double hi0, double lo1, double hi1,
                           Fn&& fn) {
  constexpr double slack = 1e-7;
  if (lo0 > hi0 || lo1 > hi1) return;
  const double w0 = F.omega_emb[0], w1 = F.omega_emb[1];
  const double dw = w0 - w1;
  auto b0 = static_cast<std::int64_t>(std::ceil((lo0 - hi1) / dw - slack));
  auto b1 = static_cast<std::int64_t>(std::floor((hi0 - lo1) / dw + slack));
  for (std::int64_t b = b0; b <= b1; ++b) {
    const double bd = static_cast<double>(b);
    const double alo = std::max(lo0 - bd * w0, lo1 - bd * w1);
    const double ahi = std::min(hi0 - bd * w0, hi1 - bd * w1);
    if (alo > ahi + 2 * slack) continue;
    auto a0 = static_cast<std::int64_t>(std::ceil(alo - slack));
    auto a1 = static_cast<std::int64_t>(std::floor(ahi + slack));
    for (std::int64_t a = a0; a <= a1; ++a) {
      const double ad = static_cast<double>(a);
      fn(a, b, ad + bd * w0, ad + bd * w1);
    }
  }
}

}  // namespace detail

// Visit every a + b*w in O_F whose k-th embedding lies in [lo[k], hi[k]] (k = 0, 1),
// up to a slack of 1e-7 on each side; callers filter with their exact condition.
// For the rational field only the first interval is used. Elongated boxes are first
// rescaled by a power of the totally positive unit so the scan stays proportional to the area.
template <class Fn>
void for_each_in_box(const FieldData& F, double lo0, double hi0, double lo1, double hi1, Fn&& fn) {
  if (F.degree == 1) {
    constexpr double slack = 1e-7;
    auto a0 = static_cast<std::int64_t>(std::ceil(lo0 - slack));
    auto a1 = static_cast<std::int64_t>(std::floor(hi0 + slack));
    for (std::int64_t a = a0; a <= a1; ++a) fn(a, std::int64_t{0}, double(a), double(a));
    return;
  }
  if (lo0 > hi0 || lo1 > hi1) return;
  const double width0 = hi0 - lo0, width1 = hi1 - lo1;
  int k = 0;
  if (width0 > 0.0 && width1 > 0.0)
    k = static_cast<int>(std::lround(std::log(width0 / width1) / (2.0 * F.tp_log)));
  if (k == 0) {
    detail::for_each_in_box_plain(F, lo0, hi0, lo1, hi1, fn);
    return;
  }
  // x = eta^k x' with eta totally positive, so x' ranges over the box scaled by eta^-k.
  std::int64_t pa = 1, pb = 0;
  const auto ta = static_cast<std::int64_t>(F.tp_a), tb = static_cast<std::int64_t>(F.tp_b);
  const auto T = F.omega_t, M = F.omega_m;
  // inverse of a totally positive unit: conjugate (a + b t) - b w
  const std::int64_t ua = k > 0 ? ta : ta + tb * T, ub = k > 0 ? tb : -tb;
  for (int i = 0; i < std::abs(k); ++i) {
    const std::int64_t na = pa * ua + M * pb * ub;
    const std::int64_t nb = pa * ub + pb * ua + T * pb * ub;
    pa = na;
    pb = nb;
  }
  const double s0 = static_cast<double>(pa) + static_cast<double>(pb) * F.omega_emb[0];
  const double s1 = static_cast<double>(pa) + static_cast<double>(pb) * F.omega_emb[1];
  detail::for_each_in_box_plain(
      F, lo0 / s0, hi0 / s0, lo1 / s1, hi1 / s1,
      [&](std::int64_t a, std::int64_t b, double x0, double x1) {
        const std::int64_t na = pa * a + M * pb * b;
        const std::int64_t nb = pa * b + pb * a + T * pb * b;
        fn(na, nb, x0 * s0, x1 * s1);
      });
}

}  // namespace hds
