#include "hds/classical.hpp"

#include <cstdint>

namespace hds {

namespace {

Int mod_pos(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

// Boost's rational rejects a negative denominator instead of normalizing it.
Rational frac(const Int& num, const Int& den) {
  return den < 0 ? Rational(Int(-num), Int(-den)) : Rational(num, den);
}

// s(d, c) for 0 <= d < c through s(d, c) + s(c, d) = -1/4 + (d/c + c/d + 1/(cd))/12.
Rational s_by_reciprocity(Int d, Int c) {
  const Int g = gcd(d, c);
  d /= g;
  c /= g;
  Rational acc = 0;
  int sign = 1;
  while (c > 1 && d != 0) {
    acc += sign * (Rational(-1, 4) + (Rational(d, c) + Rational(c, d) + Rational(1, d * c)) / 12);
    sign = -sign;
    const Int r = c % d;
    c = d;
    d = r;
  }
  return acc;
}

}  // namespace

Rational sawtooth(const Rational& x) {
  const Int num = boost::multiprecision::numerator(x);
  const Int den = boost::multiprecision::denominator(x);
  if (mod_pos(num, den) == 0) return Rational(0);
  const Int fl = detail::floor_div(num, den);
  return x - Rational(fl) - Rational(1, 2);
}

// Direct sum below 10^6, the reciprocity recursion above.
Rational classical_s(const Int& d, const Int& c) {
  if (c == 0) throw DomainError("classical_s: c must be nonzero");
  const Int C = abs(c);
  if (C == 1) return Rational(0);
  const Int dr = mod_pos(d, C);
  if (C >= 1000000) return s_by_reciprocity(dr, C);
  const auto cc = static_cast<std::int64_t>(C);
  const auto dd = static_cast<std::int64_t>(dr);
  __int128 acc = 0;
  std::int64_t r = 0;
  for (std::int64_t k = 1; k < cc; ++k) {
    r += dd;
    if (r >= cc) r -= cc;
    if (r == 0) continue;
    acc += static_cast<__int128>(2 * k - cc) * (2 * r - cc);
  }
  const bool neg = acc < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-acc) : static_cast<unsigned __int128>(acc);
  const Int hi = static_cast<std::uint64_t>(u >> 64);
  const Int lo = static_cast<std::uint64_t>(u);
  Int total = (hi << 64) + lo;
  if (neg) total = -total;
  return Rational(total, 4 * C * C);
}

Rational classical_s_naive(const Int& d, const Int& c) {
  if (c == 0) throw DomainError("classical_s: c must be nonzero");
  Rational acc = 0;
  const Int C = abs(c);
  for (Int k = 0; k < C; ++k) acc += sawtooth(frac(k, c)) * sawtooth(frac(k * d, c));
  return acc;
}

Int classical_phi_R(const SL2Z& A) {
  if (!A.unimodular()) throw NotUnimodular("classical_phi_R: determinant is not 1");
  if (A.c == 0) return A.b / A.d;  // d = +-1
  const int sc = A.c > 0 ? 1 : -1;
  Rational v = frac(A.a + A.d, A.c) - Rational(12 * sc) * classical_s(A.d, A.c);
  if (boost::multiprecision::denominator(v) != 1)
    throw DomainError("classical_phi_R: non-integral value");
  return boost::multiprecision::numerator(v);
}

Rational classical_reciprocity_defect(const Int& c, const Int& d) {
  Rational lhs = classical_s(d, c) + classical_s(c, d);
  Rational rhs = Rational(-1, 4) +
                 (frac(d, c) + frac(c, d) + frac(1, c * d)) / Rational(12);
  return lhs - rhs;
}

Rational classical_hecke_defect(const Int& d, const Int& c, const Int& p) {
  Rational acc = classical_s(d * p, c);
  for (Int r = 0; r < p; ++r) acc += classical_s(d + c * r, c * p);
  return acc - Rational(p + 1) * classical_s(d, c);
}

}  // namespace hds
