#pragma once

#include "hds/field.hpp"

namespace hds {

struct SL2Z {
  Int a = 1, b = 0, c = 0, d = 1;

  friend SL2Z operator*(const SL2Z& x, const SL2Z& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  bool unimodular() const { return a * d - b * c == 1; }
};

// s(d, c) = sum_{k mod c} ((k/c)) ((kd/c)), exact; any d, c != 0.
Rational classical_s(const Int& d, const Int& c);
// Same sum evaluated term by term in rational arithmetic (slow reference path).
Rational classical_s_naive(const Int& d, const Int& c);

// Sawtooth ((x)) for rational x.
Rational sawtooth(const Rational& x);

// Phi_R(A) = (a+d)/c - 12 sign(c) s(d, c) for c != 0, and b/d for c = 0.
Int classical_phi_R(const SL2Z& A);

// s(d,c) + s(c,d) - (-1/4 + (d/c + c/d + 1/(cd))/12); zero for coprime c, d > 0.
Rational classical_reciprocity_defect(const Int& c, const Int& d);

// s(dp, c) + sum_{r mod p} s(d + cr, cp) - (p+1) s(d, c); zero for prime p.
Rational classical_hecke_defect(const Int& d, const Int& c, const Int& p);

}  // namespace hds
