#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "hds/classical.hpp"
#include "hds/dedekind.hpp"
#include "hds/sampling.hpp"

using namespace hds;

namespace {

TruncationParams tol(double t) {
  TruncationParams p;
  p.target_tol = t;
  return p;
}

double saw(double x) {
  const double f = x - std::floor(x);
  return f == 0.0 ? 0.0 : f - 0.5;
}

// s(d, c) in floating point straight from the sawtooth sum.
double s_float(long long d, long long c) {
  const long long n = c < 0 ? -c : c;
  double s = 0.0;
  for (long long k = 0; k < n; ++k)
    s += saw(static_cast<double>(k) / c) * saw(static_cast<double>(k * d) / c);
  return s;
}

int sgn(const Int& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

TEST_CASE("classical Dedekind sums") {
  CHECK(classical_s(1, 3) == Rational(1, 18));
  CHECK(classical_s(1, 1) == 0);
  CHECK(classical_s(2, 5) == 0);
  CHECK(classical_s(1, 5) == Rational(1, 5));
  for (long long c = -25; c <= 25; ++c) {
    if (c == 0) continue;
    for (long long d = -30; d <= 30; ++d) {
      const Rational s = classical_s(d, c);
      CHECK(s == classical_s_naive(d, c));
      CHECK(static_cast<double>(s) == doctest::Approx(s_float(d, c)).epsilon(1e-12));
    }
  }
  CHECK(sawtooth(Rational(1, 2)) == 0);
  CHECK(sawtooth(Rational(7, 4)) == Rational(1, 4));
  CHECK(sawtooth(Rational(-1, 3)) == Rational(1, 6));
}

TEST_CASE("classical reciprocity and Hecke relations are exact") {
  for (int c = 1; c <= 40; ++c)
    for (int d = 1; d <= 40; ++d) {
      if (std::gcd(c, d) != 1) continue;
      CHECK(classical_reciprocity_defect(c, d) == 0);
      for (int p : {2, 3, 7}) CHECK(classical_hecke_defect(d, c, p) == 0);
    }
}

TEST_CASE("Rademacher relation for Phi_R") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> u(-6, 6);
  int checked = 0;
  while (checked < 200) {
    SL2Z A{u(rng), u(rng), u(rng), u(rng)}, B{u(rng), u(rng), u(rng), u(rng)};
    if (!A.unimodular() || !B.unimodular()) continue;
    const SL2Z C = A * B;
    const Int lhs = classical_phi_R(C) - classical_phi_R(A) - classical_phi_R(B);
    CHECK(lhs == -3 * sgn(A.c) * sgn(B.c) * sgn(C.c));
    ++checked;
  }
}

TEST_CASE("rational mode agrees with the classical sum") {
  const Field Q = make_field(1);
  for (long long c = 1; c <= 12; ++c)
    for (long long d = -12; d <= 12; ++d) {
      if (std::gcd(c, d) != 1) continue;
      const double v = sum_s(Q.elem(d), Q.elem(c), UHPoint(), 0, tol(1e-13)).value;
      CHECK(v == doctest::Approx(static_cast<double>(classical_s(d, c))).epsilon(1e-10));
    }
  CHECK(sum_s(Q.elem(1), Q.elem(3), UHPoint(), 0, tol(1e-13)).value ==
        doctest::Approx(1.0 / 18.0));
}

TEST_CASE("s(0, 1; i) vanishes") {
  const Field F = make_field(7);
  CHECK(std::abs(sum_s(F.zero(), F.one(), UHPoint{cplx(0.0, 1.0)}, 0, tol(1e-12)).value) <
        1e-10);
}

TEST_CASE("independence of the Bezout completion") {
  const Field F = make_field(7);
  std::mt19937_64 rng(32);
  for (int k = 0; k < 5; ++k) {
    const auto [d, c] = random_coprime_pair(F, rng, 60);
    const auto [a, b] = ext_gcd(c, d);
    const UHPoint z = random_point(rng, 1);
    const double v0 = sum_s_witness(d, c, a, b, z, 0, tol(1e-12)).value;
    const OFElem t = F.elem(1, -1);
    const double v1 = sum_s_witness(d, c, a + t * c, b + t * d, z, 0, tol(1e-12)).value;
    CHECK(v0 == doctest::Approx(v1).epsilon(1e-9));
    CHECK(v0 == doctest::Approx(sum_s(d, c, z, 0, tol(1e-12)).value).epsilon(1e-9));
  }
}

TEST_CASE("general arguments divide out the gcd") {
  const Field F = make_field(7);
  const OFElem g = F.elem(3, 1);
  const OFElem d = F.elem(2, 1), c = F.elem(5);
  const UHPoint z{cplx(0.2, 1.1)};
  CHECK(sum_s_general(g * d, g * c, z, 0, tol(1e-12)).value ==
        doctest::Approx(sum_s(d, c, z, 0, tol(1e-12)).value).epsilon(1e-10));
}

TEST_CASE("reciprocity law") {
  const Field F = make_field(7);
  const UHPoint z{cplx(0.3, 0.8)};
  const OFElem pairs[][2] = {{F.elem(3, 1), F.elem(5)}, {F.elem(4, 1), F.elem(2, 1)},
                             {F.elem(1), F.elem(8, 3)}};
  for (const auto& p : pairs) {
    const IdentityDefect d = reciprocity_defect(p[0], p[1], z, 0, tol(1e-12));
    CHECK(std::abs(d.defect) < 1e-9);
    CHECK(d.pass());
  }
  CHECK_THROWS_AS(reciprocity_defect(F.elem(-3, -1), F.elem(5), z, 0, tol(1e-10)),
                  SignCondition);
  CHECK_THROWS_AS(reciprocity_defect(F.elem(2), F.elem(4), z, 0, tol(1e-10)), NotCoprime);
}

TEST_CASE("reduction scripts reproduce the direct sum") {
  const Field F = make_field(7);
  std::mt19937_64 rng(33);
  for (int k = 0; k < 8; ++k) {
    const auto [d, c] = random_coprime_pair(F, rng, 40);
    const UHPoint z = random_point(rng, 1);
    const ReductionScript S = reduce_to_fundamental(d, c, 0);
    CHECK(S.steps >= 0);
    CHECK_FALSE(S.describe().empty());
    const SumValue a = sum_s(d, c, z, 0, tol(1e-10));
    const SumValue b = S.evaluate(z, tol(1e-10));
    CHECK(a.value == doctest::Approx(b.value).epsilon(1e-9));
  }
  const ReductionScript S = reduce_to_fundamental(F.elem(-2, -1), F.elem(3, 1), 0);
  CHECK(S.describe() ==
        "+ s(0,1; (z + [-1, -1])) - s(0,1; |[8, 3]|.(1/conj((z + [-1, -1])) + [3, -1])) - 1/4 "
        "+ kappa*T([3, 1], [8, 3]; (z + [-1, -1]))");
  CHECK_THROWS_AS(reduce_to_fundamental(F.elem(2), F.elem(4), 0), NotCoprime);
  CHECK_THROWS_AS(reduce_to_fundamental(F.one(), F.zero(), 0), DomainError);
}

TEST_CASE("point words") {
  const Field F = make_field(7);
  const UHPoint z{cplx(0.3, 0.8)};
  const PointWord w{{PointOpKind::Translate, F.elem(1)}, {PointOpKind::InvConj, {}}};
  const UHPoint r = apply_word(w, z, 0);
  const cplx expect = 1.0 / std::conj(z[0] + 1.0);
  CHECK(std::abs(r[0] - expect) < 1e-14);
  const UHPoint n = apply_word({{PointOpKind::NegConj, {}}}, z, 0);
  CHECK(std::abs(n[0] - cplx(-0.3, 0.8)) < 1e-15);
}

TEST_CASE("Hecke relation") {
  const Field F = make_field(7);
  const UHPoint z{cplx(0.25, 0.9)};
  const OFElem d = F.elem(2, 1), c = F.elem(5);
  for (const OFElem& p : {F.elem(3, 1), F.elem(3, -1)}) {
    const IdentityDefect m = hecke_defect(d, c, z, p, 0, tol(1e-11));
    CHECK(std::abs(m.defect) < 1e-9);
  }
  for (const OFElem& p : {F.elem(3, 1), F.elem(6, 1), F.elem(5)}) {
    const IdentityDefect o = omega_hecke_defect(F, UHPoint{cplx(0.25, 0.9), cplx(-0.1, 1.1)}, p,
                                                0, tol(1e-12));
    CHECK(std::abs(o.defect) < 1e-9);
  }
  CHECK_THROWS_AS(hecke_defect(d, c, z, F.elem(2), 0, tol(1e-10)), NotPrime);
  CHECK_THROWS_AS(hecke_defect(d, c, z, F.elem(2, 1), 0, tol(1e-10)), NotTotallyPositive);
}

TEST_CASE("symmetries") {
  const Field F = make_field(7);
  const UHPoint z{cplx(0.35, 1.05)};
  const OFElem q = F.elem(1, 1);
  const OFElem eps = F.fundamental_unit();
  const SymmetryDefects s =
      symmetry_defects(F.elem(2, 1), F.elem(5), z, 0, tol(1e-12), &q, &eps);
  CHECK(std::abs(s.sign_c.defect) < 1e-9);
  CHECK(std::abs(s.sign_d.defect) < 1e-9);
  CHECK(std::abs(s.unit.defect) < 1e-9);
  CHECK(std::abs(s.translation.defect) < 1e-9);
  // shifting both arguments is not a symmetry of this sum
  CHECK(std::abs(s.translation_both.defect) > 1e-4);
}

TEST_CASE("units of F") {
  const Field F = make_field(7);
  const UHPoint z{cplx(0.35, 1.05)};
  const OFElem d = F.elem(2, 1), c = F.elem(5);
  const OFElem eps = F.fundamental_unit();
  const double base = sum_s(d, c, z, 0, tol(1e-12)).value;
  CHECK(sum_s(eps * d, eps * c, z, 0, tol(1e-12)).value ==
        doctest::Approx(base).epsilon(1e-9));
  CHECK(sum_s(-d, -c, z, 0, tol(1e-12)).value == doctest::Approx(-base).epsilon(1e-9));
}

TEST_CASE("large moduli") {
  // s(1, c) = (c - 1)(c - 2) / (12 c)
  for (long long c : {1000003LL, 1000000007LL, 999999999989LL}) {
    CHECK(classical_s(1, c) == Rational(Int(c - 1) * Int(c - 2), Int(12) * c));
    CHECK(classical_s(c - 1, c) == -classical_s(1, c));
    CHECK(classical_s(2 * c + 1, c) == classical_s(1, c));
  }
  // the recursion and the direct sum meet at the switch-over
  for (long long c : {999983LL, 1000003LL})
    for (long long d : {2LL, 3LL, 77777LL, 500001LL}) {
      const Rational recip = classical_s(d, c) + classical_s(c, d);
      const Rational rhs = Rational(-1, 4) + (Rational(d, c) + Rational(c, d) + Rational(1, d * c)) / 12;
      CHECK(recip == rhs);
    }
}
