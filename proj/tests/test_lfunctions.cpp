#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hds/lfunctions.hpp"
#include "hds/special.hpp"

using namespace hds;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCatalan = 0.915965594177219015;

ModMatrix matrix_A(const Field& F) {
  return {F.elem(-2, -1), F.elem(1, 1), F.elem(3, 1), F.elem(-2, -1)};
}

ModMatrix matrix_Ap(const Field& F) {
  return {F.elem(18, 7), F.elem(39, 15), F.elem(9, 3), F.elem(18, 7)};
}

PeriodParams quick() {
  PeriodParams p;
  p.eis.norm_bound = 1e4;
  p.order = 32;
  p.max_order = 256;
  p.quad_tol = 1e-6;
  return p;
}

}  // namespace

TEST_CASE("complex Gamma") {
  for (double x : {0.1, 0.5, 1.0, 1.5, 2.5, 7.3, 20.0, -0.5, -2.7})
    CHECK(gamma_complex(cplx(x, 0.0)).real() == doctest::Approx(std::tgamma(x)).epsilon(1e-13));
  for (cplx z : {cplx(0.3, 0.7), cplx(2.0, -1.5), cplx(-1.2, 0.4)}) {
    CHECK(std::abs(gamma_complex(z + 1.0) - z * gamma_complex(z)) <
          1e-13 * std::abs(gamma_complex(z + 1.0)));
    const cplx refl = gamma_complex(z) * gamma_complex(1.0 - z) * std::sin(kPi * z);
    CHECK(std::abs(refl - kPi) < 1e-12);
  }
}

TEST_CASE("Gauss-Legendre") {
  for (unsigned m : {1u, 2u, 5u, 16u, 64u}) {
    const QuadratureRule& r = gauss_legendre(m);
    REQUIRE(r.nodes.size() == m);
    // exact for polynomials of degree 2m - 1
    for (unsigned k = 0; k < 2 * m && k < 40; ++k) {
      double s = 0.0;
      for (unsigned i = 0; i < m; ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
      const double exact = k % 2 ? 0.0 : 2.0 / (k + 1.0);
      CHECK(s == doctest::Approx(exact).epsilon(1e-13));
    }
  }
  CHECK(&gauss_legendre(16) == &gauss_legendre(16));
}

TEST_CASE("rational Eisenstein series at i") {
  // sum over (m, n) != 0 of (m^2 + n^2)^-2 is 4 zeta(2) beta(2); pairs are taken up to sign
  const Field Q = make_field(1);
  EisParams p;
  p.norm_bound = 2e5;
  const EisValue e = eis(Q, UHPoint{cplx(0.0, 1.0)}, 2.0, p);
  const double exact = 2.0 * (kPi * kPi / 6.0) * kCatalan;
  CHECK(e.value == doctest::Approx(exact).epsilon(1e-5));
  CHECK(std::abs(e.value - exact) <= e.tail_error);
}

TEST_CASE("Eisenstein series invariance") {
  const Field F = make_field(7);
  const UHPoint z{cplx(0.2, 0.9), cplx(-0.3, 1.3)};
  EisParams p;
  p.norm_bound = 3e4;
  const double s = 3.0;
  const EisValue e = eis(F, z, s, p);
  CHECK(e.value > 0.0);
  const OFElem q = F.elem(1, 1);
  const EisValue t = eis(F, UHPoint{z[0] + q.embed(0), z[1] + q.embed(1)}, s, p);
  CHECK(std::abs(t.value - e.value) <= e.tail_error + t.tail_error);
  CHECK(t.value == doctest::Approx(e.value).epsilon(1e-9));
  const EisValue inv = eis(F, UHPoint{-1.0 / z[0], -1.0 / z[1]}, s, p);
  CHECK(inv.value == doctest::Approx(e.value).epsilon(1e-9));
  CHECK_THROWS_AS(eis(F, z, 1.2, p), DomainError);
  CHECK_THROWS_AS(eis(F, UHPoint{cplx(0.0, 1.0)}, 2.0, p), DomainError);
  EisParams tiny = p;
  tiny.max_terms = 5;
  CHECK_THROWS_AS(eis(F, z, s, tiny), CapExceeded);
}

TEST_CASE("d/dz1 of the Eisenstein series by finite differences") {
  const Field F = make_field(7);
  EisParams p;
  p.norm_bound = 3e4;
  for (double s : {2.0, 3.0}) {
    const cplx z1(0.15, 0.85), z2(-0.2, 1.1);
    const double h = 1e-4;
    auto E = [&](cplx w) { return eis(F, UHPoint{w, z2}, s, p).value; };
    const double dx = (E(z1 + h) - E(z1 - h)) / (2.0 * h);
    const double dy = (E(z1 + cplx(0.0, h)) - E(z1 - cplx(0.0, h))) / (2.0 * h);
    const cplx fd = 0.5 * cplx(dx, -dy);
    const cplx an = eis_dz1(F, UHPoint{z1, z2}, s, p).value;
    CHECK(std::abs(fd - an) < 1e-5 * std::max(1.0, std::abs(an)));
  }
}

TEST_CASE("L_A(2)") {
  const Field F = make_field(7);
  const LASeriesValue a = l_a(matrix_A(F), cplx(2.0, 0.0), 2e5);
  const LASeriesValue b = l_a(matrix_Ap(F), cplx(2.0, 0.0), 2e5);
  CHECK(a.value.real() == doctest::Approx(-1.20207204715).epsilon(1e-6));
  CHECK(b.value.real() == doctest::Approx(0.937420784051).epsilon(1e-6));
  CHECK(std::abs(a.value.imag()) < 1e-14);
  CHECK(a.tail_error < 1e-3);
  CHECK(a.heuristic_tail);
  // -A has the same module and unit, with sign(c tr A) unchanged
  const LASeriesValue n = l_a(-matrix_A(F), cplx(2.0, 0.0), 2e4);
  CHECK(n.value.real() == doctest::Approx(l_a(matrix_A(F), cplx(2.0, 0.0), 2e4).value.real()));
  CHECK_THROWS_AS(l_a(matrix_A(F), cplx(1.2, 0.0), 1e3), DomainError);
  CHECK_THROWS_AS(l_a(ModMatrix::S(F), cplx(2.0, 0.0), 1e3), NotQuasiElliptic);
}

TEST_CASE("geodesic arc") {
  const Field F = make_field(7);
  for (const ModMatrix& M : {matrix_A(F), matrix_Ap(F)}) {
    const QuasiEllipticData q = quasi_data(M);
    for (double t0 : {0.5, 1.0, 3.0}) {
      const GeodesicArc arc = geodesic_arc(q, t0);
      CHECK(arc.ratio_check < 1e-10);
      CHECK(arc.ratio == doctest::Approx(q.eps_r1 * q.eps_r1).epsilon(1e-10));
      CHECK(arc.tau.imag() > 0.0);
      const double h = 1e-6;
      const cplx fd = (arc_point(arc, t0 + h) - arc_point(arc, t0 - h)) / (2.0 * h);
      CHECK(std::abs(fd - arc_tangent(arc, t0)) < 1e-8);
    }
    CHECK_THROWS_AS(geodesic_arc(q, 0.0), DomainError);
  }
}

TEST_CASE("geodesic period") {
  const Field F = make_field(7);
  const ModMatrix A = matrix_A(F);
  const PeriodValue a = geodesic_period(A, 2.0, quick());
  CHECK(std::abs(a.value.real()) < 1e-6 * std::abs(a.value));
  PeriodParams shifted = quick();
  shifted.t0 = 2.0;
  const PeriodValue b = geodesic_period(A, 2.0, shifted);
  CHECK(std::abs(b.value - a.value) < 1e-6 * std::abs(a.value));
  const PeriodValue inv = geodesic_period(A.inverse(), 2.0, quick());
  CHECK(std::abs(inv.value + a.value) < 1e-6 * std::abs(a.value));
  PeriodParams one = quick();
  one.threads = 1;
  const PeriodValue serial = geodesic_period(A, 2.0, one);
  CHECK(serial.value == a.value);
}

TEST_CASE("period identity") {
  const Field F = make_field(7);
  for (const ModMatrix& M : {matrix_A(F), matrix_Ap(F)}) {
    for (double s : {1.5, 2.0, 3.0}) {
      const PeriodIdentityReport r = period_identity(M, s, 5e4, quick());
      CAPTURE(s);
      CHECK(r.relative_defect < (s < 2.0 ? 1e-4 : 1e-6));
      CHECK(r.defect <= r.budget);
      CHECK(r.volume > 0.0);
    }
  }
}
