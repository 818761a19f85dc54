#include <cmath>
#include <random>

#include "doctest.h"
#include "hds/lfunctions.hpp"
#include "hds/quasi_elliptic.hpp"
#include "hds/sampling.hpp"

using namespace hds;

namespace {

const double s7 = std::sqrt(7.0);

TruncationParams tol(double t) {
  TruncationParams p;
  p.target_tol = t;
  return p;
}

ModMatrix matrix_A(const Field& F) {
  return {F.elem(-2, -1), F.elem(1, 1), F.elem(3, 1), F.elem(-2, -1)};
}

ModMatrix matrix_Ap(const Field& F) {
  return {F.elem(18, 7), F.elem(39, 15), F.elem(9, 3), F.elem(18, 7)};
}

// Largest |eigenvalue| of a real 2x2 matrix with determinant 1 and |trace| > 2.
double spectral_radius(double tr) {
  const double t = std::abs(tr);
  return (t + std::sqrt(t * t - 4.0)) / 2.0;
}

}  // namespace

TEST_CASE("classification") {
  const Field F = make_field(7);
  using E = EmbeddingType;
  CHECK(classify(matrix_A(F)) == std::vector<E>{E::Hyperbolic, E::Elliptic});
  CHECK(classify(matrix_Ap(F)) == std::vector<E>{E::Hyperbolic, E::Elliptic});
  CHECK(classify(ModMatrix::S(F)) == std::vector<E>{E::Elliptic, E::Elliptic});
  CHECK(classify(ModMatrix::translation(F.one())) == std::vector<E>{E::Parabolic, E::Parabolic});
  CHECK(is_quasi_elliptic(matrix_A(F)));
  CHECK_FALSE(is_quasi_elliptic(ModMatrix::S(F)));
  CHECK(is_elliptic(ModMatrix::S(F)));
  CHECK(to_string(E::Hyperbolic) == "hyperbolic");
  CHECK(to_string(E::Elliptic) == "elliptic");
  CHECK(to_string(E::Parabolic) == "parabolic");
}

TEST_CASE("quasi-elliptic data of A") {
  const Field F = make_field(7);
  const QuasiEllipticData q = quasi_data(matrix_A(F));
  CHECK(q.j == 0);
  CHECK(q.omega_r1 == doctest::Approx(0.803586529917).epsilon(1e-11));
  CHECK(q.omega_c.at(0).real() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(q.omega_c.at(0).imag() == doctest::Approx(2.15540049899).epsilon(1e-11));
  CHECK(q.eps_r1 == doctest::Approx(-0.10890160623).epsilon(1e-10));
  CHECK(q.sign_c_tr == -1);
  CHECK(q.relative_norm == F.one());
  CHECK(std::abs(q.eps_c.at(0)) == doctest::Approx(1.0).epsilon(1e-13));
  // omega is a root of c X^2 + (d - a) X - b at each embedding
  const ModMatrix& A = q.A;
  for (double w : {q.omega_r1, q.omega_r2}) {
    const auto m = A.embed(0);
    CHECK(std::abs(m[2] * w * w + (m[3] - m[0]) * w - m[1]) < 1e-12);
    CHECK(std::abs(m[2] * w + m[3]) == doctest::Approx(w == q.omega_r1 ? std::abs(q.eps_r1)
                                                                       : std::abs(q.eps_r2)));
  }
  CHECK(std::abs(q.eps_r1 * q.eps_r2 - 1.0) < 1e-12);
}

TEST_CASE("quasi-elliptic data of A'") {
  const Field F = make_field(7);
  const QuasiEllipticData q = quasi_data(matrix_Ap(F));
  CHECK(q.omega_r1 == doctest::Approx(2.15540049899).epsilon(1e-11));
  CHECK(q.omega_c.at(0).imag() == doctest::Approx(0.803586529917).epsilon(1e-11));
  CHECK(q.eps_r1 == doctest::Approx(73.0268).epsilon(1e-5));
  CHECK(q.sign_c_tr == 1);
  CHECK_THROWS_AS(quasi_data(ModMatrix::S(F)), NotQuasiElliptic);
}

TEST_CASE("matrix_from_unit") {
  const Field F = make_field(7);
  const ModMatrix A = matrix_A(F);
  // omega: (3 + sqrt7) X^2 - (1 + sqrt7) = 0, eps = c omega + d
  const OFElem p = A.c(), q = A.d() - A.a(), r = -A.b();
  CHECK(matrix_from_unit(p, q, r, A.d(), A.c()) == A);
  CHECK(matrix_from_unit(p, q, r, F.one(), F.zero()) == ModMatrix::identity(F));
  const ModMatrix Ap = matrix_Ap(F);
  CHECK(matrix_from_unit(Ap.c(), Ap.d() - Ap.a(), -Ap.b(), Ap.d(), Ap.c()) == Ap);
  CHECK_THROWS_AS(matrix_from_unit(F.elem(2), F.elem(1), F.elem(1), F.zero(), F.one()),
                  NotStable);
}

TEST_CASE("Psi of A and A' from the eigenvalues") {
  const Field F = make_field(7);
  const double psiA = psi(matrix_A(F), tol(1e-11)).value;
  const double psiAp = psi(matrix_Ap(F), tol(1e-11)).value;
  // Psi(A) = -ln of the large eigenvalue of A', Psi(A') = ln of the large eigenvalue of A
  CHECK(psiA == doctest::Approx(-std::log(spectral_radius(36.0 + 14.0 * s7))).epsilon(1e-9));
  CHECK(psiAp == doctest::Approx(std::log(spectral_radius(-4.0 - 2.0 * s7))).epsilon(1e-9));
  CHECK(psiA == doctest::Approx(-4.29082683607).epsilon(1e-10));
  const double u = (3.0 + s7) * std::sqrt(s7 - 2.0) - 2.0 - s7;
  CHECK(psiAp == doctest::Approx(-std::log(std::abs(u))).epsilon(1e-9));
}

TEST_CASE("Psi symmetries") {
  const Field F = make_field(7);
  const ModMatrix A = matrix_A(F);
  const double base = psi(A, tol(1e-10)).value;
  std::mt19937_64 rng(41);
  for (int k = 0; k < 3; ++k) {
    const ModMatrix P = random_modmatrix(F, rng, 1, 1);
    CHECK(psi(P.inverse() * A * P, tol(1e-10)).value == doctest::Approx(base).epsilon(1e-7));
  }
  CHECK(psi(A.inverse(), tol(1e-10)).value == doctest::Approx(-base).epsilon(1e-7));
  CHECK(psi(A * A, tol(1e-10)).value == doctest::Approx(2.0 * base).epsilon(1e-7));
  CHECK(psi(-A, tol(1e-10)).value == doctest::Approx(base).epsilon(1e-7));
}

TEST_CASE("elliptic closed forms") {
  const Field F = make_field(7);
  const ModMatrix S = ModMatrix::S(F);
  const ModMatrix E3(F.zero(), F.elem(-1), F.one(), F.elem(-1));
  CHECK(finite_order(S) == 4);
  CHECK(finite_order(E3) == 3);
  CHECK_THROWS_AS(finite_order(matrix_A(F)), NotElliptic);

  const double v = psi(E3, tol(1e-12)).value;
  const EllipticClosedForm plus = psi_elliptic_closed(E3, 0, EllipticSign::Plus);
  CHECK(v == doctest::Approx(1.845772922).epsilon(1e-9));
  CHECK(plus.value == doctest::Approx(v).epsilon(1e-12));
  CHECK(2.0 * v / F->regulator == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(plus.witness_num * 3 == plus.witness_den * 4);
  CHECK(plus.witness_residual < 1e-12);
  // the Minus form differs by 2 R sign(c tr A)
  const EllipticClosedForm minus = psi_elliptic_closed(E3, 0, EllipticSign::Minus);
  CHECK(std::abs(minus.value - plus.value) == doctest::Approx(2.0 * F->regulator));

  CHECK(std::abs(psi(S, tol(1e-12)).value) < 1e-10);
  CHECK_THROWS_AS(psi_elliptic_closed(matrix_A(F)), NotElliptic);
}

TEST_CASE("derivative report") {
  const Field F = make_field(7);
  const DerivReport r = l_a_deriv_report(matrix_A(F), tol(1e-10));
  CHECK(r.value == doctest::Approx(psi(matrix_A(F), tol(1e-10)).value).epsilon(1e-9));
  CHECK_FALSE(r.label.empty());
  CHECK_THROWS_AS(l_a_deriv_report(ModMatrix::S(F), tol(1e-10)), NotQuasiElliptic);
}
