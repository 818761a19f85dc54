#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hds/field.hpp"
#include "hds/sampling.hpp"

using namespace hds;

namespace {

// L(2, chi_d) by a plain Dirichlet sum.
double l2_direct(long long d, long long N) {
  double s = 0.0;
  for (long long n = 1; n <= N; ++n) s += kronecker(d, n) / (static_cast<double>(n) * n);
  return s;
}

}  // namespace

TEST_CASE("D = 7 constants") {
  const Field F = make_field(7);
  CHECK(F->disc == 28);
  CHECK(F->degree == 2);
  CHECK(F->eps_a == 8);
  CHECK(F->eps_b == 3);
  CHECK(F->eps_norm == 1);
  CHECK(F->unit_index == 2);
  CHECK(F->regulator == doctest::Approx(std::log(8.0 + 3.0 * std::sqrt(7.0))).epsilon(1e-15));
  CHECK(F->regulator == doctest::Approx(2.7686593833135738).epsilon(1e-14));
  CHECK(F->kappa == doctest::Approx(0.142958528217679012).epsilon(1e-12));
  const OFElem delta = F.different();
  CHECK(std::abs(delta.embed(0)) == doctest::Approx(2.0 * std::sqrt(7.0)));
  CHECK(delta.norm() == -28);
}

TEST_CASE("kappa against a direct L(2, chi) sum") {
  for (int D : {2, 3, 5, 6, 7, 11, 13}) {
    const Field F = make_field(D);
    const double L = l2_direct(F->disc, 2'000'000);
    CHECK(F->l2chi == doctest::Approx(L).epsilon(F->disc * 1e-6));
    const double pi = std::numbers::pi;
    const double kappa = F->disc * (pi * pi / 6.0 * L) / (4.0 * F->regulator * pi * pi * pi);
    CHECK(F->kappa == doctest::Approx(kappa).epsilon(F->disc * 1e-6));
  }
}

TEST_CASE("rational mode") {
  const Field Q = make_field(1);
  CHECK(Q->degree == 1);
  CHECK(Q->regulator == 1.0);
  CHECK(Q->kappa == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
}

TEST_CASE("unsupported fields are rejected") {
  CHECK_THROWS_AS(make_field(4), UnsupportedField);
  CHECK_THROWS_AS(make_field(0), UnsupportedField);
  CHECK_THROWS_AS(make_field(10), UnsupportedField);
  CHECK_THROWS_AS(make_field(-1), UnsupportedField);
  for (int D : supported_fields()) CHECK_NOTHROW(make_field(D));
}

TEST_CASE("fundamental unit") {
  for (int D : {2, 3, 5, 6, 7, 11, 13}) {
    const Field F = make_field(D);
    const OFElem e = F.fundamental_unit();
    CHECK(e.is_unit());
    CHECK(e.embed(0) > 1.0);
    CHECK(e.norm() == F->eps_norm);
    CHECK(F.tp_generator().totally_positive());
    CHECK(F->unit_index == (F->eps_norm == 1 ? 2 : 4));
  }
}

TEST_CASE("norm and trace are multiplicative and additive") {
  std::mt19937_64 rng(1);
  for (int D : {2, 5, 7, 13}) {
    const Field F = make_field(D);
    for (int k = 0; k < 200; ++k) {
      const OFElem x = random_elem(F, rng, 30), y = random_elem(F, rng, 30);
      CHECK((x * y).norm() == x.norm() * y.norm());
      CHECK((x + y).trace() == x.trace() + y.trace());
      CHECK(x.conj().conj() == x);
      CHECK(x.embed(0) * x.embed(1) == doctest::Approx(static_cast<double>(x.norm())));
      for (int e = 0; e < 2; ++e) {
        const double v = x.embed(e);
        if (std::abs(v) > 1e-9) CHECK(x.sign_at(e) == (v > 0 ? 1 : -1));
      }
    }
  }
}

TEST_CASE("exact division and unit inverse") {
  const Field F = make_field(7);
  const OFElem x = F.elem(5, 2), y = F.elem(3, 1);
  const auto q = (x * y).exact_div(y);
  REQUIRE(q.has_value());
  CHECK(*q == x);
  CHECK_FALSE(F.elem(1, 0).exact_div(F.elem(3, 1)).has_value());
  const OFElem e = F.fundamental_unit();
  CHECK(e * e.unit_inverse() == F.one());
  CHECK(e.pow(-2) * e.pow(2) == F.one());
  CHECK_THROWS_AS(F.elem(2).unit_inverse(), DomainError);
}

TEST_CASE("divmod_near") {
  std::mt19937_64 rng(2);
  for (int D : {2, 3, 5, 6, 7, 11, 13}) {
    const Field F = make_field(D);
    for (int k = 0; k < 100; ++k) {
      const OFElem d = random_elem(F, rng, 40);
      OFElem c = random_elem(F, rng, 15);
      if (c.is_zero()) continue;
      const auto [q, r] = divmod_near(d, c);
      CHECK(d == c * q + r);
      CHECK(abs(r.norm()) < abs(c.norm()));
    }
  }
  const Field F = make_field(7);
  const auto [q, r] = divmod_near(F.elem(10), F.elem(3));
  CHECK(F.elem(10) == F.elem(3) * q + r);
  CHECK(abs(r.norm()) < 9);
}

TEST_CASE("ext_gcd gives a unimodular completion") {
  std::mt19937_64 rng(3);
  const Field F = make_field(7);
  for (int k = 0; k < 100; ++k) {
    const auto [d, c] = random_coprime_pair(F, rng, 500);
    const auto [a, b] = ext_gcd(c, d);
    CHECK(a * d - b * c == F.one());
  }
  CHECK_THROWS_AS(ext_gcd(F.elem(2), F.elem(4)), NotCoprime);
}

TEST_CASE("gcd generates the ideal") {
  const Field F = make_field(7);
  const OFElem g = gcd(F.elem(6), F.elem(4, 2));
  CHECK(F.elem(6).divisible_by(g));
  CHECK(F.elem(4, 2).divisible_by(g));
  CHECK(abs(g.norm()) == 12);  // 2 (2 + sqrt7)
}

TEST_CASE("primes and residue transversals") {
  const Field F = make_field(7);
  CHECK(is_prime_element(F.elem(3, 1)));   // norm 2
  CHECK(is_prime_element(F.elem(2, 1)));   // norm -3
  CHECK(is_prime_element(F.elem(5)));      // inert
  CHECK_FALSE(is_prime_element(F.elem(2)));
  CHECK(residue_transversal(F.elem(3, 1)).size() == 2);
  CHECK(residue_transversal(F.elem(5)).size() == 25);
  const auto T = residue_transversal(F.elem(6, 1));  // norm 29
  CHECK(T.size() == 29);
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t k = i + 1; k < T.size(); ++k)
      CHECK_FALSE((T[i] - T[k]).divisible_by(F.elem(6, 1)));
}

TEST_CASE("ModMatrix") {
  const Field F = make_field(7);
  CHECK_THROWS_AS(ModMatrix(F.elem(2), F.zero(), F.zero(), F.one()), NotUnimodular);
  const ModMatrix A(F.elem(-2, -1), F.elem(1, 1), F.elem(3, 1), F.elem(-2, -1));
  CHECK(A * A.inverse() == ModMatrix::identity(F));
  CHECK(A.pow(3) == A * A * A);
  CHECK(A.pow(-1) == A.inverse());
  const ModMatrix S = ModMatrix::S(F);
  CHECK(S * S == -ModMatrix::identity(F));
  const cplx z(0.3, 1.7);
  const cplx w = A.act(0, A.inverse().act(0, z));
  CHECK(std::abs(w - z) < 1e-12);
  CHECK(to_string(F.elem(3, -1)) == "[3, -1]");
}

TEST_CASE("kronecker symbol") {
  CHECK(kronecker(28, 3) == 1);
  CHECK(kronecker(28, 5) == -1);
  CHECK(kronecker(28, 2) == 0);
  CHECK(kronecker(28, 7) == 0);
  CHECK(kronecker(5, 2) == -1);
  CHECK(kronecker(8, 3) == -1);
}
