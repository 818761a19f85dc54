#pragma once

#include <array>
#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hds/errors.hpp"

namespace hds {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using cplx = std::complex<double>;

// Integral basis {1, w}: w = sqrt(D) for D = 2,3 mod 4, w = (1+sqrt(D))/2 for D = 1 mod 4.
// The degree-1 placeholder (D = 1) stands for the rational field.
enum class Basis { Rational, Sqrt, HalfSqrt };

struct FieldData {
  int D = 1;
  int degree = 1;
  long long disc = 1;
  Basis basis = Basis::Rational;
  // w^2 = omega_t * w + omega_m
  long long omega_t = 0;
  long long omega_m = 0;
  double sqrtD = 1.0;
  std::array<double, 2> omega_emb{0.0, 0.0};

  Int eps_a = 1, eps_b = 0;  // fundamental unit, first embedding > 1
  int eps_norm = 1;
  Int tp_a = 1, tp_b = 0;  // generator of the totally positive units
  double regulator = 1.0;  // ln of the fundamental unit at the first embedding
  double tp_log = 0.0;     // ln of the totally positive generator at the first embedding
  int unit_index = 1;      // [U : U+]
  Int delta_a = 1, delta_b = 0;  // generator of the different
  std::array<double, 2> delta_emb{1.0, 1.0};

  double l2chi = 1.0;  // L(2, chi_disc)
  double zeta2 = 0.0;
  double kappa = 0.0;
  int euclid_steps = 1;
};

class OFElem;

// Shared immutable handle to a field.
class Field {
 public:
  Field() = default;
  explicit Field(std::shared_ptr<const FieldData> data) : data_(std::move(data)) {}

  const FieldData& operator*() const { return *data_; }
  const FieldData* operator->() const { return data_.get(); }
  bool valid() const { return static_cast<bool>(data_); }
  int degree() const { return data_->degree; }

  OFElem elem(Int a, Int b = 0) const;
  OFElem zero() const;
  OFElem one() const;
  OFElem omega() const;
  OFElem fundamental_unit() const;
  OFElem tp_generator() const;
  OFElem different() const;

  friend bool operator==(const Field& x, const Field& y) {
    return x.data_ == y.data_ || (x.data_ && y.data_ && x.data_->D == y.data_->D);
  }

 private:
  std::shared_ptr<const FieldData> data_;
};

Field make_field(int D);
std::vector<int> supported_fields();

// Element a + b*w of O_F.
class OFElem {
 public:
  OFElem() = default;
  OFElem(Field F, Int a, Int b = 0);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Field& field() const { return F_; }

  double embed(int k) const;
  std::array<double, 2> embeddings() const;
  int sign_at(int k) const;  // exact sign of the k-th real embedding
  bool totally_positive() const;
  Int norm() const;
  Int trace() const;
  OFElem conj() const;
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_unit() const;
  bool is_rational_integer() const { return b_ == 0; }

  // this / y when y divides this in O_F
  std::optional<OFElem> exact_div(const OFElem& y) const;
  bool divisible_by(const OFElem& y) const { return exact_div(y).has_value(); }
  OFElem unit_inverse() const;  // throws DomainError unless a unit
  OFElem pow(int k) const;       // k may be negative for units

  friend OFElem operator+(const OFElem& x, const OFElem& y);
  friend OFElem operator-(const OFElem& x, const OFElem& y);
  friend OFElem operator*(const OFElem& x, const OFElem& y);
  friend OFElem operator-(const OFElem& x);
  friend bool operator==(const OFElem& x, const OFElem& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  Field F_;
  Int a_ = 0, b_ = 0;
};

std::string to_string(const OFElem& x);  // "[a, b]"

// d = c*q + r with q near d/c minimising |N(r)|; ties broken lexicographically on (a, b).
std::pair<OFElem, OFElem> divmod_near(const OFElem& d, const OFElem& c);

// (a, b) with a*d - b*c = 1.
std::pair<OFElem, OFElem> ext_gcd(const OFElem& c, const OFElem& d);

// A generator of the ideal (x, y); zero only if both are zero.
OFElem gcd(const OFElem& x, const OFElem& y);

// Transversal of O_F/(p): minimal nonnegative coordinates after HNF reduction.
std::vector<OFElem> residue_transversal(const OFElem& p);

bool is_prime_element(const OFElem& p);

class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(OFElem a, OFElem b, OFElem c, OFElem d);  // throws NotUnimodular

  static ModMatrix identity(const Field& F);
  static ModMatrix S(const Field& F);
  static ModMatrix translation(const OFElem& q);

  const OFElem& a() const { return a_; }
  const OFElem& b() const { return b_; }
  const OFElem& c() const { return c_; }
  const OFElem& d() const { return d_; }
  const Field& field() const { return a_.field(); }

  OFElem trace() const { return a_ + d_; }
  ModMatrix inverse() const;
  ModMatrix pow(int k) const;
  std::array<double, 4> embed(int k) const;
  cplx act(int k, cplx z) const;  // Moebius action of the k-th embedding

  friend ModMatrix operator*(const ModMatrix& x, const ModMatrix& y);
  friend ModMatrix operator-(const ModMatrix& x);
  friend bool operator==(const ModMatrix& x, const ModMatrix& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

 private:
  OFElem a_, b_, c_, d_;
};

std::string to_string(const ModMatrix& A);

int kronecker(long long a, long long n);

namespace detail {
Int floor_div(const Int& x, const Int& y);
}

}  // namespace hds
