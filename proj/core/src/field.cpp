#include "hds/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>


namespace hds {

namespace detail {

Int floor_div(const Int& x, const Int& y) {
  Int q = x / y;
  Int r = x - q * y;
  if (r != 0 && ((r < 0) != (y < 0))) q -= 1;
  return q;
}

}  // namespace detail

namespace {

bool is_squarefree(long long n) {
  for (long long p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

bool is_prime_u64(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

long long isqrt_exact(long long n) {
  if (n < 0) return -1;
  auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : -1;
}

int sign_of(const Int& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// sign of u + v*sqrt(D) computed exactly
int sign_surd(const Int& u, const Int& v, int D) {
  int su = sign_of(u), sv = sign_of(v);
  if (su >= 0 && sv >= 0) return (su > 0 || sv > 0) ? 1 : 0;
  if (su <= 0 && sv <= 0) return -1;
  Int lhs = u * u, rhs = v * v * D;
  if (su > 0) return lhs > rhs ? 1 : -1;  // u > 0 > v
  return rhs > lhs ? 1 : -1;              // u < 0 < v
}

// L(2, chi) = pi^2 d^{-5/2} sum_{a=1}^{d} chi(a) (a^2 - a d) for the even character chi = (d/.).
double l2_character(long long disc) {
  long long acc = 0;
  for (long long a = 1; a <= disc; ++a) acc += kronecker(disc, a) * (a * a - a * disc);
  const double pi = std::numbers::pi;
  return pi * pi * static_cast<double>(acc) / std::pow(static_cast<double>(disc), 2.5);
}

}  // namespace

int kronecker(long long a, long long n) {
  if (n <= 0) throw DomainError("kronecker: n must be positive");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    long long m = ((a % 8) + 8) % 8;
    if (m == 3 || m == 5) result = -result;
  }
  // Jacobi symbol (a/n), n odd
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long long m = n % 8;
      if (m == 3 || m == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

std::vector<int> supported_fields() { return {1, 2, 3, 5, 6, 7, 11, 13}; }

Field make_field(int D) {
  if (D < 1) throw UnsupportedField("D must be a positive squarefree integer");
  if (!is_squarefree(D)) throw UnsupportedField("D = " + std::to_string(D) + " is not squarefree");
  auto wl = supported_fields();
  if (std::find(wl.begin(), wl.end(), D) == wl.end())
    throw UnsupportedField("D = " + std::to_string(D) +
                           " is not in the class-number-one whitelist");

  auto F = std::make_shared<FieldData>();
  F->D = D;
  const double pi = std::numbers::pi;
  if (D == 1) {
    F->degree = 1;
    F->disc = 1;
    F->basis = Basis::Rational;
    F->sqrtD = 1.0;
    F->omega_emb = {0.0, 0.0};
    F->regulator = 1.0;
    F->tp_log = 0.0;
    F->unit_index = 1;
    F->delta_emb = {1.0, 1.0};
    F->l2chi = 1.0;
    F->zeta2 = pi * pi / 6.0;
    F->kappa = F->disc * F->zeta2 / (2.0 * F->regulator * pi * pi);
    return Field(F);
  }

  F->degree = 2;
  F->sqrtD = std::sqrt(static_cast<double>(D));
  if (D % 4 == 1) {
    F->basis = Basis::HalfSqrt;
    F->disc = D;
    F->omega_t = 1;
    F->omega_m = (D - 1) / 4;
    F->omega_emb = {(1.0 + F->sqrtD) / 2.0, (1.0 - F->sqrtD) / 2.0};
    F->delta_a = -1;
    F->delta_b = 2;
  } else {
    F->basis = Basis::Sqrt;
    F->disc = 4LL * D;
    F->omega_t = 0;
    F->omega_m = D;
    F->omega_emb = {F->sqrtD, -F->sqrtD};
    F->delta_a = 0;
    F->delta_b = 2;
  }

  // Smallest y > 0 with x^2 - D y^2 = +-1 (or +-4 on the half-integral basis).
  const long long k = (F->basis == Basis::HalfSqrt) ? 4 : 1;
  for (long long y = 1;; ++y) {
    bool found = false;
    for (int s : {-1, 1}) {
      long long x = isqrt_exact(static_cast<long long>(D) * y * y + s * k);
      if (x < 0) continue;
      if (F->basis == Basis::HalfSqrt) {
        if ((x - y) % 2 != 0) continue;
        F->eps_a = (x - y) / 2;
        F->eps_b = y;
      } else {
        F->eps_a = x;
        F->eps_b = y;
      }
      F->eps_norm = s;  // x^2 - D y^2 = s*k
      found = true;
      break;
    }
    if (found) break;
  }

  auto emb0 = [&](const Int& a, const Int& b) {
    return static_cast<double>(a) + static_cast<double>(b) * F->omega_emb[0];
  };
  auto emb1 = [&](const Int& a, const Int& b) {
    return static_cast<double>(a) + static_cast<double>(b) * F->omega_emb[1];
  };
  F->regulator = std::log(emb0(F->eps_a, F->eps_b));
  if (F->eps_norm == 1) {
    F->tp_a = F->eps_a;
    F->tp_b = F->eps_b;
    F->unit_index = 2;
  } else {
    // eps^2
    Int a = F->eps_a, b = F->eps_b;
    F->tp_a = a * a + F->omega_m * b * b;
    F->tp_b = 2 * a * b + F->omega_t * b * b;
    F->unit_index = 4;
  }
  F->tp_log = std::log(emb0(F->tp_a, F->tp_b));
  F->delta_emb = {emb0(F->delta_a, F->delta_b), emb1(F->delta_a, F->delta_b)};

  F->l2chi = l2_character(F->disc);
  F->zeta2 = pi * pi / 6.0 * F->l2chi;
  F->kappa = F->disc * F->zeta2 / (4.0 * F->regulator * pi * pi * pi);
  F->euclid_steps = 1;
  return Field(F);
}

OFElem Field::elem(Int a, Int b) const { return OFElem(*this, std::move(a), std::move(b)); }
OFElem Field::zero() const { return elem(0); }
OFElem Field::one() const { return elem(1); }
OFElem Field::omega() const {
  if (data_->degree == 1) throw DomainError("rational field has no second basis element");
  return elem(0, 1);
}
OFElem Field::fundamental_unit() const { return elem(data_->eps_a, data_->eps_b); }
OFElem Field::tp_generator() const { return elem(data_->tp_a, data_->tp_b); }
OFElem Field::different() const { return elem(data_->delta_a, data_->delta_b); }

OFElem::OFElem(Field F, Int a, Int b) : F_(std::move(F)), a_(std::move(a)), b_(std::move(b)) {
  if (!F_.valid()) throw DomainError("element without field");
  if (F_->degree == 1 && b_ != 0) throw DomainError("rational element with nonzero w-coordinate");
}

double OFElem::embed(int k) const {
  if (F_->degree == 1) return static_cast<double>(a_);
  return static_cast<double>(a_) + static_cast<double>(b_) * F_->omega_emb[static_cast<std::size_t>(k)];
}

std::array<double, 2> OFElem::embeddings() const {
  if (F_->degree == 1) return {embed(0), embed(0)};
  return {embed(0), embed(1)};
}

int OFElem::sign_at(int k) const {
  if (F_->degree == 1) return sign_of(a_);
  const int s = (k == 0) ? 1 : -1;
  if (F_->basis == Basis::Sqrt) return sign_surd(a_, s * b_, F_->D);
  return sign_surd(2 * a_ + b_, s * b_, F_->D);
}

bool OFElem::totally_positive() const {
  for (int k = 0; k < F_->degree; ++k)
    if (sign_at(k) <= 0) return false;
  return true;
}

Int OFElem::norm() const {
  if (F_->degree == 1) return a_;
  return a_ * a_ + F_->omega_t * a_ * b_ - F_->omega_m * b_ * b_;
}

Int OFElem::trace() const {
  if (F_->degree == 1) return a_;
  return 2 * a_ + F_->omega_t * b_;
}

OFElem OFElem::conj() const {
  if (F_->degree == 1) return *this;
  return OFElem(F_, a_ + F_->omega_t * b_, -b_);
}

bool OFElem::is_unit() const {
  Int n = norm();
  return n == 1 || n == -1;
}

std::optional<OFElem> OFElem::exact_div(const OFElem& y) const {
  if (y.is_zero()) throw DomainError("division by zero");
  Int n = y.norm();
  OFElem t = *this * y.conj();
  if (F_->degree == 1) {
    // conj is the identity and norm is the element itself
    if (a_ % y.a_ != 0) return std::nullopt;
    return OFElem(F_, a_ / y.a_);
  }
  if (t.a_ % n != 0 || t.b_ % n != 0) return std::nullopt;
  return OFElem(F_, t.a_ / n, t.b_ / n);
}

OFElem OFElem::unit_inverse() const {
  if (!is_unit()) throw DomainError("element " + to_string(*this) + " is not a unit");
  if (F_->degree == 1) return *this;
  OFElem c = conj();
  return norm() == 1 ? c : -c;
}

OFElem OFElem::pow(int k) const {
  OFElem base = k < 0 ? unit_inverse() : *this;
  int e = k < 0 ? -k : k;
  OFElem r = F_.one();
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

OFElem operator+(const OFElem& x, const OFElem& y) { return OFElem(x.F_, x.a_ + y.a_, x.b_ + y.b_); }
OFElem operator-(const OFElem& x, const OFElem& y) { return OFElem(x.F_, x.a_ - y.a_, x.b_ - y.b_); }
OFElem operator-(const OFElem& x) { return OFElem(x.F_, -x.a_, -x.b_); }
OFElem operator*(const OFElem& x, const OFElem& y) {
  const auto& F = *x.F_;
  Int bb = x.b_ * y.b_;
  return OFElem(x.F_, x.a_ * y.a_ + F.omega_m * bb, x.a_ * y.b_ + x.b_ * y.a_ + F.omega_t * bb);
}

std::string to_string(const OFElem& x) {
  std::ostringstream os;
  os << '[' << x.a() << ", " << x.b() << ']';
  return os.str();
}

std::pair<OFElem, OFElem> divmod_near(const OFElem& d, const OFElem& c) {
  if (c.is_zero()) throw DomainError("divmod_near: zero divisor");
  const Field& F = c.field();
  if (d.is_zero()) return {F.zero(), F.zero()};
  Int n = c.norm();
  OFElem t = d * c.conj();
  if (F->degree == 1) t = d * c, n = c.a() * c.a();
  // nearest integers to t/n coordinatewise
  auto nearest = [&](const Int& u) { return detail::floor_div(2 * u + n, 2 * n); };
  Int qa0 = nearest(t.a()), qb0 = nearest(t.b());
  const Int nc = abs(n);
  std::optional<OFElem> best_q, best_r;
  Int best_n = 0;
  // Widen the window until the remainder norm drops below |N(c)|.
  for (int w = 2; w <= 32 && !(best_q && best_n < nc); w *= 2) {
    const int wb = F->degree == 1 ? 0 : w;
    for (int ia = -w; ia <= w; ++ia) {
      for (int ib = -wb; ib <= wb; ++ib) {
        OFElem q(F, qa0 + ia, qb0 + ib);
        OFElem r = d - c * q;
        Int nr = abs(r.norm());
        bool better = !best_q || nr < best_n ||
                      (nr == best_n && (q.a() < best_q->a() ||
                                        (q.a() == best_q->a() && q.b() < best_q->b())));
        if (better) {
          best_q = q;
          best_r = r;
          best_n = nr;
        }
      }
    }
  }
  return {*best_q, *best_r};
}

std::pair<OFElem, OFElem> ext_gcd(const OFElem& c, const OFElem& d) {
  if (c.is_zero()) throw DomainError("ext_gcd: c must be nonzero");
  const Field& F = c.field();
  OFElem old_r = d, r = c;
  OFElem old_s = F.one(), s = F.zero();  // coefficient of d
  OFElem old_t = F.zero(), t = F.one();  // coefficient of c
  Int cap = Int(F->euclid_steps) * abs(c.norm()) + 2;
  Int steps = 0;
  while (!r.is_zero()) {
    if (++steps > cap) throw NonTermination("ext_gcd: Euclidean chain exceeded its step cap");
    auto [q, rem] = divmod_near(old_r, r);
    old_r = std::exchange(r, rem);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (!old_r.is_unit())
    throw NotCoprime("ext_gcd: " + to_string(c) + " and " + to_string(d) + " are not coprime");
  OFElem g_inv = old_r.unit_inverse();
  return {old_s * g_inv, -(old_t * g_inv)};
}

OFElem gcd(const OFElem& x, const OFElem& y) {
  OFElem a = x, b = y;
  int guard = 0;
  while (!b.is_zero()) {
    if (++guard > 100000) throw NonTermination("gcd: no termination");
    auto [q, r] = divmod_near(a, b);
    (void)q;
    a = std::exchange(b, r);
  }
  return a;
}

std::vector<OFElem> residue_transversal(const OFElem& p) {
  if (p.is_zero()) throw DomainError("residue_transversal: zero modulus");
  const Field& F = p.field();
  Int n = abs(p.norm());
  std::vector<OFElem> out;
  if (F->degree == 1) {
    for (Int a = 0; a < n; ++a) out.push_back(F.elem(a));
    return out;
  }
  OFElem pw = p * F.omega();
  Int g2 = boost::multiprecision::gcd(p.b(), pw.b());
  g2 = abs(g2);
  Int g1 = n / g2;
  for (Int b = 0; b < g2; ++b)
    for (Int a = 0; a < g1; ++a) out.push_back(F.elem(a, b));
  return out;
}

bool is_prime_element(const OFElem& p) {
  if (p.is_zero() || p.is_unit()) return false;
  Int n = abs(p.norm());
  if (n > Int(1) << 62) throw DomainError("is_prime_element: norm too large");
  auto nn = static_cast<unsigned long long>(n);
  if (is_prime_u64(nn)) return true;
  if (p.field()->degree == 1) return false;
  auto r = static_cast<unsigned long long>(std::llround(std::sqrt(static_cast<double>(nn))));
  if (r * r != nn || !is_prime_u64(r)) return false;
  return kronecker(p.field()->disc, static_cast<long long>(r)) == -1;
}

ModMatrix::ModMatrix(OFElem a, OFElem b, OFElem c, OFElem d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  OFElem det = a_ * d_ - b_ * c_;
  if (!(det == a_.field().one()))
    throw NotUnimodular("matrix determinant is " + to_string(det) + ", expected 1");
}

ModMatrix ModMatrix::identity(const Field& F) { return {F.one(), F.zero(), F.zero(), F.one()}; }
ModMatrix ModMatrix::S(const Field& F) { return {F.zero(), -F.one(), F.one(), F.zero()}; }
ModMatrix ModMatrix::translation(const OFElem& q) {
  const Field& F = q.field();
  return {F.one(), q, F.zero(), F.one()};
}

ModMatrix ModMatrix::inverse() const { return {d_, -b_, -c_, a_}; }

ModMatrix ModMatrix::pow(int k) const {
  ModMatrix base = k < 0 ? inverse() : *this;
  int e = k < 0 ? -k : k;
  ModMatrix r = identity(field());
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::array<double, 4> ModMatrix::embed(int k) const {
  return {a_.embed(k), b_.embed(k), c_.embed(k), d_.embed(k)};
}

cplx ModMatrix::act(int k, cplx z) const {
  auto [a, b, c, d] = embed(k);
  return (a * z + b) / (c * z + d);
}

ModMatrix operator*(const ModMatrix& x, const ModMatrix& y) {
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
          x.c_ * y.b_ + x.d_ * y.d_};
}

ModMatrix operator-(const ModMatrix& x) { return {-x.a_, -x.b_, -x.c_, -x.d_}; }

std::string to_string(const ModMatrix& A) {
  return "[[" + to_string(A.a()) + ", " + to_string(A.b()) + "], [" + to_string(A.c()) + ", " +
         to_string(A.d()) + "]]";
}

}  // namespace hds
