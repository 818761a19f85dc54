#include "hds/quasi_elliptic.hpp"

#include <cmath>
#include <numbers>

namespace hds {

namespace {

constexpr double kPi = std::numbers::pi;

// Fixed point in H of the k-th embedding of an elliptic A (|tr| < 2).
cplx elliptic_fixed_point(const ModMatrix& A, int k) {
  const auto [a, b, c, d] = A.embed(k);
  const double tr = a + d;
  const double disc = 4.0 - tr * tr;
  cplx w((a - d) / (2.0 * c), std::sqrt(disc) / (2.0 * std::abs(c)));
  return w;
}

}  // namespace

std::string to_string(EmbeddingType t) {
  switch (t) {
    case EmbeddingType::Elliptic: return "elliptic";
    case EmbeddingType::Hyperbolic: return "hyperbolic";
    case EmbeddingType::Parabolic: return "parabolic";
  }
  return "unknown";
}

std::vector<EmbeddingType> classify(const ModMatrix& A) {
  const OFElem tr = A.trace();
  const OFElem disc = tr * tr - A.field().elem(4);
  std::vector<EmbeddingType> out;
  for (int k = 0; k < A.field().degree(); ++k) {
    const int s = disc.sign_at(k);
    out.push_back(s < 0 ? EmbeddingType::Elliptic
                        : (s > 0 ? EmbeddingType::Hyperbolic : EmbeddingType::Parabolic));
  }
  return out;
}

bool is_quasi_elliptic(const ModMatrix& A) {
  int hyp = 0;
  for (EmbeddingType t : classify(A)) {
    if (t == EmbeddingType::Parabolic) return false;
    if (t == EmbeddingType::Hyperbolic) ++hyp;
  }
  return hyp == 1;
}

bool is_elliptic(const ModMatrix& A) {
  for (EmbeddingType t : classify(A))
    if (t != EmbeddingType::Elliptic) return false;
  return true;
}

QuasiEllipticData quasi_data(const ModMatrix& A) {
  if (!is_quasi_elliptic(A))
    throw NotQuasiElliptic("matrix " + to_string(A) + " is not quasi-elliptic");
  const Field& F = A.field();
  const auto types = classify(A);
  QuasiEllipticData q;
  q.A = A;
  for (int k = 0; k < F.degree(); ++k)
    if (types[static_cast<std::size_t>(k)] == EmbeddingType::Hyperbolic) q.j = k;
  q.qc = A.c();
  q.qd_minus_a = A.d() - A.a();
  q.qminus_b = -A.b();
  q.relative_norm = -(A.b() * A.c()) + A.d() * (A.a() - A.d()) + A.d() * A.d();

  const auto [a, b, c, d] = A.embed(q.j);
  const double tr = a + d;
  const double root = std::sqrt(tr * tr - 4.0);
  const double w1 = ((a - d) + root) / (2.0 * c);
  const double w2 = ((a - d) - root) / (2.0 * c);
  q.omega_r1 = std::max(w1, w2);
  q.omega_r2 = std::min(w1, w2);
  q.eps_r1 = c * q.omega_r1 + d;
  q.eps_r2 = c * q.omega_r2 + d;
  q.sign_c_tr = A.c().sign_at(q.j) * A.trace().sign_at(q.j);
  for (int k = 0; k < F.degree(); ++k) {
    if (k == q.j) continue;
    const cplx w = elliptic_fixed_point(A, k);
    q.omega_c.push_back(w);
    q.eps_c.push_back(A.c().embed(k) * w + A.d().embed(k));
  }
  return q;
}

ModuleLattice module_lattice(const QuasiEllipticData& q) {
  if (q.A.field().degree() != 2) throw DomainError("module lattice needs a quadratic field");
  ModuleLattice L;
  L.F = q.A.field();
  L.j = q.j;
  L.w_r1 = q.omega_r1;
  L.w_r2 = q.omega_r2;
  L.w_c = q.omega_c.at(0);
  L.log_eps = std::log(std::abs(q.eps_r1));
  L.ea = q.A.a();
  L.eb = q.A.b();
  L.ec = q.A.c();
  L.ed = q.A.d();
  return L;
}

ModMatrix matrix_from_unit(const OFElem& p, const OFElem& q, const OFElem& r, const OFElem& x,
                           const OFElem& y) {
  if (p.is_zero()) throw DomainError("matrix_from_unit: leading coefficient must be nonzero");
  // eps omega = x omega + y omega^2 = (x - y q/p) omega - y r/p
  const auto yq = (y * q).exact_div(p);
  const auto yr = (y * r).exact_div(p);
  if (!yq || !yr) throw NotStable("eps does not preserve O_F + omega O_F");
  return ModMatrix(x - *yq, -*yr, y, x);
}

PsiValue psi(const ModMatrix& A, const TruncationParams& trunc, int j_hint) {
  const Field& F = A.field();
  const auto types = classify(A);
  int hyp = 0, j = j_hint;
  for (int k = 0; k < F.degree(); ++k) {
    const EmbeddingType t = types[static_cast<std::size_t>(k)];
    if (t == EmbeddingType::Parabolic)
      throw NotClassifiable("psi: matrix " + to_string(A) + " has a parabolic embedding");
    if (t == EmbeddingType::Hyperbolic) {
      ++hyp;
      j = k;
    }
  }
  if (hyp > 1) throw NotQuasiElliptic("psi: more than one hyperbolic embedding");
  if (j < 0 || j >= F.degree()) throw DomainError("psi: bad embedding index");

  PsiValue out;
  out.j = j;
  for (int k = 0; k < F.degree(); ++k)
    if (k != j) out.points.push_back(elliptic_fixed_point(A, k));
  const PhiValue ph = phi(A, UHPoint(out.points), j, trunc);
  const double R = F->regulator;
  const double two_n = std::ldexp(1.0, F.degree());
  const int sct = A.c().sign_at(j) * A.trace().sign_at(j);
  out.phi = ph.value;
  out.value = two_n * R * ph.value - two_n / 4.0 * R * sct;
  out.tail_error = two_n * R * ph.tail_error;
  return out;
}

int finite_order(const ModMatrix& A) {
  const ModMatrix I = ModMatrix::identity(A.field());
  ModMatrix P = A;
  for (int m = 1; m <= 12; ++m) {
    if (P == I) return m;
    P = P * A;
  }
  throw NotElliptic("matrix " + to_string(A) + " has no finite order up to 12");
}

EllipticClosedForm psi_elliptic_closed(const ModMatrix& A, int j, EllipticSign form) {
  if (!is_elliptic(A)) throw NotElliptic("matrix " + to_string(A) + " is not elliptic");
  const Field& F = A.field();
  if (j < 0 || j >= F.degree()) throw DomainError("psi_elliptic_closed: bad embedding index");
  EllipticClosedForm out;
  out.order = finite_order(A);
  const cplx w = elliptic_fixed_point(A, j);
  const cplx lambda = A.c().embed(j) * w + A.d().embed(j);
  const double L = std::log(-(lambda * lambda)).imag() / kPi;
  const int sct = A.c().sign_at(j) * A.trace().sign_at(j);
  const double R = F->regulator;
  const double scale = std::ldexp(1.0, F.degree() - 2);
  out.value = -scale * R * (form == EllipticSign::Minus ? L - sct : L + sct);
  const double ratio = 2.0 * out.value / R;
  const auto num = std::llround(ratio * out.order);
  Rational frac(Int(num), Int(out.order));
  out.witness_num = boost::multiprecision::numerator(frac);
  out.witness_den = boost::multiprecision::denominator(frac);
  out.witness_residual = std::abs(ratio - static_cast<double>(num) / out.order);
  return out;
}

}  // namespace hds
