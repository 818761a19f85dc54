#include "hds/eta.hpp"

#include <cmath>
#include <numbers>

#include "hds/summation.hpp"

namespace hds {

namespace {

constexpr double kPi = std::numbers::pi;

std::array<double, 2> imag_parts(const FieldData& F, const UHPoint& z) {
  if (static_cast<int>(z.size()) != F.degree)
    throw DomainError("point has " + std::to_string(z.size()) + " coordinates, field degree is " +
                      std::to_string(F.degree));
  std::array<double, 2> y{z[0].imag(), z[0].imag()};
  if (F.degree == 2) y[1] = z[1].imag();
  return y;
}

double lambda_scale(const FieldData& F) {
  return std::sqrt(static_cast<double>(F.disc)) / (2.0 * F.regulator);
}

}  // namespace

SeriesValue omega(const Field& F, const UHPoint& z, int j, const TruncationParams& trunc) {
  const auto y = imag_parts(*F, z);
  const NuMuStream s = enumerate_nu_mu(F, y, j, trunc);
  // sum_k xi_k x_k = p A + q Bw for mu*nu = p + q w, evaluated from exact integers
  long double A = z[0].real(), Bw = 0.0L;
  const auto T = static_cast<__int128>(F->omega_t), M = static_cast<__int128>(F->omega_m);
  if (F->degree == 2) {
    const long double sq = std::sqrt(static_cast<long double>(F->D));
    const long double w0 = F->basis == Basis::HalfSqrt ? (1.0L + sq) / 2.0L : sq;
    const long double w1 = F->basis == Basis::HalfSqrt ? (1.0L - sq) / 2.0L : -sq;
    const long double da = static_cast<long double>(F->delta_a);
    const long double db = static_cast<long double>(F->delta_b);
    const long double d0 = da + db * w0, d1 = da + db * w1;
    const long double x0 = z[0].real(), x1 = z[1].real();
    A = x0 / d0 + x1 / d1;
    Bw = w0 * x0 / d0 + w1 * x1 / d1;
  }
  const auto& terms = s.terms;
  cplx v = chunked_sum<cplx>(terms.size(), [&](std::size_t i) {
    const NuMuTerm& t = terms[i];
    const __int128 p = static_cast<__int128>(t.mu_a) * t.nu_a + M * t.mu_b * t.nu_b;
    const __int128 q = static_cast<__int128>(t.mu_a) * t.nu_b +
                       static_cast<__int128>(t.mu_b) * t.nu_a + T * t.mu_b * t.nu_b;
    long double turns = static_cast<long double>(p) * A + static_cast<long double>(q) * Bw;
    turns -= std::floor(turns);
    const double phase = 2.0 * kPi * static_cast<double>(turns);
    return std::polar(t.coeff * std::exp(-t.weight), phase);
  });
  return {v, s.tail_bound, terms.size(), s.weight_bound};
}

SeriesValue lambda(const Field& F, const UHPoint& z, int j, const TruncationParams& trunc) {
  const double scale = lambda_scale(*F);
  TruncationParams t = trunc;
  t.target_tol = trunc.target_tol / std::max(1.0, scale);
  SeriesValue om = omega(F, z, j, t);
  double yprod = 1.0;
  for (std::size_t k = 0; k < z.size(); ++k)
    if (static_cast<int>(k) != j) yprod *= z[k].imag();
  const cplx zj = z[static_cast<std::size_t>(j)];
  const cplx main = cplx(0.0, kPi * F->kappa) * zj * yprod;
  return {main - scale * om.value, scale * om.tail_error, om.terms, om.weight_bound};
}

RealValue h_function(const Field& F, const UHPoint& z, const TruncationParams& trunc) {
  SeriesValue L = lambda(F, z, 0, trunc);
  return {-4.0 * L.value.real(), 4.0 * L.tail_error};
}

cplx isometric_apex(const ModMatrix& A, int j) {
  const double c = A.c().embed(j), d = A.d().embed(j);
  return {-d / c, 1.0 / std::abs(c)};
}

cplx balanced_aux_point(const ModMatrix& A, const UHPoint& zhat, int j) {
  const double c = A.c().embed(j), d = A.d().embed(j);
  double m = std::abs(c);
  for (std::size_t i = 0; i < zhat.size(); ++i) {
    const int k = hat_embedding(j, i);
    m *= std::abs(A.c().embed(k) * zhat[i] + A.d().embed(k));
  }
  return {-d / c, 1.0 / m};
}

PhiValue phi_with_aux(const ModMatrix& A, const UHPoint& zhat, int j, cplx z_aux,
                      const TruncationParams& trunc) {
  const Field& F = A.field();
  if (static_cast<int>(zhat.size()) != F->degree - 1)
    throw DomainError("phi: reduced point must have degree - 1 coordinates");
  if (A.c().is_zero()) {
    return {F->kappa * A.b().embed(j) * A.d().embed(j) * zhat.imag_product(), 0.0};
  }
  const UHPoint z = insert_coordinate(zhat, j, z_aux);
  const UHPoint Az = act_full(A, z);
  const SeriesValue L1 = lambda(F, Az, j, trunc);
  const SeriesValue L0 = lambda(F, z, j, trunc);
  const cplx cz = A.c().embed(j) * z_aux + A.d().embed(j);
  const cplx lg = std::log(-(cz * cz));
  const double v = (L1.value - L0.value - 0.25 * lg).imag() / kPi;
  return {v, (L1.tail_error + L0.tail_error) / kPi};
}

PhiValue phi(const ModMatrix& A, const UHPoint& zhat, int j, const TruncationParams& trunc) {
  if (A.c().is_zero()) return phi_with_aux(A, zhat, j, cplx(0.0, 1.0), trunc);
  return phi_with_aux(A, zhat, j, balanced_aux_point(A, zhat, j), trunc);
}

cplx modular_defect(const ModMatrix& A, const UHPoint& z, int j, const TruncationParams& trunc,
                    double* budget) {
  const Field& F = A.field();
  const UHPoint Az = act_full(A, z);
  const SeriesValue L1 = lambda(F, Az, j, trunc);
  const SeriesValue L0 = lambda(F, z, j, trunc);
  const PhiValue ph = phi(A, drop_coordinate(z, j), j, trunc);
  cplx r = L1.value - L0.value - cplx(0.0, kPi * ph.value);
  if (!A.c().is_zero()) {
    const cplx czj = A.c().embed(j) * z[static_cast<std::size_t>(j)] + A.d().embed(j);
    cplx acc = std::log(-(czj * czj));
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (static_cast<int>(k) == j) continue;
      const cplx czk = A.c().embed(static_cast<int>(k)) * z[k] + A.d().embed(static_cast<int>(k));
      acc += std::log(std::norm(czk));
    }
    r -= 0.25 * acc;
  }
  if (budget) *budget = L1.tail_error + L0.tail_error + kPi * ph.tail_error;
  return r;
}

int delta_cocycle(const ModMatrix& A, const ModMatrix& B, int j) {
  const ModMatrix C = A * B;
  return -(A.c().sign_at(j) * B.c().sign_at(j) * C.c().sign_at(j));
}

IdentityDefect cocycle_defect(const ModMatrix& A, const ModMatrix& B, const UHPoint& zhat, int j,
                              const TruncationParams& trunc) {
  const PhiValue ab = phi(A * B, zhat, j, trunc);
  const PhiValue a = phi(A, act_hat(B, zhat, j), j, trunc);
  const PhiValue b = phi(B, zhat, j, trunc);
  const double defect = ab.value - a.value - b.value - 0.25 * delta_cocycle(A, B, j);
  return {defect, ab.tail_error + a.tail_error + b.tail_error + 3 * kRoundingSlack};
}

SeriesValue classical_ln_eta(cplx z, double tol) {
  if (!(z.imag() > 0.0)) throw DomainError("classical_ln_eta: Im z must be positive");
  const cplx q = std::exp(cplx(0.0, 2.0 * kPi) * z);
  const double aq = std::abs(q);
  Neumaier<cplx> acc;
  cplx qn = q;
  double aqn = aq;
  std::size_t n = 0;
  double tail = 0.0;
  for (;;) {
    acc.add(std::log(1.0 - qn));
    ++n;
    // |sum_{m > n} Log(1 - q^m)| <= |q|^{n+1} / (1 - |q|)^2
    tail = aqn * aq / ((1.0 - aq) * (1.0 - aq));
    if (tail < tol || n > 100000000) break;
    qn *= q;
    aqn *= aq;
  }
  return {cplx(0.0, kPi / 12.0) * z + acc.sum(), tail, n, 0.0};
}

}  // namespace hds
