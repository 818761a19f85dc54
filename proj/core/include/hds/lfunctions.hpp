#pragma once

#include <cstddef>
#include <string>

#include "hds/field.hpp"
#include "hds/quasi_elliptic.hpp"
#include "hds/uhp.hpp"

namespace hds {

struct LASeriesValue {
  cplx s{};
  cplx value{};
  double tail_error = 0.0;
  double norm_bound = 0.0;
  std::size_t orbits = 0;
  bool heuristic_tail = true;  // orbit-count constant is calibrated, not proven
};

// L_A(s) = sign(c_j tr A_j) sum over beta in (M_omega - 0)/U_A of sign(beta_r1 beta_r2)/|N(beta)|^s,
// truncated at |N(beta)| <= X. Needs Re s >= 1.5.
LASeriesValue l_a(const ModMatrix& A, cplx s, double X,
                  std::size_t max_terms = 50'000'000);

struct EisParams {
  double norm_bound = 1e5;  // keep terms with prod |mu_k z_k + nu_k|^2 / y_k <= norm_bound
  std::size_t max_terms = 50'000'000;
};

struct EisValue {
  double value = 0.0;
  double tail_error = 0.0;  // heuristic: asymptotic orbit count, doubled
  std::size_t terms = 0;
};

struct EisDerivValue {
  cplx value{};
  double tail_error = 0.0;
  std::size_t terms = 0;
};

// E_F(z, s) = sum over (mu, nu) in (O_F^2 - 0)/U_F of prod_k y_k^s / |mu_k z_k + nu_k|^{2s}, s real.
EisValue eis(const Field& F, const UHPoint& z, double s, const EisParams& p = {});

// (s/2i) sum y_1^{s-1} (mu_1 conj z_1 + nu_1)^2 / |mu_1 z_1 + nu_1|^{2s+2}
//        prod_{k >= 2} y_k^s / |mu_k z_k + nu_k|^{2s}
// which equals (1/2)(d/dx_1 - i d/dy_1) E_F.
EisDerivValue eis_dz1(const Field& F, const UHPoint& z, double s, const EisParams& p = {});

// Residue-based orbit density: #{G <= X} ~ density * X.
double eis_orbit_density(const FieldData& F);

struct GeodesicArc {
  double omega_r1 = 0.0, omega_r2 = 0.0;
  double t0 = 1.0;       // base point tau = g(t0)
  double t1 = 1.0;       // f(A_1 tau) = t1
  double ratio = 1.0;    // t1 / t0, equals eps_r1^2
  double ratio_check = 0.0;  // |ratio - eps_r1^2| / eps_r1^2 + |Im f(A_1 tau)| / |f|
  cplx tau{}, tau_image{};
};

// f(z) = i (z - w_r2) / (z - w_r1) maps the semicircle on [w_r2, w_r1] onto (0, inf);
// g is its inverse.
GeodesicArc geodesic_arc(const QuasiEllipticData& q, double t0 = 1.0);
cplx arc_point(const GeodesicArc& arc, double t);
cplx arc_tangent(const GeodesicArc& arc, double t);

struct PeriodValue {
  cplx value{};
  double quad_error = 0.0;    // |I_m - I_2m| at the final order
  double series_error = 0.0;  // tails of the integrand times the arc length
  unsigned order = 0;
};

struct PeriodParams {
  unsigned order = 64;
  unsigned max_order = 512;
  double quad_tol = 1e-7;  // stop doubling once |I_m - I_2m| < quad_tol / 10
  double t0 = 1.0;
  EisParams eis;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Integral of d/dz_1 E_F(z_1, omega_c, s) dz_1 from tau to A_1 tau along the arc, by
// Gauss-Legendre quadrature in u = ln t.
PeriodValue geodesic_period(const ModMatrix& A, double s, const PeriodParams& p = {});

struct PeriodIdentityReport {
  double s = 0.0;
  PeriodValue period;
  LASeriesValue la;
  cplx factor{};  // Gamma((s+1)/2)^2 Vol^s / (Gamma(s) 2i d_F^s)
  cplx rhs{};
  double volume = 0.0;  // d_F (w_r1 - w_r2) Im w_c
  double defect = 0.0;
  double relative_defect = 0.0;
  double budget = 0.0;
};

PeriodIdentityReport period_identity(const ModMatrix& A, double s, double la_norm_bound = 2e5,
                                     const PeriodParams& p = {});

struct DerivReport {
  double value = 0.0;  // (n-1)! Psi(A)
  double tail_error = 0.0;
  std::string label;
};

// Value of L_A^{(n-1)}(0) as given by (n-1)! Psi(A); no continuation is computed.
DerivReport l_a_deriv_report(const ModMatrix& A, const TruncationParams& trunc);

}  // namespace hds
