#pragma once

#include <cmath>
#include <cstddef>

#include "hds/field.hpp"
#include "hds/uhp.hpp"
#include "hds/unit_domain.hpp"

namespace hds {

struct SeriesValue {
  cplx value{};
  double tail_error = 0.0;
  std::size_t terms = 0;
  double weight_bound = 0.0;
};

struct PhiValue {
  double value = 0.0;
  double tail_error = 0.0;
};

struct IdentityDefect {
  double defect = 0.0;
  double budget = 0.0;
  bool pass() const { return std::abs(defect) <= budget; }
};

// Floating-point allowance added to every tail budget.
inline constexpr double kRoundingSlack = 1e-10;

struct RealValue {
  double value = 0.0;
  double tail_error = 0.0;
};

// Omega_j(z) = sum over (nu mod U+, mu) of [U:U+]^{-1}/|N nu| e^{2 i pi (mu nu/delta)_j z_j}
//              prod_{k != j} e^{2 i pi ((mu nu/delta)_k x_k + i |(mu nu/delta)_k| y_k)}
SeriesValue omega(const Field& F, const UHPoint& z, int j, const TruncationParams& trunc);

// Lambda_j(z) = i pi kappa z_j prod_{k != j} y_k - sqrt(d_F)/(2 R_F) Omega_j(z).
// For the rational field this is ln eta(z).
SeriesValue lambda(const Field& F, const UHPoint& z, int j, const TruncationParams& trunc);

// h(z) = -4 Re Lambda_j(z); independent of j.
RealValue h_function(const Field& F, const UHPoint& z, const TruncationParams& trunc);

// Phi_j(A, zhat): kappa b_j d_j prod y_k when c = 0, otherwise
// (1/pi) Im[Lambda_j(Az) - Lambda_j(z) - ln(-(c_j z_j + d_j)^2)/4] at z_j = z_aux.
PhiValue phi(const ModMatrix& A, const UHPoint& zhat, int j, const TruncationParams& trunc);
PhiValue phi_with_aux(const ModMatrix& A, const UHPoint& zhat, int j, cplx z_aux,
                      const TruncationParams& trunc);
cplx isometric_apex(const ModMatrix& A, int j);
// Point on Re z_j = -d_j/c_j where Im prod of z and of Az agree; the apex when zhat is empty.
cplx balanced_aux_point(const ModMatrix& A, const UHPoint& zhat, int j);

// Residual of the modular transformation of Lambda_j at z, including Phi.
cplx modular_defect(const ModMatrix& A, const UHPoint& z, int j, const TruncationParams& trunc,
                    double* budget = nullptr);

// -sign(c_j c'_j c''_j) for A, B and AB.
int delta_cocycle(const ModMatrix& A, const ModMatrix& B, int j);

// Phi_j(AB, zhat) - Phi_j(A, B zhat) - Phi_j(B, zhat) - Delta(A, B)/4.
IdentityDefect cocycle_defect(const ModMatrix& A, const ModMatrix& B, const UHPoint& zhat, int j,
                              const TruncationParams& trunc);

// ln eta(z) = i pi z/12 + sum_{n >= 1} Log(1 - q^n).
SeriesValue classical_ln_eta(cplx z, double tol = 1e-15);

}  // namespace hds
