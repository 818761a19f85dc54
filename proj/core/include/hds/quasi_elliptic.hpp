#pragma once

#include <string>
#include <vector>

#include "hds/eta.hpp"
#include "hds/field.hpp"
#include "hds/unit_domain.hpp"

namespace hds {

enum class EmbeddingType { Elliptic, Hyperbolic, Parabolic };

std::string to_string(EmbeddingType t);

// Exact sign of tr(A_k)^2 - 4 at each embedding.
std::vector<EmbeddingType> classify(const ModMatrix& A);

bool is_quasi_elliptic(const ModMatrix& A);
bool is_elliptic(const ModMatrix& A);

// omega is a root of c X^2 + (d - a) X - b = 0 and eps = c omega + d is an eigenvalue of A.
struct QuasiEllipticData {
  ModMatrix A;
  int j = 0;  // hyperbolic embedding
  OFElem qc, qd_minus_a, qminus_b;
  double omega_r1 = 0.0, omega_r2 = 0.0;  // omega_r2 < omega_r1 at embedding j
  std::vector<cplx> omega_c;              // fixed points in H at k != j
  double eps_r1 = 0.0, eps_r2 = 0.0;      // c_j omega_r + d_j
  std::vector<cplx> eps_c;                // c_k omega_k + d_k, |eps_c| = 1
  OFElem relative_norm;                   // eps * eps^g, exactly 1
  int sign_c_tr = 0;                      // sign(c_j tr A_j)
};

QuasiEllipticData quasi_data(const ModMatrix& A);

// Module O_F + omega O_F with eps acting, ready for orbit enumeration.
ModuleLattice module_lattice(const QuasiEllipticData& q);

// Matrix (a b; c d) with eps omega = a omega + b and eps = c omega + d, for omega with
// p X^2 + q X + r = 0 over O_F and eps = x + y omega. Throws NotStable when the entries
// leave O_F.
ModMatrix matrix_from_unit(const OFElem& p, const OFElem& q, const OFElem& r, const OFElem& x,
                           const OFElem& y);

struct PsiValue {
  double value = 0.0;
  double tail_error = 0.0;
  int j = 0;
  double phi = 0.0;
  std::vector<cplx> points;  // omega_c used as zhat
};

// Psi_j = 2^n R Phi_j(A, omega_c) - 2^{n-2} R sign(c_j tr A_j). For quasi-elliptic A, j is the
// hyperbolic embedding and j_hint is ignored.
PsiValue psi(const ModMatrix& A, const TruncationParams& trunc, int j_hint = 0);

enum class EllipticSign { Minus, Plus };

struct EllipticClosedForm {
  double value = 0.0;
  int order = 0;
  Int witness_num = 0, witness_den = 1;  // 2 Psi_j / R as a fraction with denominator | order
  double witness_residual = 0.0;         // distance of 2 Psi_j / R from that fraction
};

// -2^{n-2} R [ln(-(c_j w_j + d_j)^2)/(i pi) - sign(c_j tr A_j)] (Minus) or with + sign
// (Plus, which is what the defining formula for Psi gives).
EllipticClosedForm psi_elliptic_closed(const ModMatrix& A, int j = 0,
                                       EllipticSign form = EllipticSign::Minus);

// Smallest m <= 12 with A^m = I; throws NotElliptic otherwise.
int finite_order(const ModMatrix& A);

}  // namespace hds
