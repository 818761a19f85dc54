#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "hds/field.hpp"

namespace hds {

struct TruncationParams {
  double weight_bound = 0.0;  // <= 0 selects the smallest bound meeting target_tol
  double target_tol = 1e-12;
  std::size_t max_terms = 50'000'000;
};

enum class UnitGroup { Full, TotallyPositive, ModuleUnits };

struct UnitOrbitRep {
  OFElem element;
  UnitGroup group = UnitGroup::TotallyPositive;
  int exponent = 0;  // element = eta^exponent * input
};

// Representative of x modulo the totally positive units, in the half-open window
// ln|x_1/x_2| in [0, 2 ln eta_1) (snapped by 1e-9 so exact boundary points are stable).
UnitOrbitRep reduce_mod_totally_positive_units(const OFElem& x);
bool in_tp_window(const FieldData& F, double x0, double x1);

struct NuMuTerm {
  std::int64_t nu_a, nu_b, mu_a, mu_b;
  std::array<double, 2> xi;  // embeddings of mu*nu/delta
  double coeff;              // 1 / ([U:U+] |N(nu)|)
  double weight;             // 2 pi (xi_j y_j + sum_k |xi_k| y_k)
};

struct NuMuStream {
  std::vector<NuMuTerm> terms;
  double weight_bound = 0.0;
  double tail_bound = 0.0;  // bound on sum of |coeff e^{-weight}| over dropped pairs
};

// Pairs (nu mod U+, mu) with (mu nu/delta)_j > 0 and weight <= B. y holds Im z_k.
NuMuStream enumerate_nu_mu(const Field& F, const std::array<double, 2>& y, int j,
                           const TruncationParams& trunc);

double nu_mu_tail_bound(const Field& F, const std::array<double, 2>& y, int j, double B);

// Smallest weight bound (step 0.5) whose tail bound is <= tol.
double choose_weight_bound(const Field& F, const std::array<double, 2>& y, int j, double tol);

// Upper bound for n/phi(n) over all n <= N (attained at primorials).
double max_n_over_phi(double N);

// Module M = O_F + w O_F with the unit group U_F x <eps> acting; j is the real embedding
// where w has the two real conjugates w_r1 > w_r2, k = 1 - j carries w_c in H.
struct ModuleLattice {
  Field F;
  int j = 0;
  double w_r1 = 0.0, w_r2 = 0.0;
  cplx w_c{0.0, 1.0};
  double log_eps = 0.0;  // ln|eps_r1|
  // eps acts by (m, n) -> (ed m + eb n, ec m + ea n)
  OFElem ea, eb, ec, ed;
};

struct ModuleOrbitRep {
  std::int64_t m_a, m_b, n_a, n_b;
  double beta_r1, beta_r2;
  cplx beta_c;
  double norm;  // |N_{K/Q}(beta)|
  int sign;     // sign(beta_r1 beta_r2)
};

std::vector<ModuleOrbitRep> enumerate_module_orbits(const ModuleLattice& L, double X,
                                                    std::size_t max_terms = 50'000'000);

// Canonical representative of m + n w under U_F x <eps>, exactly.
std::pair<OFElem, OFElem> reduce_module_element(const ModuleLattice& L, const OFElem& m,
                                                const OFElem& n);

}  // namespace hds
