#pragma once

#include <string>
#include <vector>

#include "hds/eta.hpp"
#include "hds/field.hpp"
#include "hds/uhp.hpp"
#include "hds/unit_domain.hpp"

namespace hds {

struct SumValue {
  double value = 0.0;
  double tail_error = 0.0;
};

// s_j(d, c; zhat) = -sign(c_j) Phi_j(A, zhat) + kappa/|c_j| [a_j f_j(d,c;zhat) + d_j f_j(0,1;zhat)]
// with A = (a b; c d) from ext_gcd and f_j(d,c;zhat) = prod_{k != j} y_k / |c_k z_k + d_k|^2.
SumValue sum_s(const OFElem& d, const OFElem& c, const UHPoint& zhat, int j,
               const TruncationParams& trunc);
SumValue sum_s_witness(const OFElem& d, const OFElem& c, const OFElem& a, const OFElem& b,
                       const UHPoint& zhat, int j, const TruncationParams& trunc);

// Sum for arbitrary (d, c), c != 0: divides out a generator g of (c, d) with g_j > 0.
SumValue sum_s_general(const OFElem& d, const OFElem& c, const UHPoint& zhat, int j,
                       const TruncationParams& trunc);

// Elementary term T(c, d; zhat) of the reciprocity law (without kappa):
// [d_j/c_j + (c_j/d_j) prod |z_k|^-2 + 1/(c_j d_j) prod |c_k z_k + d_k|^-2] prod y_k.
double reciprocity_T(const OFElem& c, const OFElem& d, const UHPoint& zhat, int j);

// s(d,c;zhat) + s(c,d;1/conj(zhat)) - s(0,1;zhat) + 1/4 - kappa T(c,d;zhat).
IdentityDefect reciprocity_defect(const OFElem& c, const OFElem& d, const UHPoint& zhat, int j,
                                  const TruncationParams& trunc);

enum class PointOpKind { Translate, NegConj, InvConj, UnitScale };

struct PointOp {
  PointOpKind kind;
  OFElem elem;  // translation amount or unit; unused otherwise
};

using PointWord = std::vector<PointOp>;

UHPoint apply_word(const PointWord& word, const UHPoint& zhat, int j);
std::string describe_word(const PointWord& word);

struct ScriptTerm {
  int sign = 1;
  PointWord word;
};

struct KappaTerm {
  int sign = 1;
  OFElem c, d;
  PointWord word;
};

// s(d, c; zhat) = sum sign * s(0, 1; word(zhat)) + quarters/4 + kappa sum sign * T(c, d; word(zhat)).
struct ReductionScript {
  Field field;
  int j = 0;
  std::vector<ScriptTerm> terms;
  int quarters = 0;
  std::vector<KappaTerm> kappa_terms;
  int steps = 0;

  double constant(const UHPoint& zhat) const;
  SumValue evaluate(const UHPoint& zhat, const TruncationParams& trunc) const;
  std::string describe() const;
};

ReductionScript reduce_to_fundamental(const OFElem& d, const OFElem& c, int j = 0);

// Hecke operator on functions of (d, c; zhat) with translation law f(d + qc, c; z) = f(d, c; z + q):
// f(dp, c; p z) + sum_{r mod p} f(d - cr, cp; (z + r)/p).
// PlusShift uses f(d + cr, cp; (z + r)/p) instead.
enum class HeckeForm { MinusShift, PlusShift };

IdentityDefect hecke_defect(const OFElem& d, const OFElem& c, const UHPoint& zhat,
                            const OFElem& p, int j, const TruncationParams& trunc,
                            HeckeForm form = HeckeForm::MinusShift);

// Omega_j(p z) + sum_r Omega_j((r + z)/p) - (N(p) + 1) Omega_j(z).
IdentityDefect omega_hecke_defect(const Field& F, const UHPoint& z, const OFElem& p, int j,
                                  const TruncationParams& trunc);

struct SymmetryDefects {
  IdentityDefect sign_c;        // s(d,-c;z) = s(d,c;-conj z)
  IdentityDefect sign_d;        // s(-d,c;z) = -s(d,c;-conj z)
  IdentityDefect unit;          // s(d, eps c; z) = s(d, c; |eps|.z)
  IdentityDefect translation;   // s(d + qc, c; z) = s(d, c; z + q)
  IdentityDefect translation_both;     // s(d + qc, c; z + q) = s(d, c; z)
};

SymmetryDefects symmetry_defects(const OFElem& d, const OFElem& c, const UHPoint& zhat, int j,
                                 const TruncationParams& trunc, const OFElem* q = nullptr,
                                 const OFElem* eps = nullptr);

}  // namespace hds
