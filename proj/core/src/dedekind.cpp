#include "hds/dedekind.hpp"

#include <cmath>
#include <sstream>

namespace hds {

namespace {

double f_j(const OFElem& d, const OFElem& c, const UHPoint& zhat, int j) {
  double p = 1.0;
  for (std::size_t i = 0; i < zhat.size(); ++i) {
    const int k = hat_embedding(j, i);
    p *= zhat[i].imag() / std::norm(c.embed(k) * zhat[i] + d.embed(k));
  }
  return p;
}

UHPoint scale_hat(const UHPoint& zhat, const OFElem& p, int j) {
  std::vector<cplx> out;
  for (std::size_t i = 0; i < zhat.size(); ++i) out.push_back(p.embed(hat_embedding(j, i)) * zhat[i]);
  return UHPoint(std::move(out));
}

UHPoint hecke_point(const UHPoint& zhat, const OFElem& r, const OFElem& p, int j) {
  std::vector<cplx> out;
  for (std::size_t i = 0; i < zhat.size(); ++i) {
    const int k = hat_embedding(j, i);
    out.push_back((zhat[i] + r.embed(k)) / p.embed(k));
  }
  return UHPoint(std::move(out));
}

UHPoint full_scale(const UHPoint& z, const OFElem& p) {
  std::vector<cplx> out;
  for (std::size_t k = 0; k < z.size(); ++k) out.push_back(p.embed(static_cast<int>(k)) * z[k]);
  return UHPoint(std::move(out));
}

UHPoint full_hecke_point(const UHPoint& z, const OFElem& r, const OFElem& p) {
  std::vector<cplx> out;
  for (std::size_t k = 0; k < z.size(); ++k)
    out.push_back((z[k] + r.embed(static_cast<int>(k))) / p.embed(static_cast<int>(k)));
  return UHPoint(std::move(out));
}

IdentityDefect make_defect(double defect, double tails, int nsums) {
  return {defect, tails + kRoundingSlack * nsums};
}

}  // namespace

SumValue sum_s_witness(const OFElem& d, const OFElem& c, const OFElem& a, const OFElem& b,
                       const UHPoint& zhat, int j, const TruncationParams& trunc) {
  if (c.is_zero()) throw DomainError("sum_s: c must be nonzero");
  const Field& F = c.field();
  const ModMatrix A(a, b, c, d);
  const PhiValue ph = phi(A, zhat, j, trunc);
  const double cj = c.embed(j);
  const double v = -static_cast<double>(c.sign_at(j)) * ph.value +
                   F->kappa / std::abs(cj) *
                       (a.embed(j) * f_j(d, c, zhat, j) + d.embed(j) * zhat.imag_product());
  return {v, ph.tail_error};
}

SumValue sum_s(const OFElem& d, const OFElem& c, const UHPoint& zhat, int j,
               const TruncationParams& trunc) {
  if (c.is_zero()) throw DomainError("sum_s: c must be nonzero");
  auto [a, b] = ext_gcd(c, d);
  return sum_s_witness(d, c, a, b, zhat, j, trunc);
}

SumValue sum_s_general(const OFElem& d, const OFElem& c, const UHPoint& zhat, int j,
                       const TruncationParams& trunc) {
  if (c.is_zero()) throw DomainError("sum_s: c must be nonzero");
  OFElem g = gcd(d, c);
  if (g.sign_at(j) < 0) g = -g;
  if (g.is_unit() && g == c.field().one()) return sum_s(d, c, zhat, j, trunc);
  return sum_s(*d.exact_div(g), *c.exact_div(g), zhat, j, trunc);
}

double reciprocity_T(const OFElem& c, const OFElem& d, const UHPoint& zhat, int j) {
  const double cj = c.embed(j), dj = d.embed(j);
  double pz = 1.0, pc = 1.0;
  for (std::size_t i = 0; i < zhat.size(); ++i) {
    const int k = hat_embedding(j, i);
    pz /= std::norm(zhat[i]);
    pc /= std::norm(c.embed(k) * zhat[i] + d.embed(k));
  }
  return (dj / cj + cj / dj * pz + pc / (cj * dj)) * zhat.imag_product();
}

IdentityDefect reciprocity_defect(const OFElem& c, const OFElem& d, const UHPoint& zhat, int j,
                                  const TruncationParams& trunc) {
  if (c.sign_at(j) <= 0 || d.sign_at(j) <= 0)
    throw SignCondition("reciprocity needs c_j > 0 and d_j > 0");
  const Field& F = c.field();
  const SumValue s1 = sum_s(d, c, zhat, j, trunc);
  const SumValue s2 = sum_s(c, d, inv_conj(zhat), j, trunc);
  const SumValue s0 = sum_s(F.zero(), F.one(), zhat, j, trunc);
  const double defect =
      s1.value + s2.value - s0.value + 0.25 - F->kappa * reciprocity_T(c, d, zhat, j);
  return make_defect(defect, s1.tail_error + s2.tail_error + s0.tail_error, 3);
}

UHPoint apply_word(const PointWord& word, const UHPoint& zhat, int j) {
  UHPoint w = zhat;
  for (const PointOp& op : word) {
    switch (op.kind) {
      case PointOpKind::Translate: w = translate_hat(w, op.elem, j); break;
      case PointOpKind::NegConj: w = neg_conj(w); break;
      case PointOpKind::InvConj: w = inv_conj(w); break;
      case PointOpKind::UnitScale: w = unit_scale_hat(w, op.elem, j); break;
    }
  }
  return w;
}

std::string describe_word(const PointWord& word) {
  std::string s = "z";
  for (const PointOp& op : word) {
    switch (op.kind) {
      case PointOpKind::Translate: s = "(" + s + " + " + to_string(op.elem) + ")"; break;
      case PointOpKind::NegConj: s = "-conj(" + s + ")"; break;
      case PointOpKind::InvConj: s = "1/conj(" + s + ")"; break;
      case PointOpKind::UnitScale: s = "|" + to_string(op.elem) + "|." + s; break;
    }
  }
  return s;
}

double ReductionScript::constant(const UHPoint& zhat) const {
  double v = quarters / 4.0;
  for (const KappaTerm& t : kappa_terms)
    v += t.sign * field->kappa * reciprocity_T(t.c, t.d, apply_word(t.word, zhat, j), j);
  return v;
}

SumValue ReductionScript::evaluate(const UHPoint& zhat, const TruncationParams& trunc) const {
  SumValue out{constant(zhat), 0.0};
  for (const ScriptTerm& t : terms) {
    const SumValue s = sum_s(field.zero(), field.one(), apply_word(t.word, zhat, j), j, trunc);
    out.value += t.sign * s.value;
    out.tail_error += s.tail_error;
  }
  return out;
}

std::string ReductionScript::describe() const {
  std::ostringstream os;
  for (const ScriptTerm& t : terms)
    os << (t.sign > 0 ? "+ " : "- ") << "s(0,1; " << describe_word(t.word) << ") ";
  os << (quarters >= 0 ? "+ " : "- ") << std::abs(quarters) << "/4";
  for (const KappaTerm& t : kappa_terms)
    os << (t.sign > 0 ? " + " : " - ") << "kappa*T(" << to_string(t.c) << ", " << to_string(t.d)
       << "; " << describe_word(t.word) << ")";
  return os.str();
}

ReductionScript reduce_to_fundamental(const OFElem& d, const OFElem& c, int j) {
  if (c.is_zero()) throw DomainError("reduce_to_fundamental: c must be nonzero");
  (void)ext_gcd(c, d);  // throws NotCoprime
  const Field& F = c.field();
  ReductionScript S;
  S.j = j;
  S.field = F;
  int sigma = 1;
  PointWord word;
  OFElem D = d, C = c;
  const Int cap = Int(F->euclid_steps) * abs(c.norm()) + 1;
  for (;;) {
    if (Int(++S.steps) > cap)
      throw NonTermination("reduce_to_fundamental: step cap exceeded");
    auto [q, r] = divmod_near(D, C);
    if (!q.is_zero()) word.push_back({PointOpKind::Translate, q});
    if (r.is_zero()) {
      if (C.sign_at(j) < 0) {
        word.push_back({PointOpKind::NegConj, F.zero()});
        C = -C;
      }
      if (!(C == F.one())) word.push_back({PointOpKind::UnitScale, C});
      S.terms.push_back({sigma, word});
      break;
    }
    if (C.sign_at(j) < 0) {
      word.push_back({PointOpKind::NegConj, F.zero()});
      C = -C;
    }
    if (r.sign_at(j) < 0) {
      sigma = -sigma;
      word.push_back({PointOpKind::NegConj, F.zero()});
      r = -r;
    }
    S.terms.push_back({sigma, word});
    S.quarters -= sigma;
    S.kappa_terms.push_back({sigma, C, r, word});
    sigma = -sigma;
    word.push_back({PointOpKind::InvConj, F.zero()});
    D = C;
    C = r;
  }
  return S;
}

IdentityDefect hecke_defect(const OFElem& d, const OFElem& c, const UHPoint& zhat,
                            const OFElem& p, int j, const TruncationParams& trunc,
                            HeckeForm form) {
  if (!p.totally_positive()) throw NotTotallyPositive("hecke: p must be totally positive");
  if (!is_prime_element(p)) throw NotPrime("hecke: p must be prime");
  const double np = static_cast<double>(abs(p.norm()));
  double tails = 0.0;
  int nsums = 0;
  const SumValue s0 = sum_s_general(d * p, c, scale_hat(zhat, p, j), j, trunc);
  double lhs = s0.value;
  tails += s0.tail_error;
  ++nsums;
  for (const OFElem& r : residue_transversal(p)) {
    const OFElem dd = form == HeckeForm::MinusShift ? d - c * r : d + c * r;
    const SumValue s = sum_s_general(dd, c * p, hecke_point(zhat, r, p, j), j, trunc);
    lhs += s.value;
    tails += s.tail_error;
    ++nsums;
  }
  const SumValue base = sum_s(d, c, zhat, j, trunc);
  tails += (np + 1.0) * base.tail_error;
  ++nsums;
  return make_defect(lhs - (np + 1.0) * base.value, tails, nsums);
}

IdentityDefect omega_hecke_defect(const Field& F, const UHPoint& z, const OFElem& p, int j,
                                  const TruncationParams& trunc) {
  if (!p.totally_positive()) throw NotTotallyPositive("hecke: p must be totally positive");
  if (!is_prime_element(p)) throw NotPrime("hecke: p must be prime");
  const double np = static_cast<double>(abs(p.norm()));
  const SeriesValue o0 = omega(F, full_scale(z, p), j, trunc);
  cplx lhs = o0.value;
  double tails = o0.tail_error;
  int n = 1;
  for (const OFElem& r : residue_transversal(p)) {
    const SeriesValue o = omega(F, full_hecke_point(z, r, p), j, trunc);
    lhs += o.value;
    tails += o.tail_error;
    ++n;
  }
  const SeriesValue base = omega(F, z, j, trunc);
  tails += (np + 1.0) * base.tail_error;
  return make_defect(std::abs(lhs - (np + 1.0) * base.value), tails, n + 1);
}

SymmetryDefects symmetry_defects(const OFElem& d, const OFElem& c, const UHPoint& zhat, int j,
                                 const TruncationParams& trunc, const OFElem* q_in,
                                 const OFElem* eps_in) {
  const Field& F = c.field();
  const OFElem q = q_in ? *q_in : F.one();
  OFElem eps = eps_in ? *eps_in : F.fundamental_unit();
  if (eps.sign_at(j) < 0) eps = -eps;
  const UHPoint nz = neg_conj(zhat);
  SymmetryDefects out;
  const SumValue base = sum_s(d, c, zhat, j, trunc);
  const SumValue base_neg = sum_s(d, c, nz, j, trunc);
  {
    const SumValue l = sum_s(d, -c, zhat, j, trunc);
    out.sign_c = make_defect(l.value - base_neg.value, l.tail_error + base_neg.tail_error, 2);
  }
  {
    const SumValue l = sum_s(-d, c, zhat, j, trunc);
    out.sign_d = make_defect(l.value + base_neg.value, l.tail_error + base_neg.tail_error, 2);
  }
  {
    const SumValue l = sum_s(d, eps * c, zhat, j, trunc);
    const SumValue r = sum_s(d, c, unit_scale_hat(zhat, eps, j), j, trunc);
    out.unit = make_defect(l.value - r.value, l.tail_error + r.tail_error, 2);
  }
  {
    const SumValue l = sum_s(d + q * c, c, zhat, j, trunc);
    const SumValue r = sum_s(d, c, translate_hat(zhat, q, j), j, trunc);
    out.translation = make_defect(l.value - r.value, l.tail_error + r.tail_error, 2);
  }
  {
    const SumValue l = sum_s(d + q * c, c, translate_hat(zhat, q, j), j, trunc);
    out.translation_both = make_defect(l.value - base.value, l.tail_error + base.tail_error, 2);
  }
  return out;
}

}  // namespace hds
