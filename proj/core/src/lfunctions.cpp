#include "hds/lfunctions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "hds/lattice_box.hpp"
#include "hds/special.hpp"
#include "hds/summation.hpp"

namespace hds {

namespace {

constexpr double kPi = std::numbers::pi;

bool canonical_sign(std::int64_t ma, std::int64_t mb, std::int64_t na, std::int64_t nb) {
  for (std::int64_t v : {ma, mb, na, nb})
    if (v != 0) return v > 0;
  return false;
}

void check_terms(std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded("term count exceeds max_terms = " + std::to_string(cap));
}

// Calls fn(w1, w2, G) once per class of (O_F^2 - 0)/U_F with G = prod |w_k|^2 / y_k <= X,
// where w_k = mu_k z_k + nu_k.
template <class Fn>
std::size_t visit_eis_terms(const FieldData& F, const UHPoint& z, double X, std::size_t cap,
                            Fn&& fn) {
  std::size_t n = 0;
  if (F.degree == 1) {
    const double x = z[0].real(), y = z[0].imag();
    const auto mb = static_cast<std::int64_t>(std::floor(std::sqrt(X / y)));
    for (std::int64_t m = 0; m <= mb; ++m) {
      const double md = static_cast<double>(m);
      const double r2 = X * y - md * md * y * y;
      if (r2 < 0.0) continue;
      const double r = std::sqrt(r2);
      const auto n0 = static_cast<std::int64_t>(std::ceil(-md * x - r));
      const auto n1 = static_cast<std::int64_t>(std::floor(-md * x + r));
      for (std::int64_t k = n0; k <= n1; ++k) {
        if (!canonical_sign(m, 0, k, 0)) continue;
        const cplx w = md * z[0] + static_cast<double>(k);
        const double G = std::norm(w) / y;
        if (G > X) continue;
        fn(w, cplx(1.0), G);
        check_terms(++n, cap);
      }
    }
    return n;
  }
  const double x1 = z[0].real(), y1 = z[0].imag();
  const double x2 = z[1].real(), y2 = z[1].imag();
  // u in U_F multiplies g1/g2 by u_1^4, so t = ln(g1/g2) in [0, 4R) picks one representative.
  const double P = 4.0 * F.regulator;
  const int slices = 6;
  const double D = P / slices;
  constexpr double snap = 1e-12;
  for (int s = 0; s < slices; ++s) {
    const double G1 = std::sqrt(X * std::exp((s + 1) * D));
    const double G2 = std::sqrt(X * std::exp(-s * D));
    const double m1 = std::sqrt(G1 / y1), m2 = std::sqrt(G2 / y2);
    for_each_in_box(F, -m1, m1, -m2, m2,
                    [&](std::int64_t ma, std::int64_t mb, double mu1, double mu2) {
      const double r1s = G1 * y1 - mu1 * mu1 * y1 * y1;
      const double r2s = G2 * y2 - mu2 * mu2 * y2 * y2;
      if (r1s < 0.0 || r2s < 0.0) return;
      const double r1 = std::sqrt(r1s), r2 = std::sqrt(r2s);
      for_each_in_box(F, -mu1 * x1 - r1, -mu1 * x1 + r1, -mu2 * x2 - r2, -mu2 * x2 + r2,
                      [&](std::int64_t na, std::int64_t nb, double nu1, double nu2) {
        if (!canonical_sign(ma, mb, na, nb)) return;
        const cplx w1 = mu1 * z[0] + nu1, w2 = mu2 * z[1] + nu2;
        const double g1 = std::norm(w1) / y1, g2 = std::norm(w2) / y2;
        const double G = g1 * g2;
        if (!(G > 0.0) || G > X) return;
        const double t = std::log(g1 / g2);
        if (t < s * D - snap || t >= (s + 1) * D - snap) return;
        fn(w1, w2, G);
        check_terms(++n, cap);
      });
    });
  }
  return n;
}

double eis_tail(const FieldData& F, double X, double s, std::size_t count) {
  const double rho = std::max(eis_orbit_density(F), static_cast<double>(count) / X);
  return 2.0 * rho * std::pow(X, 1.0 - s) / (s - 1.0);
}

void check_eis_args(const Field& F, const UHPoint& z, double s) {
  if (!(s >= 1.5)) throw DomainError("Eisenstein series needs s >= 1.5");
  if (static_cast<int>(z.size()) != F->degree)
    throw DomainError("Eisenstein series: point must have one coordinate per embedding");
}

}  // namespace

double eis_orbit_density(const FieldData& F) {
  if (F.degree == 1) return kPi / 2.0;
  return kPi * kPi * F.regulator / static_cast<double>(F.disc);
}

EisValue eis(const Field& F, const UHPoint& z, double s, const EisParams& p) {
  check_eis_args(F, z, s);
  Neumaier<double> acc;
  const std::size_t n = visit_eis_terms(*F, z, p.norm_bound, p.max_terms,
                                        [&](cplx, cplx, double G) { acc.add(std::pow(G, -s)); });
  return {acc.sum(), eis_tail(*F, p.norm_bound, s, n), n};
}

EisDerivValue eis_dz1(const Field& F, const UHPoint& z, double s, const EisParams& p) {
  check_eis_args(F, z, s);
  const double y1 = z[0].imag();
  Neumaier<cplx> acc;
  const std::size_t n = visit_eis_terms(*F, z, p.norm_bound, p.max_terms,
                                        [&](cplx w1, cplx, double G) {
    const cplx wb = std::conj(w1);
    acc.add(wb * wb / std::norm(w1) * std::pow(G, -s));
  });
  const cplx v = cplx(0.0, -s / 2.0) * acc.sum() / y1;  // s/(2i) = -i s/2
  return {v, s / (2.0 * y1) * eis_tail(*F, p.norm_bound, s, n), n};
}

LASeriesValue l_a(const ModMatrix& A, cplx s, double X, std::size_t max_terms) {
  if (!(s.real() >= 1.5)) throw DomainError("l_a needs Re s >= 1.5");
  const QuasiEllipticData q = quasi_data(A);
  const ModuleLattice L = module_lattice(q);
  const auto orbits = enumerate_module_orbits(L, X, max_terms);
  Neumaier<cplx> acc;
  std::size_t half = 0;
  for (const ModuleOrbitRep& o : orbits) {
    acc.add(static_cast<double>(o.sign) * std::exp(-s * std::log(o.norm)));
    if (o.norm <= X / 2.0) ++half;
  }
  LASeriesValue out;
  out.s = s;
  out.value = static_cast<double>(q.sign_c_tr) * acc.sum();
  out.norm_bound = X;
  out.orbits = orbits.size();
  const double sigma = s.real();
  const double C = 2.0 * static_cast<double>(std::max<std::size_t>(half, 1)) / (X / 2.0);
  out.tail_error = sigma * C * std::pow(X, 1.0 - sigma) / (sigma - 1.0);
  return out;
}

GeodesicArc geodesic_arc(const QuasiEllipticData& q, double t0) {
  if (!(t0 > 0.0)) throw DomainError("geodesic_arc: t0 must be positive");
  GeodesicArc arc;
  arc.omega_r1 = q.omega_r1;
  arc.omega_r2 = q.omega_r2;
  arc.t0 = t0;
  arc.tau = arc_point(arc, t0);
  arc.tau_image = q.A.act(q.j, arc.tau);
  const cplx f = cplx(0.0, 1.0) * (arc.tau_image - arc.omega_r2) / (arc.tau_image - arc.omega_r1);
  arc.t1 = f.real();
  arc.ratio = arc.t1 / t0;
  const double e2 = q.eps_r1 * q.eps_r1;
  arc.ratio_check = std::abs(arc.ratio - e2) / e2 + std::abs(f.imag()) / std::abs(f);
  return arc;
}

cplx arc_point(const GeodesicArc& arc, double t) {
  return (t * arc.omega_r1 - cplx(0.0, arc.omega_r2)) / (t - cplx(0.0, 1.0));
}

cplx arc_tangent(const GeodesicArc& arc, double t) {
  const cplx d = t - cplx(0.0, 1.0);
  return cplx(0.0, -(arc.omega_r1 - arc.omega_r2)) / (d * d);
}

PeriodValue geodesic_period(const ModMatrix& A, double s, const PeriodParams& p) {
  if (!(s >= 1.5)) throw DomainError("geodesic_period needs s >= 1.5");
  const QuasiEllipticData q = quasi_data(A);
  const Field& F = A.field();
  if (F.degree() != 2) throw DomainError("geodesic_period needs a quadratic field");
  const GeodesicArc arc = geodesic_arc(q, p.t0);
  const double U = std::log(arc.ratio);
  const cplx wc = q.omega_c.at(0);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned nthreads = p.threads ? p.threads : hw;

  struct Rule {
    cplx value;
    double series;
  };
  auto integrate = [&](unsigned m) {
    const QuadratureRule& gl = gauss_legendre(m);
    std::vector<cplx> vals(m);
    std::vector<double> errs(m);
    auto work = [&](unsigned start) {
      for (unsigned i = start; i < m; i += nthreads) {
        const double u = 0.5 * U * (1.0 + gl.nodes[i]);
        const double t = arc.t0 * std::exp(u);
        const cplx z1 = arc_point(arc, t);
        const EisDerivValue d = eis_dz1(F, UHPoint{z1, wc}, s, p.eis);
        const cplx jac = arc_tangent(arc, t) * t * (0.5 * U * gl.weights[i]);
        vals[i] = d.value * jac;
        errs[i] = d.tail_error * std::abs(jac);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < std::min(nthreads, m); ++k) pool.emplace_back(work, k);
    work(0);
    for (auto& th : pool) th.join();
    Neumaier<cplx> acc;
    Neumaier<double> err;
    for (unsigned i = 0; i < m; ++i) {
      acc.add(vals[i]);
      err.add(errs[i]);
    }
    return Rule{acc.sum(), err.sum()};
  };

  unsigned m = p.order;
  Rule lo = integrate(m);
  Rule hi = integrate(2 * m);
  while (std::abs(lo.value - hi.value) >= p.quad_tol / 10.0 && 4 * m <= p.max_order) {
    m *= 2;
    lo = hi;
    hi = integrate(2 * m);
  }
  return {hi.value, std::abs(lo.value - hi.value), hi.series, 2 * m};
}

PeriodIdentityReport period_identity(const ModMatrix& A, double s, double la_norm_bound,
                                     const PeriodParams& p) {
  const QuasiEllipticData q = quasi_data(A);
  const FieldData& F = *A.field();
  PeriodIdentityReport r;
  r.s = s;
  r.period = geodesic_period(A, s, p);
  r.la = l_a(A, cplx(s, 0.0), la_norm_bound);
  r.volume = static_cast<double>(F.disc) * (q.omega_r1 - q.omega_r2) * q.omega_c.at(0).imag();
  const cplx g1 = gamma_complex(cplx((s + 1.0) / 2.0, 0.0));
  const cplx gs = gamma_complex(cplx(s, 0.0));
  r.factor = g1 * g1 * std::pow(r.volume, s) /
             (gs * cplx(0.0, 2.0) * std::pow(static_cast<double>(F.disc), s));
  r.rhs = r.factor * r.la.value;
  r.defect = std::abs(r.period.value - r.rhs);
  r.relative_defect = r.defect / std::abs(r.rhs);
  r.budget = r.period.quad_error + r.period.series_error + std::abs(r.factor) * r.la.tail_error;
  return r;
}

DerivReport l_a_deriv_report(const ModMatrix& A, const TruncationParams& trunc) {
  quasi_data(A);  // throws NotQuasiElliptic
  const int n = A.field().degree();
  double fact = 1.0;
  for (int k = 2; k < n; ++k) fact *= k;
  const PsiValue ps = psi(A, trunc);
  return {fact * ps.value, fact * ps.tail_error,
          "L_A^(n-1)(0) reported as (n-1)! Psi(A); no analytic continuation is computed"};
}

}  // namespace hds
