#include "hds/unit_domain.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hds/lattice_box.hpp"

namespace hds {

namespace {

constexpr double kSnap = 1e-9;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

using i128 = __int128;

i128 exact_norm(const FieldData& F, std::int64_t a, std::int64_t b) {
  i128 A = a, B = b;
  return A * A + static_cast<i128>(F.omega_t) * A * B - static_cast<i128>(F.omega_m) * B * B;
}

// Recompute the smaller embedding from the exact norm to avoid cancellation.
void refine(double n, double& x0, double& x1) {
  if (std::abs(x0) >= std::abs(x1)) {
    if (x0 != 0.0) x1 = n / x0;
  } else {
    x0 = n / x1;
  }
}

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw CapExceeded("enumeration exceeded max_terms = " + std::to_string(cap));
}

}  // namespace

bool in_tp_window(const FieldData& F, double x0, double x1) {
  if (F.degree == 1) return true;
  const double t = std::log(std::abs(x0 / x1));
  return t >= -kSnap && t < 2.0 * F.tp_log - kSnap;
}

UnitOrbitRep reduce_mod_totally_positive_units(const OFElem& x) {
  if (x.is_zero()) throw DomainError("reduce_mod_totally_positive_units: zero element");
  const Field& F = x.field();
  if (F->degree == 1) return {x, UnitGroup::TotallyPositive, 0};
  const double P = 2.0 * F->tp_log;
  auto logratio = [](const OFElem& e) { return std::log(std::abs(e.embed(0) / e.embed(1))); };
  const OFElem eta = F.tp_generator();
  const OFElem eta_inv = eta.unit_inverse();
  const int k0 = static_cast<int>(std::floor((logratio(x) + kSnap) / P));
  OFElem r = x * eta.pow(-k0);
  int e = -k0;
  for (int guard = 0; guard < 4; ++guard) {
    double t = logratio(r);
    if (t < -kSnap) {
      r = r * eta;
      ++e;
    } else if (t >= P - kSnap) {
      r = r * eta_inv;
      --e;
    } else {
      break;
    }
  }
  return {r, UnitGroup::TotallyPositive, e};
}

double max_n_over_phi(double N) {
  static const int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                               41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
  double primorial = 1.0, r = 1.0;
  for (int p : primes) {
    primorial *= p;
    if (primorial > N) return r;
    r *= p / (p - 1.0);
  }
  return r * 2.0;  // far beyond any norm reached here
}

double nu_mu_tail_bound(const Field& Fh, const std::array<double, 2>& y, int j, double B) {
  const FieldData& F = *Fh;
  if (B <= 0.0) return std::numeric_limits<double>::infinity();
  if (F.degree == 1) {
    // sum over xi > B/(2 pi y) of 2 sigma_{-1}(xi) e^{-2 pi y xi}
    const double y0 = y[0];
    double xi = std::floor(B / (kTwoPi * y0)) + 1.0;
    double total = 0.0;
    for (int it = 0; it < 1000000; ++it, xi += 1.0) {
      double term = 2.0 * max_n_over_phi(xi) * std::exp(-kTwoPi * y0 * xi);
      total += term;
      if (term < 1e-18 * total || term < 1e-300) break;
    }
    return total;
  }
  const int k = 1 - j;
  const double yj = y[static_cast<std::size_t>(j)], yk = y[static_cast<std::size_t>(k)];
  const double covol = 1.0 / std::sqrt(static_cast<double>(F.disc));
  const double d0 = F.delta_emb[0], d1 = F.delta_emb[1];
  const double w0 = F.omega_emb[0], w1 = F.omega_emb[1];
  const double r = std::hypot(1.0 / d0, 1.0 / d1) + std::hypot(w0 / d0, w1 / d1);
  auto count = [&](double W) {
    const double a = W / kTwoPi;
    const double area = a * a / (yj * yk);
    const double per = 2.0 * a / yk + 2.0 * std::hypot(a / yj, a / yk);
    return (area + per * r + std::numbers::pi * r * r) / covol;
  };
  auto nmax = [&](double W) {
    const double a = W / kTwoPi;
    return static_cast<double>(F.disc) * a * a / (4.0 * yj * yk);
  };
  double total = 0.0;
  for (int m = 0; m < 100000; ++m) {
    const double Whi = B + m + 1.0;
    const double M = max_n_over_phi(nmax(Whi));
    const double term = M * M * count(Whi) * std::exp(-(B + m));
    total += term;
    if (m > 4 && (term < 1e-18 * total || term < 1e-300)) break;
  }
  return total;
}

double choose_weight_bound(const Field& F, const std::array<double, 2>& y, int j, double tol) {
  if (!(tol > 0.0)) throw DomainError("target tolerance must be positive");
  double B = std::max(2.0, std::floor(std::log(1.0 / tol)));
  while (nu_mu_tail_bound(F, y, j, B) > tol) {
    B += 0.5;
    if (B > 2000.0) throw CapExceeded("no weight bound reaches the requested tolerance");
  }
  return B;
}

NuMuStream enumerate_nu_mu(const Field& Fh, const std::array<double, 2>& y, int j,
                           const TruncationParams& trunc) {
  const FieldData& F = *Fh;
  for (int k = 0; k < F.degree; ++k)
    if (!(y[static_cast<std::size_t>(k)] > 0.0))
      throw DomainError("enumerate_nu_mu: imaginary parts must be positive");
  if (j < 0 || j >= F.degree) throw DomainError("enumerate_nu_mu: bad embedding index");

  NuMuStream out;
  const double B = trunc.weight_bound > 0.0 ? trunc.weight_bound
                                            : choose_weight_bound(Fh, y, j, trunc.target_tol);
  out.weight_bound = B;
  out.tail_bound = nu_mu_tail_bound(Fh, y, j, B);

  if (F.degree == 1) {
    const double T = B / (kTwoPi * y[0]);
    const auto nmax = static_cast<std::int64_t>(std::floor(T));
    for (std::int64_t nu = -nmax; nu <= nmax; ++nu) {
      if (nu == 0) continue;
      const std::int64_t an = nu < 0 ? -nu : nu;
      const auto mmax = static_cast<std::int64_t>(std::floor(T / static_cast<double>(an)));
      for (std::int64_t m = 1; m <= mmax; ++m) {
        const std::int64_t mu = nu < 0 ? -m : m;
        const double xi = static_cast<double>(mu * nu);
        const double w = kTwoPi * xi * y[0];
        if (w > B) continue;
        out.terms.push_back({nu, 0, mu, 0, {xi, xi}, 1.0 / static_cast<double>(an), w});
        check_cap(out.terms.size(), trunc.max_terms);
      }
    }
    return out;
  }

  const int k = 1 - j;
  const double yj = y[static_cast<std::size_t>(j)], yk = y[static_cast<std::size_t>(k)];
  const double Tj = B / (kTwoPi * yj), Tk = B / (kTwoPi * yk);
  const double Nmax = static_cast<double>(F.disc) * Tj * Tk / 4.0;
  const double sq = std::sqrt(Nmax) * (1.0 + 1e-9);
  const double eta = std::exp(F.tp_log);
  const double inv_index = 1.0 / F.unit_index;

  for_each_in_box(F, -sq * eta, sq * eta, -sq, sq,
                  [&](std::int64_t a, std::int64_t b, double x0, double x1) {
    if (a == 0 && b == 0) return;
    const double nnu = static_cast<double>(exact_norm(F, a, b));
    const double absN = std::abs(nnu);
    if (absN > Nmax) return;
    refine(nnu, x0, x1);
    if (!in_tp_window(F, x0, x1)) return;
    const std::array<double, 2> c{x0 / F.delta_emb[0], x1 / F.delta_emb[1]};
    const double cj = c[static_cast<std::size_t>(j)], ck = c[static_cast<std::size_t>(k)];
    std::array<double, 2> lo{}, hi{};
    const double mj = Tj / cj;
    lo[static_cast<std::size_t>(j)] = std::min(0.0, mj);
    hi[static_cast<std::size_t>(j)] = std::max(0.0, mj);
    const double mk = Tk / std::abs(ck);
    lo[static_cast<std::size_t>(k)] = -mk;
    hi[static_cast<std::size_t>(k)] = mk;
    const double coeff = inv_index / absN;
    for_each_in_box(F, lo[0], hi[0], lo[1], hi[1],
                    [&](std::int64_t ma, std::int64_t mb, double m0, double m1) {
      if (ma == 0 && mb == 0) return;
      refine(static_cast<double>(exact_norm(F, ma, mb)), m0, m1);
      const std::array<double, 2> xi{m0 * c[0], m1 * c[1]};
      const double xj = xi[static_cast<std::size_t>(j)];
      if (!(xj > 0.0)) return;
      const double w = kTwoPi * (xj * yj + std::abs(xi[static_cast<std::size_t>(k)]) * yk);
      if (w > B) return;
      out.terms.push_back({a, b, ma, mb, xi, coeff, w});
      check_cap(out.terms.size(), trunc.max_terms);
    });
  });
  return out;
}

namespace {

struct ModuleCoords {
  double r1, r2;
  cplx c;
};

ModuleCoords module_coords(const ModuleLattice& L, const OFElem& m, const OFElem& n) {
  const int j = L.j, k = 1 - L.j;
  const double mj = m.embed(j), nj = n.embed(j);
  return {mj + nj * L.w_r1, mj + nj * L.w_r2, m.embed(k) + n.embed(k) * L.w_c};
}

void apply_eps(const ModuleLattice& L, OFElem& m, OFElem& n, bool inverse) {
  if (!inverse) {
    OFElem m2 = L.ed * m + L.eb * n;
    OFElem n2 = L.ec * m + L.ea * n;
    m = std::move(m2);
    n = std::move(n2);
  } else {
    OFElem m2 = L.ea * m - L.eb * n;
    OFElem n2 = L.ed * n - L.ec * m;
    m = std::move(m2);
    n = std::move(n2);
  }
}

}  // namespace

std::pair<OFElem, OFElem> reduce_module_element(const ModuleLattice& L, const OFElem& m0,
                                                const OFElem& n0) {
  if (m0.is_zero() && n0.is_zero()) throw DomainError("reduce_module_element: zero element");
  const double P1 = 2.0 * std::abs(L.log_eps);
  const double P2 = 4.0 * L.F->regulator;
  const bool eps_up = L.log_eps > 0.0;  // eps raises t1 when ln|eps_r1| > 0
  OFElem m = m0, n = n0;
  auto t1 = [&] {
    auto c = module_coords(L, m, n);
    return std::log(std::abs(c.r1 / c.r2));
  };
  auto t2 = [&] {
    auto c = module_coords(L, m, n);
    return std::log(std::abs(c.r1 * c.r2) / std::norm(c.c));
  };
  // eps power: t1 shifts by P1 per application of the raising generator
  for (int g = 0; g < 8; ++g) {
    const int k1 = static_cast<int>(std::floor((t1() + kSnap) / P1));
    if (k1 == 0) break;
    // raising generator is eps when ln|eps_r1| > 0, else its inverse
    const bool use_inverse = k1 > 0 ? eps_up : !eps_up;
    for (int s = 0; s < std::abs(k1); ++s) apply_eps(L, m, n, use_inverse);
  }
  // fundamental unit of F: t2 shifts by 4R per application of the raising generator
  {
    OFElem u = L.F.fundamental_unit();
    OFElem up = L.j == 0 ? u : u.unit_inverse();
    OFElem down = up.unit_inverse();
    int k2 = static_cast<int>(std::floor((t2() + kSnap) / P2));
    for (int g = 0; g < 8 && k2 != 0; ++g) {
      OFElem f = (k2 > 0 ? down : up).pow(std::abs(k2));
      m = m * f;
      n = n * f;
      k2 = static_cast<int>(std::floor((t2() + kSnap) / P2));
    }
  }
  if (module_coords(L, m, n).r1 < 0.0) {
    m = -m;
    n = -n;
  }
  return {m, n};
}

std::vector<ModuleOrbitRep> enumerate_module_orbits(const ModuleLattice& L, double X,
                                                    std::size_t max_terms) {
  const FieldData& F = *L.F;
  if (F.degree != 2) throw DomainError("module orbits need a quadratic base field");
  std::vector<ModuleOrbitRep> out;
  if (!(X > 0.0)) return out;
  const int j = L.j, k = 1 - L.j;
  const double P1 = 2.0 * std::abs(L.log_eps);
  const double P2 = 4.0 * F.regulator;
  const double lnX = std::log(X);
  const double B2 = std::exp((lnX + P2) / 4.0) * (1.0 + 1e-6);
  const double B1 = B2 * std::exp(std::abs(L.log_eps));
  const double Bc = std::pow(X, 0.25) * (1.0 + 1e-6);
  const double dw = L.w_r1 - L.w_r2;
  const double n1b = (B1 + B2) / dw;
  const double n2b = Bc / L.w_c.imag();

  std::array<double, 2> nlo{}, nhi{};
  nlo[static_cast<std::size_t>(j)] = -n1b;
  nhi[static_cast<std::size_t>(j)] = n1b;
  nlo[static_cast<std::size_t>(k)] = -n2b;
  nhi[static_cast<std::size_t>(k)] = n2b;

  for_each_in_box(F, nlo[0], nhi[0], nlo[1], nhi[1],
                  [&](std::int64_t na, std::int64_t nb, double n0, double n1) {
    const double nj = j == 0 ? n0 : n1;
    const double nk = j == 0 ? n1 : n0;
    const double im = nk * L.w_c.imag();
    if (std::abs(im) > Bc) return;
    const double rb = std::sqrt(Bc * Bc - im * im);
    std::array<double, 2> lo{}, hi{};
    lo[static_cast<std::size_t>(j)] = std::max(-nj * L.w_r1, -B2 - nj * L.w_r2);
    hi[static_cast<std::size_t>(j)] = std::min(B1 - nj * L.w_r1, B2 - nj * L.w_r2);
    lo[static_cast<std::size_t>(k)] = -rb - nk * L.w_c.real();
    hi[static_cast<std::size_t>(k)] = rb - nk * L.w_c.real();
    if (lo[static_cast<std::size_t>(j)] > hi[static_cast<std::size_t>(j)]) return;
    for_each_in_box(F, lo[0], hi[0], lo[1], hi[1],
                    [&](std::int64_t ma, std::int64_t mb, double m0, double m1) {
      const double mj = j == 0 ? m0 : m1;
      const double mk = j == 0 ? m1 : m0;
      const double br1 = mj + nj * L.w_r1;
      const double br2 = mj + nj * L.w_r2;
      const cplx bc = mk + nk * L.w_c;
      const double bc2 = std::norm(bc);
      const double N = std::abs(br1 * br2) * bc2;
      if (!(N > 1e-9) || N > X) return;
      if (!(br1 > 0.0)) return;
      const double t1 = std::log(std::abs(br1 / br2));
      const double t2 = std::log(std::abs(br1 * br2) / bc2);
      if (t1 < -kSnap || t1 >= P1 - kSnap) return;
      if (t2 < -kSnap || t2 >= P2 - kSnap) return;
      out.push_back({ma, mb, na, nb, br1, br2, bc, N, br1 * br2 > 0.0 ? 1 : -1});
      check_cap(out.size(), max_terms);
    });
  });
  return out;
}

}  // namespace hds
