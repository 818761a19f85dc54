#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <random>

#include "CLI11.hpp"
#include "hds/classical.hpp"
#include "hds/dedekind.hpp"
#include "hds/eta.hpp"
#include "hds/lfunctions.hpp"
#include "hds/quasi_elliptic.hpp"
#include "hds/sampling.hpp"

namespace hds::cli {

namespace {

using json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " '" + s + "'");
  }
  if (pos != s.size()) throw UsageError("cannot parse " + what + " '" + s + "'");
  return v;
}

cplx complex_from_json(const json& v) {
  if (v.is_string()) return parse_complex(v.get<std::string>());
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw UsageError("bad complex value " + v.dump());
}

Int int_from_json(const json& v) {
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw UsageError("bad integer " + v.dump());
}

json parse_json(const std::string& s, const std::string& what) {
  try {
    return json::parse(s);
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " '" + s + "' as JSON");
  }
}

OFElem elem_from_json(const Field& F, const json& v) {
  if (v.is_array()) {
    if (v.size() == 1) return F.elem(int_from_json(v[0]));
    if (v.size() == 2) {
      const Int b = int_from_json(v[1]);
      if (F.degree() == 1 && b != 0) throw UsageError("rational field elements have b = 0");
      return F.elem(int_from_json(v[0]), b);
    }
    throw UsageError("element must be [a, b]: " + v.dump());
  }
  return F.elem(int_from_json(v));
}

OFElem parse_elem(const Field& F, const std::string& s) {
  return elem_from_json(F, parse_json(s, "element"));
}

ModMatrix parse_matrix(const Field& F, const std::string& s) {
  const json v = parse_json(s, "matrix");
  std::vector<json> entries;
  if (v.is_array() && v.size() == 2 && v[0].is_array() && v[0].size() == 2 &&
      v[0][0].is_array()) {
    for (const auto& row : v)
      for (const auto& e : row) entries.push_back(e);
  } else if (v.is_array() && v.size() == 4) {
    for (const auto& e : v) entries.push_back(e);
  } else if (v.is_array() && v.size() == 2 && v[0].is_array() && v[0].size() == 2 &&
             F.degree() == 1) {
    for (const auto& row : v)
      for (const auto& e : row) entries.push_back(e);
  } else {
    throw UsageError("matrix must be [[a, b], [c, d]] with entries [x, y]: " + s);
  }
  if (entries.size() != 4) throw UsageError("matrix needs four entries: " + s);
  try {
    return ModMatrix(elem_from_json(F, entries[0]), elem_from_json(F, entries[1]),
                     elem_from_json(F, entries[2]), elem_from_json(F, entries[3]));
  } catch (const NotUnimodular& e) {
    throw UsageError(e.what());
  }
}

// "0.3+1.1i", "[0.3, 1.1]" or a JSON array of those.
UHPoint parse_point(const std::string& s) {
  const std::string t = trim(s);
  if (t.empty()) return UHPoint();
  std::vector<cplx> zs;
  if (t.front() == '[') {
    const json v = parse_json(t, "point");
    if (v.size() == 2 && v[0].is_number()) {
      zs.push_back(complex_from_json(v));
    } else {
      for (const auto& e : v) zs.push_back(complex_from_json(e));
    }
  } else {
    zs.push_back(parse_complex(t));
  }
  for (const cplx& z : zs)
    if (!(z.imag() > 0.0)) throw UsageError("point coordinates need Im > 0: " + s);
  return UHPoint(zs);
}

json elem_json(const OFElem& x) {
  return json::array({x.a().str(), x.b().str()});
}

json matrix_json(const ModMatrix& A) {
  return json::array({json::array({elem_json(A.a()), elem_json(A.b())}),
                      json::array({elem_json(A.c()), elem_json(A.d())})});
}

json point_json(const UHPoint& z) {
  json out = json::array();
  for (const cplx& w : z.coords()) out.push_back(json::array({w.real(), w.imag()}));
  return out;
}

json defect_json(const IdentityDefect& d) {
  return {{"defect", std::abs(d.defect)}, {"budget", d.budget}, {"pass", d.pass()}};
}

struct Common {
  int D = 7;
  int j = 0;
  double tol = 1e-10;
  double weight_bound = 0.0;
  std::size_t max_terms = 50'000'000;
  std::uint64_t seed = 1;
  int trials = 0;

  TruncationParams trunc() const {
    TruncationParams t;
    t.target_tol = tol;
    t.weight_bound = weight_bound;
    t.max_terms = max_terms;
    return t;
  }
};

// Accumulates cases; pass holds iff every counted case passes.
struct Campaign {
  json cases = json::array();
  double max_defect = 0.0;
  double max_budget = 0.0;
  bool pass = true;

  void add(json c, double defect, double budget) {
    add(std::move(c), defect, budget, std::abs(defect) <= budget);
  }
  void add(json c, double defect, double budget, bool ok) {
    max_defect = std::max(max_defect, std::abs(defect));
    max_budget = std::max(max_budget, budget);
    pass = pass && ok;
    cases.push_back(std::move(c));
  }
  void add_value(json c) { cases.push_back(std::move(c)); }
};

int trials_or(const Common& c, int fallback) { return c.trials > 0 ? c.trials : fallback; }

OFElem make_positive_at(const OFElem& x, int j) { return x.sign_at(j) < 0 ? -x : x; }

std::size_t hat_size(const Field& F) { return static_cast<std::size_t>(F.degree() - 1); }

UHPoint require_zhat(const Field& F, const std::string& s, const std::string& flag) {
  const UHPoint z = parse_point(s);
  if (z.size() != hat_size(F))
    throw UsageError(flag + " needs " + std::to_string(hat_size(F)) + " coordinate(s)");
  return z;
}

}  // namespace

double default_tolerance() {
  if (const char* env = std::getenv("HDS_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end && *end == '\0' && v > 0.0) return v;
  }
  return 1e-10;
}

cplx parse_complex(const std::string& s_in) {
  const std::string s = trim(s_in);
  if (s.empty()) throw UsageError("empty complex literal");
  if (s.front() == '[') return complex_from_json(parse_json(s, "complex literal"));
  if (s.back() != 'i') return {parse_double(s, "complex literal"), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_double(re, "complex literal"),
          parse_double(im, "complex literal")};
}

namespace {

void cmd_sum(const Common& c, const std::string& num, const std::string& den,
             const std::string& z2, bool script, Campaign& out) {
  const Field F = make_field(c.D);
  const OFElem d = parse_elem(F, num);
  const OFElem cc = parse_elem(F, den);
  const UHPoint zhat = require_zhat(F, z2, "--z2");
  const auto tr = c.trunc();
  const SumValue v = sum_s(d, cc, zhat, c.j, tr);
  json cs = {{"inputs", {{"d", elem_json(d)}, {"c", elem_json(cc)}, {"zhat", point_json(zhat)}}},
             {"value", v.value},
             {"tail_error", v.tail_error}};
  if (script) {
    const ReductionScript S = reduce_to_fundamental(d, cc, c.j);
    const SumValue sv = S.evaluate(zhat, tr);
    const double defect = std::abs(sv.value - v.value);
    const double budget = 3.0 * (sv.tail_error + v.tail_error) + kRoundingSlack;
    cs["script"] = S.describe();
    cs["script_value"] = sv.value;
    cs["defect"] = defect;
    cs["budget"] = budget;
    out.add(cs, defect, budget);
  } else {
    out.add_value(cs);
  }
}

void cmd_phi(const Common& c, const std::string& m, const std::string& z2, Campaign& out) {
  const Field F = make_field(c.D);
  const ModMatrix A = parse_matrix(F, m);
  const UHPoint zhat = require_zhat(F, z2, "--z2");
  const PhiValue v = phi(A, zhat, c.j, c.trunc());
  out.add_value({{"inputs", {{"matrix", matrix_json(A)}, {"zhat", point_json(zhat)}}},
                 {"value", v.value},
                 {"tail_error", v.tail_error}});
}

void cmd_lambda(const Common& c, const std::string& zs, Campaign& out) {
  const Field F = make_field(c.D);
  const UHPoint z = parse_point(zs);
  if (static_cast<int>(z.size()) != F.degree())
    throw UsageError("--z needs " + std::to_string(F.degree()) + " coordinate(s)");
  const SeriesValue v = lambda(F, z, c.j, c.trunc());
  out.add_value({{"inputs", {{"z", point_json(z)}}},
                 {"value_re", v.value.real()},
                 {"value_im", v.value.imag()},
                 {"tail_error", v.tail_error},
                 {"terms", v.terms},
                 {"weight_bound", v.weight_bound}});
}

void cmd_delta(const Common& c, const std::string& m1, const std::string& m2, Campaign& out) {
  const Field F = make_field(c.D);
  const ModMatrix A = parse_matrix(F, m1);
  const ModMatrix B = parse_matrix(F, m2);
  out.add_value({{"inputs", {{"A", matrix_json(A)}, {"B", matrix_json(B)}}},
                 {"value", delta_cocycle(A, B, c.j)},
                 {"tail_error", 0.0}});
}

void cmd_classify(const Common& c, const std::string& m, Campaign& out) {
  const Field F = make_field(c.D);
  const ModMatrix A = parse_matrix(F, m);
  json types = json::array();
  for (EmbeddingType t : classify(A)) types.push_back(to_string(t));
  json cs = {{"inputs", {{"matrix", matrix_json(A)}}},
             {"embeddings", types},
             {"quasi_elliptic", is_quasi_elliptic(A)},
             {"elliptic", is_elliptic(A)}};
  if (is_quasi_elliptic(A)) {
    const QuasiEllipticData q = quasi_data(A);
    cs["j"] = q.j;
    cs["omega_r1"] = q.omega_r1;
    cs["omega_r2"] = q.omega_r2;
    json wc = json::array();
    for (const cplx& w : q.omega_c) wc.push_back(json::array({w.real(), w.imag()}));
    cs["omega_c"] = wc;
    cs["eps_r1"] = q.eps_r1;
    cs["eps_r2"] = q.eps_r2;
    cs["sign_c_tr"] = q.sign_c_tr;
  }
  out.add_value(cs);
}

void cmd_psi(const Common& c, const std::string& m, Campaign& out) {
  const Field F = make_field(c.D);
  const ModMatrix A = parse_matrix(F, m);
  const PsiValue v = psi(A, c.trunc(), c.j);
  json cs = {{"inputs", {{"matrix", matrix_json(A)}}},
             {"j", v.j},
             {"value", v.value},
             {"tail_error", v.tail_error},
             {"phi", v.phi}};
  if (is_quasi_elliptic(A)) {
    const DerivReport dr = l_a_deriv_report(A, c.trunc());
    cs["la_deriv_at_0"] = {{"value", dr.value}, {"label", dr.label}};
  }
  if (is_elliptic(A)) {
    json forms = json::object();
    for (EllipticSign sgn : {EllipticSign::Minus, EllipticSign::Plus}) {
      const EllipticClosedForm cf = psi_elliptic_closed(A, v.j, sgn);
      forms[sgn == EllipticSign::Minus ? "minus" : "plus"] = {
          {"value", cf.value},
          {"order", cf.order},
          {"witness", cf.witness_num.str() + "/" + cf.witness_den.str()},
          {"witness_residual", cf.witness_residual},
          {"defect", std::abs(cf.value - v.value)}};
    }
    cs["closed_forms"] = forms;
  }
  out.add_value(cs);
}

void cmd_la(const Common& c, const std::string& m, const std::string& s, double X,
            Campaign& out) {
  const Field F = make_field(c.D);
  const ModMatrix A = parse_matrix(F, m);
  const LASeriesValue v = l_a(A, parse_complex(s), X, c.max_terms);
  out.add_value({{"inputs", {{"matrix", matrix_json(A)}, {"s", s}, {"norm_bound", X}}},
                 {"value_re", v.value.real()},
                 {"value_im", v.value.imag()},
                 {"budget", v.tail_error},
                 {"orbits", v.orbits},
                 {"heuristic_tail", v.heuristic_tail}});
}

void cmd_period_identity(const Common& c, const std::string& m, double s, double X, unsigned order,
                  double eis_bound, unsigned threads, Campaign& out) {
  const Field F = make_field(c.D);
  const ModMatrix A = parse_matrix(F, m);
  PeriodParams p;
  p.order = order;
  p.eis.norm_bound = eis_bound;
  p.eis.max_terms = c.max_terms;
  p.threads = threads;
  const PeriodIdentityReport r = period_identity(A, s, X, p);
  out.add({{"inputs", {{"matrix", matrix_json(A)}, {"s", s}, {"norm_bound", X}}},
           {"value_re", r.period.value.real()},
           {"value_im", r.period.value.imag()},
           {"rhs_re", r.rhs.real()},
           {"rhs_im", r.rhs.imag()},
           {"la_re", r.la.value.real()},
           {"la_im", r.la.value.imag()},
           {"volume", r.volume},
           {"quadrature_order", r.period.order},
           {"defect", r.defect},
           {"relative_defect", r.relative_defect},
           {"budget", r.budget},
           {"pass", r.defect <= r.budget}},
          r.defect, r.budget);
}

void verify_reciprocity(const Common& c, Campaign& out) {
  const Field F = make_field(c.D);
  std::mt19937_64 rng(c.seed);
  const auto tr = c.trunc();
  const int n = trials_or(c, 50);
  for (int t = 0; t < n; ++t) {
    auto [d, cc] = random_coprime_pair(F, rng, 50);
    d = make_positive_at(d, c.j);
    cc = make_positive_at(cc, c.j);
    const UHPoint zhat = random_point(rng, hat_size(F));
    const IdentityDefect r = reciprocity_defect(cc, d, zhat, c.j, tr);
    out.add({{"inputs", {{"c", elem_json(cc)}, {"d", elem_json(d)}, {"zhat", point_json(zhat)}}},
             {"defect", std::abs(r.defect)},
             {"budget", r.budget}},
            r.defect, r.budget);
  }
}

void verify_hecke(const Common& c, const std::string& p_str, const std::string& form,
                  Campaign& out) {
  const Field F = make_field(c.D);
  const OFElem p = parse_elem(F, p_str);
  if (form != "minus" && form != "plus") throw UsageError("--form must be minus or plus");
  const HeckeForm hf = form == "minus" ? HeckeForm::MinusShift : HeckeForm::PlusShift;
  std::mt19937_64 rng(c.seed);
  const auto tr = c.trunc();
  const int n = trials_or(c, 10);
  for (int t = 0; t < n; ++t) {
    const auto [d, cc] = random_coprime_pair(F, rng, 20);
    const UHPoint zhat = random_point(rng, hat_size(F));
    const IdentityDefect h = hecke_defect(d, cc, zhat, p, c.j, tr, hf);
    const UHPoint z = random_point(rng, static_cast<std::size_t>(F.degree()));
    const IdentityDefect o = omega_hecke_defect(F, z, p, c.j, tr);
    out.add({{"inputs", {{"d", elem_json(d)}, {"c", elem_json(cc)}, {"zhat", point_json(zhat)},
                         {"p", elem_json(p)}, {"form", form}}},
             {"defect", std::abs(h.defect)},
             {"budget", h.budget},
             {"omega", {{"z", point_json(z)}, {"defect", o.defect}, {"budget", o.budget}}}},
            h.defect, h.budget);
    out.max_defect = std::max(out.max_defect, o.defect);
    out.pass = out.pass && o.pass();
  }
}

void verify_symmetries(const Common& c, Campaign& out) {
  const Field F = make_field(c.D);
  std::mt19937_64 rng(c.seed);
  const auto tr = c.trunc();
  const int n = trials_or(c, 10);
  for (int t = 0; t < n; ++t) {
    const auto [d, cc] = random_coprime_pair(F, rng, 30);
    const UHPoint zhat = random_point(rng, hat_size(F));
    const SymmetryDefects s = symmetry_defects(d, cc, zhat, c.j, tr);
    double worst = 0.0, budget = 0.0;
    bool ok = true;
    for (const IdentityDefect* e : {&s.sign_c, &s.sign_d, &s.unit, &s.translation}) {
      worst = std::max(worst, std::abs(e->defect));
      budget = std::max(budget, e->budget);
      ok = ok && e->pass();
    }
    out.add({{"inputs", {{"d", elem_json(d)}, {"c", elem_json(cc)}, {"zhat", point_json(zhat)}}},
             {"sign_c", defect_json(s.sign_c)},
             {"sign_d", defect_json(s.sign_d)},
             {"unit", defect_json(s.unit)},
             {"translation", defect_json(s.translation)},
             {"translation_both_shifted_info", defect_json(s.translation_both)},
             {"defect", worst},
             {"budget", budget}},
            worst, budget, ok);
  }
}

void verify_cocycle(const Common& c, int points, Campaign& out) {
  const Field F = make_field(c.D);
  std::mt19937_64 rng(c.seed);
  const auto tr = c.trunc();
  const int n = trials_or(c, 100);
  for (int t = 0; t < n; ++t) {
    const ModMatrix A = random_modmatrix(F, rng, t % 3, 1);
    const ModMatrix B = random_modmatrix(F, rng, (t / 3) % 3, 1);
    for (int k = 0; k < points; ++k) {
      const UHPoint zhat = random_point(rng, hat_size(F));
      const IdentityDefect d = cocycle_defect(A, B, zhat, c.j, tr);
      out.add({{"inputs", {{"A", matrix_json(A)}, {"B", matrix_json(B)}, {"zhat", point_json(zhat)}}},
               {"defect", std::abs(d.defect)},
               {"budget", d.budget}},
              d.defect, d.budget);
    }
  }
}

void cmd_classical(const std::string& cs, const std::string& ds, bool recip,
                   bool hecke, const std::string& ps, Campaign& out) {
  Int ci, di;
  try {
    ci = Int(cs);
    di = Int(ds);
  } catch (const std::exception&) {
    throw UsageError("--c and --d must be integers");
  }
  json inputs = {{"c", ci.str()}, {"d", di.str()}};
  auto rat = [](const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
  };
  if (recip || hecke) {
    Rational def;
    if (recip) {
      def = classical_reciprocity_defect(ci, di);
    } else {
      Int pi;
      try {
        pi = Int(ps);
      } catch (const std::exception&) {
        throw UsageError("--p must be an integer");
      }
      inputs["p"] = pi.str();
      def = classical_hecke_defect(di, ci, pi);
    }
    const double dv = std::abs(static_cast<double>(def));
    json cs_json = {{"inputs", inputs},
                    {"identity", recip ? "reciprocity" : "hecke"},
                    {"defect_exact", rat(def)},
                    {"defect", dv},
                    {"budget", 0.0}};
    out.add(cs_json, dv, 0.0, def == 0);
    return;
  }
  const Rational v = classical_s(di, ci);
  out.add_value({{"inputs", inputs},
                 {"value_exact", rat(v)},
                 {"value", static_cast<double>(v)},
                 {"tail_error", 0.0}});
}

std::vector<char*> to_argv(std::vector<std::string>& args) {
  std::vector<char*> v;
  for (auto& a : args) v.push_back(a.data());
  return v;
}

const char* kDefaultMatrix = "[[[-2,-1],[1,1]],[[3,1],[-2,-1]]]";

}  // namespace

RunResult run(const std::vector<std::string>& args_in) {
  const auto start = std::chrono::steady_clock::now();
  RunResult res;
  std::vector<std::string> args = args_in;
  if (args.empty()) args.push_back("hds");

  CLI::App app{"Generalized Dedekind sums over real quadratic fields", "hds"};
  app.require_subcommand(1);
  Common c;
  c.tol = default_tolerance();
  app.add_option("--d", c.D, "Field: squarefree D > 1, or 1 for the rational field")->capture_default_str();
  app.add_option("--j", c.j, "Distinguished embedding (0 or 1)")->capture_default_str();
  app.add_option("--tol", c.tol, "Series tolerance (env HDS_TOL)")->capture_default_str();
  app.add_option("--weight-bound", c.weight_bound, "Fixed weight bound B; 0 picks one from --tol");
  app.add_option("--max-terms", c.max_terms, "Term cap for every series")->capture_default_str();
  app.add_option("--seed", c.seed, "Seed for randomized campaigns")->capture_default_str();
  app.add_option("--trials", c.trials, "Number of random cases");
  app.fallthrough();

  std::string num, den, z2, z, matrix = kDefaultMatrix, matrix2, s_str = "2", p_str = "[3,1]";
  std::string form = "minus", cls_c, cls_d, cls_p;
  bool script = false, recip = false, hecke = false;
  double X = 5000.0, s_real = 2.0, eis_bound = 1e5;
  unsigned order = 64, threads = 0;
  int points = 1;

  auto* sum = app.add_subcommand("sum", "s(d, c; zhat)");
  sum->add_option("--num", num, "d as [a, b]")->required();
  sum->add_option("--den", den, "c as [a, b]")->required();
  sum->add_option("--z2", z2, "zhat, e.g. \"0.3+1.1i\"");
  sum->add_flag("--script", script, "Also evaluate the Euclidean reduction script");

  auto* phi_cmd = app.add_subcommand("phi", "Phi_j(A, zhat)");
  phi_cmd->add_option("--matrix", matrix, "[[a, b], [c, d]] with entries [x, y]")->required();
  phi_cmd->add_option("--z2", z2, "zhat");

  auto* lambda_cmd = app.add_subcommand("lambda", "Lambda_j(z)");
  lambda_cmd->add_option("--z", z, "full point, e.g. '[[0.3,1.1],[-0.2,0.9]]'")->required();

  auto* delta_cmd = app.add_subcommand("delta", "Area cocycle Delta(A, B)");
  delta_cmd->add_option("--matrix", matrix)->required();
  delta_cmd->add_option("--matrix2", matrix2)->required();

  auto* classify_cmd = app.add_subcommand("classify", "Embedding types of A");
  classify_cmd->add_option("--matrix", matrix)->required();

  auto* psi_cmd = app.add_subcommand("psi", "Invariant Psi(A)");
  psi_cmd->add_option("--matrix", matrix)->required();

  auto* la_cmd = app.add_subcommand("la", "Truncated L_A(s)");
  la_cmd->add_option("--matrix", matrix)->capture_default_str();
  la_cmd->add_option("--s", s_str, "complex s, Re s >= 1.5")->capture_default_str();
  la_cmd->add_option("--norm-bound", X)->capture_default_str();

  auto* period_cmd = app.add_subcommand("theorem5", "Geodesic period of dE_F against the L_A(s) closed form");
  period_cmd->add_option("--matrix", matrix)->capture_default_str();
  period_cmd->add_option("--s", s_real)->capture_default_str();
  period_cmd->add_option("--norm-bound", X, "L_A truncation");
  period_cmd->add_option("--eis-bound", eis_bound, "E_F truncation")->capture_default_str();
  period_cmd->add_option("--order", order, "Initial quadrature order")->capture_default_str();
  period_cmd->add_option("--threads", threads, "0: hardware concurrency");

  auto* verify = app.add_subcommand("verify", "Randomized identity campaigns");
  verify->require_subcommand(1);
  auto* v_rec = verify->add_subcommand("reciprocity", "Reciprocity law");
  auto* v_hecke = verify->add_subcommand("hecke", "Hecke eigen-identity");
  v_hecke->add_option("--p", p_str, "totally positive prime")->capture_default_str();
  v_hecke->add_option("--form", form, "minus | plus")->capture_default_str();
  auto* v_sym = verify->add_subcommand("prop2", "Sign, unit and translation symmetries");
  auto* v_cocycle = verify->add_subcommand("cocycle", "Cocycle relation");
  v_cocycle->add_option("--points", points, "Points per matrix pair")->capture_default_str();
  for (auto* v : {v_rec, v_hecke, v_sym, v_cocycle}) v->fallthrough();
  verify->fallthrough();

  auto* classical = app.add_subcommand("classical", "Classical Dedekind sums, exact");
  classical->add_option("--c", cls_c)->required();
  classical->add_option("--d", cls_d)->required();
  classical->add_flag("--recip", recip, "Reciprocity defect");
  classical->add_flag("--hecke", hecke, "Hecke defect");
  classical->add_option("--p", cls_p, "prime for --hecke");

  for (auto* sc : {sum, phi_cmd, lambda_cmd, delta_cmd, classify_cmd, psi_cmd, la_cmd, period_cmd})
    sc->fallthrough();

  auto argv = to_argv(args);
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    res.exit_code = 0;
    res.diagnostic = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    res.exit_code = 2;
    res.diagnostic = std::string("usage error: ") + e.what();
    return res;
  }

  json command = json::array();
  for (std::size_t k = 1; k < args.size(); ++k) command.push_back(args[k]);
  Campaign out;
  try {
    if (c.j < 0 || c.j > 1) throw UsageError("--j must be 0 or 1");
    if (!(c.tol > 0.0)) throw UsageError("--tol must be positive");
    if (*sum) cmd_sum(c, num, den, z2, script, out);
    else if (*phi_cmd) cmd_phi(c, matrix, z2, out);
    else if (*lambda_cmd) cmd_lambda(c, z, out);
    else if (*delta_cmd) cmd_delta(c, matrix, matrix2, out);
    else if (*classify_cmd) cmd_classify(c, matrix, out);
    else if (*psi_cmd) cmd_psi(c, matrix, out);
    else if (*la_cmd) cmd_la(c, matrix, s_str, X, out);
    else if (*period_cmd) {
      if (period_cmd->count("--norm-bound") == 0) X = 2e5;
      cmd_period_identity(c, matrix, s_real, X, order, eis_bound, threads, out);
    } else if (*v_rec) verify_reciprocity(c, out);
    else if (*v_hecke) verify_hecke(c, p_str, form, out);
    else if (*v_sym) verify_symmetries(c, out);
    else if (*v_cocycle) verify_cocycle(c, points, out);
    else if (*classical) {
      if (recip && hecke) throw UsageError("--recip and --hecke are exclusive");
      if (hecke && cls_p.empty()) throw UsageError("--hecke needs --p");
      cmd_classical(cls_c, cls_d, recip, hecke, cls_p, out);
    }
  } catch (const UsageError& e) {
    res.exit_code = 2;
    res.diagnostic = std::string("usage error: ") + e.what();
    return res;
  } catch (const CapExceeded& e) {
    res.exit_code = 1;
    out.pass = false;
    out.cases.push_back({{"error", "CapExceeded"}, {"message", e.what()}});
  } catch (const Error& e) {
    res.exit_code = 2;
    res.diagnostic = std::string("error: ") + e.what();
    return res;
  }

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  res.report = {{"command", command},
                {"field", c.D},
                {"cases", out.cases},
                {"aggregate",
                 {{"max_defect", out.max_defect},
                  {"budget", out.max_budget},
                  {"pass", out.pass},
                  {"wall_time", wall}}}};
  res.exit_code = out.pass ? 0 : 1;
  return res;
}

}  // namespace hds::cli
