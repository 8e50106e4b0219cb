// qfs: command line front end. Every command prints JSON on stdout.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qfs/duality.hpp"
#include "qfs/errors.hpp"
#include "qfs/expr.hpp"
#include "qfs/kernels.hpp"
#include "qfs/pi_rep.hpp"
#include "qfs/suites.hpp"
#include "qfs/superspace.hpp"

using nlohmann::json;
using namespace qfs;

namespace {

struct Globals {
  int p = 3;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  double lambda_plus = 1.0;
  std::string json_out;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ComplexApprox parse_complex(const std::string& s) {
  std::istringstream in(s);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(in >> re)) throw UsageError("bad complex number '" + s + "', expected re or re,im");
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) throw UsageError("bad complex number '" + s + "', expected re or re,im");
  }
  return {re, im};
}

json complex_json(ComplexApprox z) { return json::array({z.real(), z.imag()}); }

UfsGen ufs_gen_from_string(const std::string& s) {
  static const std::pair<const char*, UfsGen> names[] = {{"E+", UfsGen::Ep},     {"E-", UfsGen::Em}, {"K", UfsGen::K},
                                                         {"K^-1", UfsGen::Kinv}, {"H", UfsGen::H},   {"P+", UfsGen::Pp},
                                                         {"P-", UfsGen::Pm}};
  for (const auto& [n, g] : names)
    if (s == n) return g;
  throw UnknownGenerator(s);
}

CycloScalar scalar_from_text(const std::string& text, int p) {
  const UfsElement x = parse_ufs(text, p);
  for (const auto& [mono, c] : x.terms()) {
    if (!(mono == UfsMonomial{})) throw UsageError("coefficient '" + text + "' is not a scalar");
    (void)c;
  }
  return x.coeff(UfsMonomial{});
}

// [{"n":1,"m":0,"weight":1,"poly":[{"a":0,"b":1,"coeff":"2 i q"}]}, ...]
SuperField superfield_from_json(const json& j, int p) {
  if (!j.is_array()) throw UsageError("superfield JSON must be a list of components");
  SuperField phi(p);
  for (const auto& comp : j) {
    const int n = comp.at("n").get<int>(), m = comp.at("m").get<int>(), w = comp.value("weight", 1);
    for (const auto& t : comp.at("poly")) {
      const json& c = t.at("coeff");
      const std::string text = c.is_string() ? c.get<std::string>() : c.dump();
      phi += sf_mono(p, SuperMonomial{n, m, {w, t.value("a", 0), t.value("b", 0)}}, scalar_from_text(text, p));
    }
  }
  return phi;
}

GaussAtom atom_from_json(const json& j) {
  GaussAtom a;
  a.deg = j.value("deg", 0);
  a.tpow = j.value("tpow", 0);
  if (j.contains("center")) {
    const json& c = j["center"];
    a.center = Rational(c.is_string() ? c.get<std::string>() : c.dump());
    a.center.canonicalize();
  }
  return a;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return json::parse(in);
}

json read_json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) return json::parse(arg);
  return read_json_file(arg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact algebra engine for U_FS, A_FS and their superspace"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--p", g.p, "odd root-of-unity order p >= 3")->envname("QFS_P")->capture_default_str();
  app.add_option("--tol", g.tol, "numeric tolerance")->envname("QFS_TOL")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for sampled instances")->envname("QFS_SEED")->capture_default_str();
  app.add_option("--lambda-plus", g.lambda_plus, "lambda+ > 0")->envname("QFS_LAMBDA_PLUS")->capture_default_str();
  app.add_option("--json-out", g.json_out, "also write the JSON result to this path")->envname("QFS_JSON_OUT");
  app.fallthrough();

  json out;
  bool ok = true;
  std::function<void()> run;

  auto* normalize = app.add_subcommand("normalize", "normal ordered form of an expression");
  std::string algebra = "ufs", expr_text;
  normalize->add_option("--algebra", algebra)->check(CLI::IsMember({"ufs", "afs"}));
  normalize->add_option("expression", expr_text)->required();
  normalize->callback([&] {
    run = [&] {
      const Algebra a = algebra_from_string(algebra);
      const std::string nf = a == Algebra::Ufs ? to_expression(parse_ufs(expr_text, g.p)) : to_expression(parse_afs(expr_text, g.p));
      out = {{"algebra", algebra}, {"p", g.p}, {"input", expr_text}, {"normal_form", nf}};
    };
  });

  auto* pair_cmd = app.add_subcommand("pair", "<x, a> for x in U_FS and a in A_FS");
  std::string ufs_text, afs_text, weight = "consistent";
  pair_cmd->add_option("ufs", ufs_text)->required();
  pair_cmd->add_option("afs", afs_text)->required();
  pair_cmd->add_option("--weight", weight)->check(CLI::IsMember({"consistent", "printed"}));
  pair_cmd->callback([&] {
    run = [&] {
      const PairingWeight w = weight == "printed" ? PairingWeight::Printed : PairingWeight::Consistent;
      const CycloScalar v = pair(parse_ufs(ufs_text, g.p), parse_afs(afs_text, g.p), w);
      out = {{"p", g.p}, {"weight", weight}, {"value", v.to_string()}};
    };
  });

  auto* rep = app.add_subcommand("rep", "the pi representation on Gaussian atoms");
  rep->require_subcommand(1);
  auto* rep_matrix_cmd = rep->add_subcommand("matrix", "dense matrix of one generator");
  std::string gen_name = "E+", basis_arg;
  rep_matrix_cmd->add_option("--gen", gen_name)->capture_default_str();
  rep_matrix_cmd->add_option("--basis", basis_arg, "atom list JSON (inline or path): [{deg, center, tpow}]")->required();
  rep_matrix_cmd->callback([&] {
    run = [&] {
      std::vector<GaussAtom> basis;
      for (const auto& a : read_json_arg(basis_arg)) basis.push_back(atom_from_json(a));
      const RepParams params{g.p, g.lambda_plus};
      json rows = json::array();
      for (const auto& row : rep_matrix(ufs_gen_from_string(gen_name), basis, params)) {
        json r = json::array();
        for (const auto& z : row) r.push_back(complex_json(z));
        rows.push_back(r);
      }
      json names = json::array();
      for (const auto& a : basis) names.push_back(to_string(a));
      out = {{"p", g.p}, {"lambda_plus", g.lambda_plus}, {"gen", gen_name}, {"basis", names}, {"matrix", rows}};
    };
  });
  auto* rep_verify = rep->add_subcommand("verify", "relation and *-property residuals");
  rep_verify->callback([&] {
    run = [&] {
      const SuiteReport r = run_suite("rep", SuiteParams{g.p, g.seed, g.tol, g.lambda_plus});
      out = to_json(r);
      ok = r.passed();
    };
  });

  auto* kernel = app.add_subcommand("kernel", "corepresentation kernels");
  kernel->require_subcommand(1);
  auto* omega_cmd = kernel->add_subcommand("omega", "Omega_{k,l} as a polynomial in xi");
  int k = 0, l = 0;
  bool tilde = false;
  omega_cmd->add_option("--k", k)->required();
  omega_cmd->add_option("--l", l)->required();
  omega_cmd->add_flag("--tilde", tilde, "Omega-tilde instead of Omega");
  omega_cmd->callback([&] {
    run = [&] {
      OmegaAudit audit;
      const XiPolynomial x = tilde ? omega_tilde(g.p, k, l, MConvention::Uniform, &audit) : omega(g.p, k, l, MConvention::Uniform, &audit);
      json coeffs = json::array();
      for (const auto& c : x.coeffs) coeffs.push_back(c.to_string());
      out = {{"p", g.p},
             {"k", k},
             {"l", l},
             {"tilde", tilde},
             {"coeffs", coeffs},
             {"text", to_string(x)},
             {"audit", {{"summands", audit.summands}, {"dropped", audit.dropped}, {"inversions", audit.inversions}}}};
    };
  });
  auto* ks = kernel->add_subcommand("Ks", "K_s(nu, mu, g0) by contour quadrature");
  std::string nu_text = "0", mu_text = "0";
  KernelParams kp;
  double zp = 1.0, zm = 1.0;
  std::optional<double> ks_tol;
  ks->add_option("--nu", nu_text, "re or re,im")->capture_default_str();
  ks->add_option("--mu", mu_text, "re or re,im")->capture_default_str();
  ks->add_option("--s", kp.s)->capture_default_str();
  ks->add_option("--r", kp.r)->capture_default_str();
  ks->add_option("--lambda-coord", kp.lambda_coord)->capture_default_str();
  ks->add_option("--z+", zp)->required();
  ks->add_option("--z-", zm)->required();
  ks->add_option("--tol", ks_tol, "overrides the global tolerance");
  ks->callback([&] {
    run = [&] {
      kp.p = g.p;
      kp.nu = parse_complex(nu_text);
      kp.mu = parse_complex(mu_text);
      const double tol = ks_tol.value_or(g.tol);
      const KsResult r = ks_quadrature(kp, zp, zm, tol);
      const QuadrantPoint pt = polar_map(zp, zm);
      out = {{"p", g.p},          {"value", complex_json(r.value)}, {"error", r.error},  {"tol", tol},
             {"step", r.step},   {"halvings", r.halvings},         {"nodes", r.nodes}, {"quadrant", pt.quadrant},
             {"rho", pt.rho},    {"beta", pt.beta},                {"bessel_kind", to_string(ks_bessel_kind(pt.quadrant))}};
      ok = r.error < tol;
    };
  });

  auto* action_cmd = app.add_subcommand("action", "S[Phi] = I_E(Phi* R(C) Phi)");
  std::string casimir_name = "C1", phi_arg;
  action_cmd->add_option("--casimir", casimir_name)->check(CLI::IsMember({"C1", "C2", "id"}))->capture_default_str();
  action_cmd->add_option("--phi", phi_arg, "superfield JSON (inline or path); a seeded sample when omitted");
  action_cmd->callback([&] {
    run = [&] {
      const SuperField phi = phi_arg.empty() ? sample_superfield(g.p, g.seed) : superfield_from_json(read_json_arg(phi_arg), g.p);
      const UfsElement c = casimir_name == "id"   ? ufs_unit(g.p)
                           : casimir_name == "C1" ? casimir(g.p, Casimir::C1)
                                                  : casimir(g.p, Casimir::C2);
      const PiScalar s = action(phi, c);
      out = {{"p", g.p}, {"casimir", casimir_name}, {"phi", to_string(phi)}, {"S", to_string(s)}};
    };
  });

  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  std::string suite = "all";
  int instances = 200;
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("--suite", suite)->check(CLI::IsMember(choices))->capture_default_str();
  verify->add_option("--instances", instances, "random instances per sampled identity")->capture_default_str();
  verify->callback([&] {
    run = [&] {
      const SuiteParams sp{g.p, g.seed, g.tol, g.lambda_plus, instances};
      if (suite == "all") {
        out = json::array();
        for (const auto& n : suite_names()) {
          const SuiteReport r = run_suite(n, sp);
          ok = ok && r.passed();
          out.push_back(to_json(r));
        }
      } else {
        const SuiteReport r = run_suite(suite, sp);
        ok = r.passed();
        out = to_json(r);
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (g.p < 3 || g.p % 2 == 0) throw UsageError("p must be an odd integer >= 3, got " + std::to_string(g.p));
    if (!(g.lambda_plus > 0)) throw UsageError("lambda+ must be positive");
    run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = out.dump(2);
  std::cout << text << "\n";
  if (!g.json_out.empty()) {
    std::ofstream f(g.json_out);
    if (!f) {
      std::cerr << "error: cannot write " << g.json_out << "\n";
      return 2;
    }
    f << text << "\n";
  }
  return ok ? 0 : 1;
}
