#include "qfs/pi_rep.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "qfs/errors.hpp"
#include "qfs/qcomb.hpp"

namespace qfs {

namespace {

using cd = std::complex<double>;

int wrap(int a, int p) { return ((a % p) + p) % p; }

cd q_numeric(int p, long long e) { return std::polar(1.0, 2.0 * std::numbers::pi * wrap(static_cast<int>(e % p), p) / p); }

// e^{a x} x^d e^{-(x-c)^2/2} = e^{a c + a^2/2} x^d e^{-(x-c-a)^2/2}
GaussAtomState multiply_exp(const GaussAtomState& s, const Rational& a, double scale) {
  GaussAtomState out;
  const double ad = a.get_d();
  for (const auto& [atom, c] : s.terms()) {
    GaussAtom b = atom;
    b.center = atom.center + a;
    out.add(b, c * (scale * std::exp(ad * atom.center.get_d() + 0.5 * ad * ad)));
  }
  return out;
}

// d/dx [x^d e^{-(x-c)^2/2}] = d x^{d-1} - x^{d+1} + c x^d
GaussAtomState derivative(const GaussAtomState& s) {
  GaussAtomState out;
  for (const auto& [atom, c] : s.terms()) {
    GaussAtom b = atom;
    if (atom.deg > 0) {
      b.deg = atom.deg - 1;
      out.add(b, c * static_cast<double>(atom.deg));
    }
    b.deg = atom.deg + 1;
    out.add(b, -c);
    b.deg = atom.deg;
    out.add(b, c * atom.center.get_d());
  }
  return out;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// integral x^a e^{-(x-c1)^2/2} x^b e^{-(x-c2)^2/2} dx
double atom_integral(int a, double c1, int b, double c2) {
  const int N = a + b;
  const double mid = 0.5 * (c1 + c2);
  const double pref = std::exp(-0.25 * (c1 - c2) * (c1 - c2));
  double acc = 0.0;
  for (int j = 0; j <= N; j += 2) acc += binomial(N, j) * std::pow(mid, N - j) * std::tgamma(0.5 * (j + 1));
  return pref * acc;
}

}  // namespace

bool operator<(const GaussAtom& a, const GaussAtom& b) {
  if (a.tpow != b.tpow) return a.tpow < b.tpow;
  if (a.deg != b.deg) return a.deg < b.deg;
  return a.center < b.center;
}

bool operator==(const GaussAtom& a, const GaussAtom& b) {
  return a.tpow == b.tpow && a.deg == b.deg && a.center == b.center;
}

std::string to_string(const GaussAtom& a) {
  std::ostringstream o;
  o << "x^" << a.deg << " exp(-(x - " << to_string(a.center) << ")^2/2) t^" << a.tpow;
  return o.str();
}

GaussAtomState GaussAtomState::atom(const GaussAtom& a, ComplexApprox c) {
  GaussAtomState s;
  s.add(a, c);
  return s;
}

void GaussAtomState::add(const GaussAtom& a, ComplexApprox c) {
  if (c == cd(0.0)) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cd(0.0)) terms_.erase(it);
  }
}

GaussAtomState& GaussAtomState::operator+=(const GaussAtomState& o) {
  for (const auto& [a, c] : o.terms_) add(a, c);
  return *this;
}

GaussAtomState& GaussAtomState::operator-=(const GaussAtomState& o) {
  for (const auto& [a, c] : o.terms_) add(a, -c);
  return *this;
}

GaussAtomState& GaussAtomState::operator*=(ComplexApprox s) {
  if (s == cd(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, c] : terms_) c *= s;
  return *this;
}

double RepParams::root_lambda() const {
  if (!(lambda_plus > 0.0)) throw DomainError("lambda+ must be positive");
  return std::pow(lambda_plus, 1.0 / p);
}

double RepParams::lambda_minus() const {
  double prod = 1.0;
  for (int n = 0; n < p; ++n) prod *= m_coeff(n, *this);
  return prod;
}

double q_number_numeric(int p, long long n) {
  const cd q = q_numeric(p, 1);
  const cd v = (q_numeric(p, n) - q_numeric(p, -n)) / (q - std::conj(q));
  return v.real();
}

double m_coeff(int n, const RepParams& params) {
  check_order(params.p);
  const int p = params.p;
  const double inv_root = 1.0 / params.root_lambda();
  n = wrap(n, p);
  if (n == 0 && params.m_convention == MConvention::Printed) return inv_root;
  return inv_root * (params.lambda_plus - q_number_numeric(p, n) * q_number_numeric(p, n - 1));
}

GaussAtomState apply_pi(UfsGen gen, const GaussAtomState& state, const RepParams& params) {
  const int p = params.p;
  check_order(p);
  switch (gen) {
    case UfsGen::Ep: {
      GaussAtomState out = multiply_exp(state, Rational(1, p), params.root_lambda());
      GaussAtomState shifted;
      for (const auto& [a, c] : out.terms()) {
        GaussAtom b = a;
        b.tpow = wrap(a.tpow + 1, p);
        shifted.add(b, c);
      }
      return shifted;
    }
    case UfsGen::Em: {
      GaussAtomState out;
      for (const auto& [a, c] : multiply_exp(state, Rational(-1, p), 1.0).terms()) {
        GaussAtom b = a;
        b.tpow = wrap(a.tpow - 1, p);
        out.add(b, c * m_coeff(a.tpow, params));
      }
      return out;
    }
    case UfsGen::Pp: return multiply_exp(state, Rational(1), params.lambda_plus);
    case UfsGen::Pm: return multiply_exp(state, Rational(-1), params.lambda_minus());
    case UfsGen::H: return derivative(state) * cd(0.0, -1.0);
    case UfsGen::K:
    case UfsGen::Kinv: {
      const int sign = gen == UfsGen::K ? 1 : -1;
      GaussAtomState out;
      for (const auto& [a, c] : state.terms()) out.add(a, c * q_numeric(p, sign * a.tpow));
      return out;
    }
  }
  throw UnknownGenerator("?");
}

GaussAtomState apply_pi(const UfsElement& x, const GaussAtomState& state, const RepParams& params) {
  GaussAtomState out;
  const double mu = params.root_lambda();
  for (const auto& [mono, c] : x.terms()) {
    GaussAtomState s = state;
    const std::pair<UfsGen, int> steps[] = {{UfsGen::H, mono.l},  {UfsGen::Pm, mono.s}, {UfsGen::Pp, mono.r},
                                            {UfsGen::K, mono.k},  {UfsGen::Ep, mono.m}, {UfsGen::Em, mono.n}};
    for (const auto& [g, e] : steps)
      for (int j = 0; j < e; ++j) s = apply_pi(g, s, params);
    out += s * c.embed(mu);
  }
  return out;
}

ComplexApprox inner_product(const GaussAtomState& u, const GaussAtomState& v, int p) {
  check_order(p);
  cd acc = 0.0;
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) {
      if (wrap(a.tpow + b.tpow, p) != 0) continue;
      acc += ca * std::conj(cb) * atom_integral(a.deg, a.center.get_d(), b.deg, b.center.get_d());
    }
  return acc;
}

double positive_norm(const GaussAtomState& u) {
  double acc = 0.0;
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : u.terms()) {
      if (a.tpow != b.tpow) continue;
      acc += (ca * std::conj(cb)).real() * atom_integral(a.deg, a.center.get_d(), b.deg, b.center.get_d());
    }
  return std::sqrt(std::max(acc, 0.0));
}

std::vector<std::vector<ComplexApprox>> rep_matrix(UfsGen gen, const std::vector<GaussAtom>& basis,
                                                   const RepParams& params) {
  std::vector<std::vector<ComplexApprox>> m(basis.size(), std::vector<ComplexApprox>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const GaussAtomState img = apply_pi(gen, GaussAtomState::atom(basis[j]), params);
    for (std::size_t i = 0; i < basis.size(); ++i) m[i][j] = inner_product(GaussAtomState::atom(basis[i]), img, params.p);
  }
  return m;
}

bool PiReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

CycloScalar exact_lambda_minus(int p, MConvention conv) {
  check_order(p);
  const CycloScalar mu_inv = CycloScalar::mu_power(p, -1);
  CycloScalar prod = conv == MConvention::Printed ? mu_inv : CycloScalar::mu_power(p, p - 1);
  for (int n = 1; n < p; ++n) prod *= mu_inv * (CycloScalar::mu_power(p, p) - q_number(p, n) * q_number(p, n - 1));
  return prod;
}

namespace {

GaussAtomState random_state(std::mt19937_64& rng, int p) {
  std::uniform_int_distribution<int> nterms(1, 4), deg(0, 2), cnum(-p, p), tp(0, p - 1);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  GaussAtomState s;
  for (int j = nterms(rng); j > 0; --j) {
    GaussAtom a;
    a.deg = deg(rng);
    a.center = Rational(cnum(rng), p);
    a.center.canonicalize();
    a.tpow = tp(rng);
    const double re = coef(rng), im = coef(rng);
    s.add(a, cd(re, im));
  }
  return s;
}

}  // namespace

PiReport verify_pi(const RepParams& params, double tol, std::uint64_t seed, int batch) {
  const int p = params.p;
  check_order(p);
  PiReport report;
  report.params = params;
  report.tol = tol;
  std::mt19937_64 rng(seed);
  std::vector<GaussAtomState> states;
  for (int j = 0; j < batch; ++j) states.push_back(random_state(rng, p));

  auto op = [&](UfsGen g) { return [&, g](const GaussAtomState& s) { return apply_pi(g, s, params); }; };
  using Op = std::function<GaussAtomState(const GaussAtomState&)>;
  auto compose = [](std::vector<Op> ops) {
    return [ops](const GaussAtomState& s) {
      GaussAtomState r = s;
      for (auto it = ops.rbegin(); it != ops.rend(); ++it) r = (*it)(r);
      return r;
    };
  };
  const Op Ep = op(UfsGen::Ep), Em = op(UfsGen::Em), K = op(UfsGen::K), Ki = op(UfsGen::Kinv), H = op(UfsGen::H),
           Pp = op(UfsGen::Pp), Pm = op(UfsGen::Pm);
  const cd i(0.0, 1.0);
  const cd q = q_numeric(p, 1);
  auto power = [&](const Op& g, int e) { return [g, e](const GaussAtomState& s) {
    GaussAtomState r = s;
    for (int j = 0; j < e; ++j) r = g(r);
    return r;
  }; };

  auto relation = [&](const std::string& name, const Op& lhs, const Op& rhs) {
    PiCheck c{name};
    for (const auto& s : states) c.max_deviation = std::max(c.max_deviation, positive_norm(lhs(s) - rhs(s)));
    c.passed = c.max_deviation < tol;
    report.checks.push_back(c);
  };
  auto commutator = [&](const Op& a, const Op& b) {
    return [a, b](const GaussAtomState& s) { return a(b(s)) - b(a(s)); };
  };
  auto scaled = [](const Op& a, cd f) { return [a, f](const GaussAtomState& s) { return a(s) * f; }; };
  const Op zero = [](const GaussAtomState&) { return GaussAtomState(); };
  const Op id = [](const GaussAtomState& s) { return s; };

  relation("[P+, P-] = 0", commutator(Pp, Pm), zero);
  relation("[P+, H] = i P+", commutator(Pp, H), scaled(Pp, i));
  relation("[P-, H] = -i P-", commutator(Pm, H), scaled(Pm, -i));
  relation("K E+ K^-1 = q E+", compose({K, Ep, Ki}), scaled(Ep, q));
  relation("K E- K^-1 = q^-1 E-", compose({K, Em, Ki}), scaled(Em, std::conj(q)));
  relation("[E+, E-] = (K^2 - K^-2)/(q - q^-1)", commutator(Ep, Em), [&](const GaussAtomState& s) {
    return (K(K(s)) - Ki(Ki(s))) * (1.0 / (q - std::conj(q)));
  });
  relation("[K, H] = 0", commutator(K, H), zero);
  relation("[E+, H] = (i/p) E+", commutator(Ep, H), scaled(Ep, i / static_cast<double>(p)));
  relation("[E-, H] = -(i/p) E-", commutator(Em, H), scaled(Em, -i / static_cast<double>(p)));
  relation("E+^p = P+", power(Ep, p), Pp);
  relation("E-^p = P-", power(Em, p), Pm);
  relation("K^p = 1", power(K, p), id);
  relation("K K^-1 = 1", compose({K, Ki}), id);

  const UfsElement c1 = casimir(p, Casimir::C1);
  const Op C1 = [&](const GaussAtomState& s) { return apply_pi(c1, s, params); };
  for (const auto& [name, g] : std::vector<std::pair<std::string, Op>>{{"E+", Ep}, {"E-", Em}, {"K", K}, {"H", H}})
    relation("[C1, " + name + "] = 0", commutator(C1, g), zero);

  {
    PiCheck c{"prod M_n = lambda- (exact mu form)"};
    const double numeric = params.lambda_minus();
    c.max_deviation = std::abs(exact_lambda_minus(p, params.m_convention).embed(params.root_lambda()) - cd(numeric));
    c.passed = c.max_deviation < tol;
    report.checks.push_back(c);
  }
  {
    PiCheck c{"M_n real"};
    const cd qq = q_numeric(p, 1);
    for (int n = 1; n < p; ++n) {
      const cd a = (q_numeric(p, n) - q_numeric(p, -n)) / (qq - std::conj(qq));
      const cd b = (q_numeric(p, n - 1) - q_numeric(p, 1 - n)) / (qq - std::conj(qq));
      c.max_deviation = std::max(c.max_deviation, std::abs((a * b).imag()));
    }
    c.passed = c.max_deviation < tol;
    report.checks.push_back(c);
  }

  for (const auto& [name, g] : std::vector<std::pair<std::string, Op>>{
           {"E+", Ep}, {"E-", Em}, {"K", K}, {"H", H}, {"P+", Pp}, {"P-", Pm}}) {
    PiCheck c{"(pi(" + name + ") u, v) = (u, pi(" + name + ") v)"};
    for (const auto& u : states)
      for (const auto& v : states)
        c.max_deviation = std::max(c.max_deviation, std::abs(inner_product(g(u), v, p) - inner_product(u, g(v), p)));
    c.passed = c.max_deviation < tol;
    report.checks.push_back(c);
  }
  return report;
}

std::pair<int, int> gram_signature(int p) {
  check_order(p);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(p, p);
  for (int n = 0; n < p; ++n) g(n, wrap(-n, p)) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
  int pos = 0, neg = 0;
  for (int j = 0; j < p; ++j) (es.eigenvalues()(j) > 0 ? pos : neg)++;
  return {pos, neg};
}

}  // namespace qfs
