#include "qfs/kernels.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/hankel.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qfs/errors.hpp"
#include "qfs/qcomb.hpp"

namespace qfs {

namespace {

using cd = ComplexApprox;
constexpr double kPi = std::numbers::pi;
const cd kI{0.0, 1.0};

int mod(int a, int p) { return ((a % p) + p) % p; }

CycloScalar i_power(int p, int e) {
  CycloScalar r = CycloScalar::one(p);
  const CycloScalar i = CycloScalar::imag(p);
  for (int j = mod(e, 4); j > 0; --j) r *= i;
  return r;
}

CycloScalar sign_power(int p, int e) {
  return e % 2 == 0 ? CycloScalar::one(p) : CycloScalar::integer(p, -1);
}

// 1/[a]! 1/[b]!; false when either argument leaves [0, p).
bool reciprocal_factorials(int p, int a, int b, CycloScalar& out, OmegaAudit& audit) {
  if (a < 0 || a >= p || b < 0 || b >= p) return false;
  audit.inversions += 2;
  if (q_factorial(p, a).is_zero()) ++audit.zero_inversions;
  if (q_factorial(p, b).is_zero()) ++audit.zero_inversions;
  out = inv_q_factorial(p, a) * inv_q_factorial(p, b);
  return true;
}

void check_range(bool ok, const std::string& what) {
  if (!ok) throw IndexOutOfRange(what);
}

}  // namespace

bool XiPolynomial::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

int XiPolynomial::degree() const {
  for (int m = static_cast<int>(coeffs.size()) - 1; m >= 0; --m)
    if (!coeffs[m].is_zero()) return m;
  return -1;
}

CycloScalar XiPolynomial::coeff(int m) const {
  return m >= 0 && m < static_cast<int>(coeffs.size()) ? coeffs[m] : CycloScalar::zero(p);
}

std::string to_string(const XiPolynomial& x) {
  std::ostringstream os;
  bool first = true;
  for (int m = 0; m < static_cast<int>(x.coeffs.size()); ++m) {
    if (x.coeffs[m].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << x.coeffs[m].to_string() << ")";
    if (m > 0) os << "*xi^" << m;
  }
  return first ? "0" : os.str();
}

CycloScalar m_exact(int p, int n, MConvention conv) {
  const int r = mod(n, p);
  const CycloScalar mu_inv = CycloScalar::mu_power(p, -1);
  if (r == 0 && conv == MConvention::Printed) return mu_inv;
  return mu_inv * (CycloScalar::mu_power(p, p) - q_number(p, r) * q_number(p, r - 1));
}

XiPolynomial omega(int p, int k, int l, MConvention conv, OmegaAudit* audit) {
  check_order(p);
  check_range(k >= 0 && k < p && l >= k && l < k + p, "omega(" + std::to_string(k) + ", " + std::to_string(l) + ")");
  OmegaAudit local;
  OmegaAudit& a = audit ? *audit : local;
  XiPolynomial out{p, std::vector<CycloScalar>(p, CycloScalar::zero(p))};
  for (int m = 0; m <= p + l - k - 1; ++m) {
    ++a.summands;
    CycloScalar inv;
    if (m >= p || !reciprocal_factorials(p, m, m - k + l, inv, a)) {
      ++a.dropped;
      continue;
    }
    CycloScalar c = i_power(p, k - l) * sign_power(p, m + k + l) *
                    q_half_power(p, static_cast<long long>(l - k) * (2 * l + 1) - 2LL * m * (k + l)) *
                    CycloScalar::mu_power(p, m - k + l) * inv;
    for (int s = 0; s <= m; ++s) c *= m_exact(p, s + l, conv);
    out.coeffs[m] += c;
  }
  return out;
}

XiPolynomial omega_tilde(int p, int k, int l, MConvention conv, OmegaAudit* audit) {
  check_order(p);
  check_range(k >= 0 && k < p && l >= 0 && l < 2 * p,
              "omega_tilde(" + std::to_string(k) + ", " + std::to_string(l) + ")");
  OmegaAudit local;
  OmegaAudit& a = audit ? *audit : local;
  XiPolynomial out{p, std::vector<CycloScalar>(p, CycloScalar::zero(p))};
  for (int m = 0; m <= k - l - 1; ++m) {
    ++a.summands;
    CycloScalar inv;
    if (m >= p || !reciprocal_factorials(p, m, m + p + k - l, inv, a)) {
      ++a.dropped;
      continue;
    }
    CycloScalar c = i_power(p, l - k - p) * sign_power(p, m + 1) *
                    CycloScalar::q_power(p, static_cast<long long>(l) * (k - l) + static_cast<long long>(m) * (k + l)) *
                    CycloScalar::mu_power(p, m) * inv;
    for (int s = 1; s <= p + k - l + m; ++s) c *= m_exact(p, s - p + l, conv);
    out.coeffs[m] += c;
  }
  return out;
}

AfsElement xi_element(int p) {
  return afs_mul(afs_gen(p, AfsGen::EtaP), afs_gen(p, AfsGen::EtaM)) * CycloScalar::q_power(p, 1);
}

AfsElement evaluate_xi(const XiPolynomial& x) {
  AfsElement out(x.p), power = afs_unit(x.p);
  const AfsElement xi = xi_element(x.p);
  for (const auto& c : x.coeffs) {
    out += power * c;
    power = afs_mul(power, xi);
  }
  return out;
}

AfsElement KernelTerm::grassmann() const { return afs_mul(prefactor, evaluate_xi(omega)); }

KernelQ kernel_Q(int p, int k, int l, MConvention conv) {
  check_order(p);
  const int kk = mod(k, p), ll = mod(l, p);
  const AfsElement delta = afs_pow(afs_gen(p, AfsGen::Delta), ll);
  const AfsElement ep = afs_gen(p, AfsGen::EtaP), em = afs_gen(p, AfsGen::EtaM);
  KernelQ q{p, kk, ll, {}};
  if (ll >= kk) {
    q.terms[0] = {ll - kk, afs_mul(delta, afs_pow(ep, ll - kk)), omega(p, kk, ll, conv), false};
    q.terms[1] = {ll - kk - p, afs_mul(afs_pow(em, p + kk - ll), delta), omega_tilde(p, kk, ll, conv), true};
  } else {
    q.terms[0] = {p + ll - kk, afs_mul(delta, afs_pow(ep, p + ll - kk)), omega(p, kk, p + ll, conv), false};
    q.terms[1] = {ll - kk, afs_mul(afs_pow(em, kk - ll), delta), omega_tilde(p, kk, p + ll, conv), true};
  }
  return q;
}

QuadrantPoint polar_map(double z_plus, double z_minus) {
  if (z_plus == 0.0 || z_minus == 0.0) throw OnAxis();
  QuadrantPoint pt;
  if (z_plus > 0) pt.quadrant = z_minus > 0 ? 1 : 2;
  else pt.quadrant = z_minus < 0 ? 3 : 4;
  pt.rho = 2.0 * std::sqrt(std::abs(z_plus)) * std::sqrt(std::abs(z_minus));
  pt.beta = 0.5 * (std::log(std::abs(z_plus)) - std::log(std::abs(z_minus)));
  return pt;
}

std::array<double, 2> polar_inverse(const QuadrantPoint& pt) {
  const double up = 0.5 * pt.rho * std::exp(pt.beta), dn = 0.5 * pt.rho * std::exp(-pt.beta);
  switch (pt.quadrant) {
    case 1: return {up, dn};
    case 2: return {up, -dn};
    case 3: return {-up, -dn};
    case 4: return {-up, dn};
    default: throw DomainError("quadrant must be 1..4");
  }
}

ComplexApprox KernelParams::exponent() const { return nu - mu + static_cast<double>(s) / p; }

KsResult ks_quadrature(const KernelParams& params, double z_plus, double z_minus, double tol, int max_halvings) {
  check_order(params.p);
  if (!(params.r > 0.0) || !std::isfinite(params.r)) throw DomainError("r must be positive");
  const cd a = params.exponent();
  if (!(std::abs(a.real()) < 1.0)) throw DomainError("need -1 < Re(nu - mu + s/p) < 1");
  if (!(tol > 0.0)) throw DomainError("tol must be positive");
  polar_map(z_plus, z_minus);

  const double th_plus = z_plus > 0 ? kPi / 2 : -kPi / 2;
  const double th_minus = z_minus > 0 ? -kPi / 2 : kPi / 2;
  const double mid = 0.5 * (th_plus + th_minus), half = 0.5 * (th_plus - th_minus);
  const double t0 = 0.5 * (std::log(std::abs(z_minus)) - std::log(std::abs(z_plus)));
  const double r = params.r;

  auto exponent = [&](double t, double& dphi) {
    const double th = std::tanh(t - t0);
    dphi = half * (1.0 - th * th);
    const cd x{t, mid + half * th};
    return kI * r * (std::exp(x) * z_plus + std::exp(-x) * z_minus) + a * x;
  };
  auto integrand = [&](double t) {
    double dphi = 0.0;
    const cd e = exponent(t, dphi);
    return std::exp(e) * cd(1.0, dphi);
  };
  auto log_size = [&](double t) {
    double dphi = 0.0;
    return exponent(t, dphi).real() + 0.5 * std::log1p(dphi * dphi);
  };

  // truncate where the integrand drops below e^-60 of the scale e^(r rho)
  const double cutoff = -60.0 + std::max(0.0, r * polar_map(z_plus, z_minus).rho);
  auto edge = [&](double dir) {
    double t = t0 + dir;
    for (int j = 0; j < 2000; ++j, t += 0.25 * dir)
      if (log_size(t) < cutoff && log_size(t + 0.25 * dir) < cutoff) return t;
    throw ConvergenceFailure("integrand tail does not decay", std::numeric_limits<double>::infinity());
  };
  const double lo = edge(-1.0), hi = edge(1.0);

  int n = std::max(8, static_cast<int>(std::ceil((hi - lo) / 0.25)));
  double h = (hi - lo) / n;
  cd sum = 0.5 * (integrand(lo) + integrand(hi));
  for (int j = 1; j < n; ++j) sum += integrand(lo + j * h);
  const cd pref = std::exp(params.mu * params.lambda_coord) / (2.0 * kPi * kI);
  cd prev = pref * h * sum;

  KsResult res;
  for (int level = 1; level <= max_halvings; ++level) {
    cd mids = 0.0;
    for (int j = 0; j < n; ++j) mids += integrand(lo + (j + 0.5) * h);
    sum += mids;
    n *= 2;
    h *= 0.5;
    const cd cur = pref * h * sum;
    res = {cur, std::abs(cur - prev), h, level, n + 1};
    if (level >= 2 && res.error < tol) return res;
    prev = cur;
  }
  throw ConvergenceFailure("step halving", res.error);
}

std::string to_string(BesselKind k) {
  switch (k) {
    case BesselKind::Hankel1: return "H1";
    case BesselKind::Hankel2: return "H2";
    case BesselKind::Macdonald: return "K";
  }
  return "?";
}

BesselKind ks_bessel_kind(int quadrant) {
  switch (quadrant) {
    case 1: return BesselKind::Hankel1;
    case 3: return BesselKind::Hankel2;
    case 2:
    case 4: return BesselKind::Macdonald;
    default: throw DomainError("quadrant must be 1..4");
  }
}

namespace {

double real_order(const KernelParams& params) {
  const cd o = params.bessel_order();
  if (std::abs(o.imag()) > 1e-12) throw DomainError("closed forms need a real Bessel order");
  return o.real();
}

cd phase(double o, double beta, double sign, const KernelParams& params) {
  return std::exp(o * cd(beta, sign * kPi / 2) + params.mu * params.lambda_coord);
}

}  // namespace

ComplexApprox ks_closed_form(const KernelParams& params, double z_plus, double z_minus) {
  const double o = real_order(params);
  const QuadrantPoint pt = polar_map(z_plus, z_minus);
  const double x = params.r * pt.rho;
  switch (pt.quadrant) {
    case 1: return 0.5 * phase(o, pt.beta, 1, params) * boost::math::cyl_hankel_1(o, x);
    case 2: return phase(o, pt.beta, -1, params) * boost::math::cyl_bessel_k(o, x) / (kPi * kI);
    case 3: return -0.5 * phase(o, pt.beta, -1, params) * boost::math::cyl_hankel_2(o, x);
    default: return phase(o, pt.beta, 1, params) * boost::math::cyl_bessel_k(o, x) / (kPi * kI);
  }
}

ComplexApprox ks_closed_form_printed(const KernelParams& params, double z_plus, double z_minus) {
  const double o = real_order(params);
  const QuadrantPoint pt = polar_map(z_plus, z_minus);
  const double x = params.r * pt.rho;
  switch (pt.quadrant) {
    case 1: return 0.5 * phase(o, pt.beta, 1, params) * boost::math::cyl_hankel_1(o, x);
    case 2: return 0.5 * phase(o, pt.beta, -1, params) * boost::math::cyl_hankel_2(o, x);
    case 3: return phase(o, pt.beta, 1, params) * boost::math::cyl_bessel_k(o, x) / (kPi * kI);
    default: return phase(o, pt.beta, -1, params) * boost::math::cyl_bessel_k(o, x) / (kPi * kI);
  }
}

ComplexApprox hankel1_half(double order, double x) {
  const double amp = std::sqrt(2.0 / (kPi * x));
  if (order == 0.5) return -kI * amp * std::exp(kI * x);
  if (order == -0.5) return amp * std::exp(kI * x);
  throw DomainError("half-order Hankel needs order +-1/2");
}

double macdonald_half(double x) { return std::sqrt(kPi / (2.0 * x)) * std::exp(-x); }

bool KernelReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

const KernelCheck* KernelReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

void close(KernelCheck& c) { c.passed = c.cases > 0 && c.max_deviation <= c.threshold; }

KernelCheck make_check(const std::string& name, double threshold) {
  KernelCheck c;
  c.name = name;
  c.threshold = threshold;
  return c;
}

// A point of the given quadrant with polar coordinates (rho, beta).
std::array<double, 2> quadrant_point(int quadrant, double rho, double beta) {
  return polar_inverse(QuadrantPoint{quadrant, rho, beta});
}

}  // namespace

KernelReport verify_kernels(int p, double tol) {
  check_order(p);
  KernelReport rep;
  rep.p = p;
  rep.tol = tol;

  for (bool tilde : {false, true}) {
    KernelCheck c = make_check(tilde ? "Omega-tilde well-defined" : "Omega well-defined", 0.0);
    for (int k = 0; k < p; ++k)
      for (int l = tilde ? 0 : k; l < (tilde ? 2 * p : k + p); ++l) {
        OmegaAudit audit;
        const XiPolynomial x = tilde ? omega_tilde(p, k, l, MConvention::Uniform, &audit)
                                     : omega(p, k, l, MConvention::Uniform, &audit);
        ++c.cases;
        const bool bad = audit.zero_inversions > 0 || x.degree() >= p || static_cast<int>(x.coeffs.size()) != p;
        c.max_deviation = std::max(c.max_deviation, bad ? 1.0 : 0.0);
      }
    close(c);
    rep.checks.push_back(c);
  }

  {
    KernelCheck c = make_check("kernel_Q Grassmann degrees", 0.0);
    for (int k = 0; k < p; ++k)
      for (int l = 0; l < p; ++l) {
        const KernelQ q = kernel_Q(p, k, l);
        ++c.cases;
        int bad = q.terms[0].s - q.terms[1].s == p ? 0 : 1;
        for (const auto& t : q.terms) {
          // eta-^p vanishes, so only the l = k tilde prefactor may be zero
          if (t.prefactor.is_zero() != (t.tilde && k == l)) ++bad;
          for (const auto& [mono, coef] : t.grassmann().terms())
            if (!mono.is_grassmann() || mono.n > p - 1 || mono.m > p - 1 || mono.n + mono.m > 2 * (p - 1)) ++bad;
        }
        c.max_deviation = std::max(c.max_deviation, static_cast<double>(bad));
      }
    close(c);
    rep.checks.push_back(c);
  }

  {
    KernelCheck c = make_check("polar round trip", 1e-14);
    const double vals[] = {0.05, 0.5, 1.0, std::numbers::e / 2, 2.5, 7.0};
    for (double a : vals)
      for (double b : vals)
        for (int sa : {1, -1})
          for (int sb : {1, -1}) {
            const double zp = sa * a, zm = sb * b;
            const auto back = polar_inverse(polar_map(zp, zm));
            ++c.cases;
            c.max_deviation = std::max(c.max_deviation, std::abs(back[0] - zp) / std::max(1.0, std::abs(zp)));
            c.max_deviation = std::max(c.max_deviation, std::abs(back[1] - zm) / std::max(1.0, std::abs(zm)));
          }
    close(c);
    rep.checks.push_back(c);
  }

  KernelCheck oracle = make_check("half-order oracles agree", 1e-12);
  KernelCheck hankel = make_check("K_s = Hankel closed form (Quads 1, 3)", 1e-6);
  KernelCheck macdonald = make_check("K_s = Macdonald closed form (Quads 2, 4)", 1e-6);
  KernelCheck stability = make_check("K_s step-halving stability", tol);
  const double r = 1.3;
  for (int quadrant = 1; quadrant <= 4; ++quadrant)
    for (double rr : {0.5, 1.0, 2.0})
      for (double o : {0.5, -0.5})
        for (double beta : {0.0, 0.7})
          for (int s : {0, 1, p - 1}) {
            KernelParams kp;
            kp.p = p;
            kp.s = s;
            kp.r = r;
            kp.lambda_coord = 0.3;
            kp.nu = cd(0.2, 0.35);
            kp.mu = kp.nu + static_cast<double>(s) / p + o;
            const auto z = quadrant_point(quadrant, rr / r, beta);
            const KsResult num = ks_quadrature(kp, z[0], z[1], tol);
            const cd exact = ks_closed_form(kp, z[0], z[1]);
            KernelCheck& target = ks_bessel_kind(quadrant) == BesselKind::Macdonald ? macdonald : hankel;
            ++target.cases;
            target.max_deviation = std::max(target.max_deviation, std::abs(num.value - exact));
            ++stability.cases;
            stability.max_deviation = std::max(stability.max_deviation, num.error);
            double& pd = rep.printed_deviation[quadrant - 1];
            pd = std::max(pd, std::abs(num.value - ks_closed_form_printed(kp, z[0], z[1])));

            ++oracle.cases;
            const double dh = std::abs(boost::math::cyl_hankel_1(o, rr) - hankel1_half(o, rr));
            const double dk = std::abs(boost::math::cyl_bessel_k(o, rr) - macdonald_half(rr));
            oracle.max_deviation = std::max({oracle.max_deviation, dh, dk});
          }
  for (KernelCheck* c : {&oracle, &hankel, &macdonald, &stability}) {
    close(*c);
    rep.checks.push_back(*c);
  }

  {
    KernelCheck c = make_check("K_s substitution symmetry", 1e-8);
    KernelParams kp;
    kp.p = p;
    kp.nu = kp.mu = cd(0.1, 0.2);
    for (int quadrant = 1; quadrant <= 4; ++quadrant)
      for (double beta : {0.0, 0.4, -1.1}) {
        const auto z = quadrant_point(quadrant, 1.5, beta);
        const cd a = ks_quadrature(kp, z[0], z[1], tol).value, b = ks_quadrature(kp, z[1], z[0], tol).value;
        ++c.cases;
        c.max_deviation = std::max(c.max_deviation, std::abs(a - b));
      }
    close(c);
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace qfs
