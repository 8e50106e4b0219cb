#include "qfs/duality.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "qfs/errors.hpp"
#include "qfs/linalg.hpp"
#include "qfs/qcomb.hpp"

namespace qfs {

namespace {

int wrap(int a, int p) { return ((a % p) + p) % p; }

CycloScalar i_power(int p, int e) {
  static const int re[] = {1, 0, -1, 0};
  static const int im[] = {0, 1, 0, -1};
  const int r = wrap(e, 4);
  return CycloScalar::gauss(p, {re[r], im[r]});
}

Rational fact(int n) {
  mpz_class f = 1;
  for (int j = 2; j <= n; ++j) f *= j;
  return Rational(f);
}

// Printed: i^(n+m) q^((n-m)/2 - nm) [n]! [m]!; Consistent: (-1)^n i^(n+m) q^((n-m)/2 + nm) [n]! [m]!
CycloScalar eta_weight(int p, int n, int m, PairingWeight w) {
  const long long nm = static_cast<long long>(n) * m;
  const bool consistent = w == PairingWeight::Consistent;
  return i_power(p, consistent ? m - n : n + m) * q_half_power(p, n - m) * CycloScalar::q_power(p, consistent ? nm : -nm) *
         q_factorial(p, n) * q_factorial(p, m);
}

// i^(t+s+l) t! s! l!; the consistent weight pairs P+- like E+-^p and H against the charge grading,
// giving i^(pt) (-i)^(ps) (-i)^l
CycloScalar central_weight(int p, int t, int s, int l, PairingWeight w) {
  const CycloScalar f = CycloScalar::rational(p, fact(t) * fact(s) * fact(l));
  if (w == PairingWeight::Consistent) return i_power(p, p * t - p * s - l) * f;
  return i_power(p, t + s + l) * f;
}

}  // namespace

std::string to_string(PairingConvention c) { return c == PairingConvention::Straight ? "straight" : "flipped"; }

CycloScalar pair_basis(int p, const UfsMonomial& phi, const ZetaMonomial& a, PairingWeight w) {
  check_order(p);
  if (phi.n != a.n || phi.m != a.m || phi.r != a.t || phi.s != a.s || phi.l != a.l) return CycloScalar::zero(p);
  if (wrap(phi.k + phi.n + phi.m, p) != wrap(a.k, p)) return CycloScalar::zero(p);
  return eta_weight(p, phi.n, phi.m, w) * central_weight(p, phi.r, phi.s, phi.l, w);
}

CycloScalar pair(int p, const UfsMonomial& phi, const AfsMonomial& a, PairingWeight w) {
  if (phi.n != a.n || phi.m != a.m || phi.r != a.t || phi.s != a.s || phi.l < a.l) return CycloScalar::zero(p);
  // delta^d = sum_k q^(dk) zeta(k); only zeta(k + n + m) survives
  const long long kk = phi.k + phi.n + phi.m;
  CycloScalar c = eta_weight(p, phi.n, phi.m, w) * CycloScalar::q_power(p, static_cast<long long>(a.d) * kk) *
                  central_weight(p, phi.r, phi.s, phi.l, w);
  // <H^l, lam^l' exp(u lam/p)> picks the lam^(l-l') term of the exponential
  const int j = phi.l - a.l;
  if (j > 0) {
    if (a.u == 0) return CycloScalar::zero(p);
    Rational x(a.u, p);
    x.canonicalize();
    Rational pw = 1;
    for (int e = 0; e < j; ++e) pw *= x;
    c *= CycloScalar::rational(p, pw / fact(j));
  }
  return c;
}

CycloScalar pair(const UfsElement& x, const AfsElement& a, PairingWeight w) {
  if (x.order() && a.order() && x.order() != a.order()) throw IncompatibleModulus(x.order(), a.order());
  const int p = x.order() ? x.order() : a.order();
  CycloScalar acc = CycloScalar::zero(p);
  for (const auto& [phi, cx] : x.terms())
    for (const auto& [mono, ca] : a.terms()) {
      const CycloScalar v = pair(p, phi, mono, w);
      if (!v.is_zero()) acc += v * cx * ca;
    }
  return acc;
}

AfsElement zeta_form(int p, const ZetaMonomial& a) {
  AfsMonomial head;
  head.n = a.n;
  head.m = a.m;
  AfsMonomial tail;
  tail.t = a.t;
  tail.s = a.s;
  tail.l = a.l;
  return afs_mul(afs_mul(afs_mono(p, head), zeta(p, a.k)), afs_mono(p, tail));
}

std::string to_string(PairingWeight w) { return w == PairingWeight::Printed ? "printed" : "consistent"; }

bool PairingReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.diagnostic && !c.passed) return false;
  return true;
}

namespace {

int degree(const AfsMonomial& a) { return a.n + a.m + a.d + a.t + a.s + a.l + std::abs(a.u); }

std::vector<UfsMonomial> ufs_basis(int p, int max_degree) {
  std::vector<UfsMonomial> out;
  const int D = max_degree;
  for (int n = 0; n < p && n <= D; ++n)
    for (int m = 0; m < p && n + m <= D; ++m)
      for (int k = 0; k < p && n + m + k <= D; ++k)
        for (int r = 0; n + m + k + r <= D; ++r)
          for (int s = 0; n + m + k + r + s <= D; ++s)
            for (int l = 0; n + m + k + r + s + l <= D; ++l) out.push_back({n, m, k, r, s, l});
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.degree() < b.degree(); });
  return out;
}

std::vector<AfsMonomial> afs_basis(int p, int max_degree) {
  std::vector<AfsMonomial> out;
  const int D = max_degree;
  for (int n = 0; n < p && n <= D; ++n)
    for (int m = 0; m < p && n + m <= D; ++m)
      for (int d = 0; d < p && n + m + d <= D; ++d)
        for (int t = 0; n + m + d + t <= D; ++t)
          for (int s = 0; n + m + d + t + s <= D; ++s)
            for (int l = 0; n + m + d + t + s + l <= D; ++l)
              for (int u = -1; u <= 1; ++u)
                if (n + m + d + t + s + l + std::abs(u) <= D) out.push_back({n, m, d, t, s, l, u});
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return degree(a) < degree(b); });
  return out;
}

std::string show(const UfsMonomial& x) { return to_string(x); }
std::string show(const AfsMonomial& a) { return to_string(a); }

// first failure wins; bases are degree sorted so it is a minimal instance
void record(PairingCheck& c, bool ok, const std::function<std::string()>& describe) {
  ++c.cases;
  if (ok || !c.passed) {
    if (!ok) c.passed = false;
    return;
  }
  c.passed = false;
  c.counterexample = describe();
}

std::string mismatch(const CycloScalar& lhs, const CycloScalar& rhs) {
  return "lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string();
}

}  // namespace

PairingReport verify_pairing_axioms(int p, int max_degree, PairingConvention convention, PairingWeight weight,
                                    const AfsConventions& conv) {
  check_order(p);
  PairingReport report;
  report.convention = convention;
  report.weight = weight;
  report.max_degree = max_degree;
  const bool flipped = convention == PairingConvention::Flipped;

  const std::vector<UfsMonomial> ub = ufs_basis(p, max_degree);
  const std::vector<AfsMonomial> ab = afs_basis(p, max_degree);
  std::map<AfsMonomial, AfsTensor> adelta;
  for (const auto& a : ab) adelta.emplace(a, afs_coproduct(p, a, conv));
  std::map<UfsMonomial, UfsTensor> udelta;
  for (const auto& x : ub) udelta.emplace(x, ufs_coproduct(p, x));

  auto pr = [&](const UfsMonomial& x, const AfsMonomial& a) { return pair(p, x, a, weight); };

  PairingCheck prod;
  prod.identity = "<xy, a> = <x (x) y, Delta a>";
  for (const auto& x : ub)
    for (const auto& y : ub) {
      if (x.degree() + y.degree() > max_degree) continue;
      const UfsElement xy = ufs_mul(ufs_mono(p, x), ufs_mono(p, y));
      for (const auto& a : ab) {
        const CycloScalar lhs = pair(xy, AfsElement::basis(p, a), weight);
        CycloScalar rhs = CycloScalar::zero(p);
        for (const auto& [k, c] : adelta.at(a).terms()) {
          const CycloScalar v = flipped ? pr(y, k[0]) : pr(x, k[0]);
          if (v.is_zero()) continue;
          rhs += v * (flipped ? pr(x, k[1]) : pr(y, k[1])) * c;
        }
        record(prod, lhs == rhs, [&] { return "x = " + show(x) + ", y = " + show(y) + ", a = " + show(a) + ": " + mismatch(lhs, rhs); });
      }
    }
  report.checks.push_back(prod);

  PairingCheck coprod;
  coprod.identity = "<x, ab> = <Delta x, a (x) b>";
  for (const auto& x : ub) {
    const UfsTensor& dx = udelta.at(x);
    for (const auto& a : ab)
      for (const auto& b : ab) {
        if (degree(a) + degree(b) > max_degree) continue;
        const CycloScalar lhs = pair(ufs_mono(p, x), afs_mul(p, a, b), weight);
        CycloScalar rhs = CycloScalar::zero(p);
        for (const auto& [k, c] : dx.terms()) {
          const CycloScalar v = flipped ? pr(k[1], a) : pr(k[0], a);
          if (v.is_zero()) continue;
          rhs += v * (flipped ? pr(k[0], b) : pr(k[1], b)) * c;
        }
        record(coprod, lhs == rhs, [&] { return "x = " + show(x) + ", a = " + show(a) + ", b = " + show(b) + ": " + mismatch(lhs, rhs); });
      }
  }
  report.checks.push_back(coprod);

  PairingCheck anti;
  anti.identity = "<S x, a> = <x, S a>";
  PairingCheck star;
  star.identity = "<x*, a> = conj <x, S(a)*>";
  star.diagnostic = true;
  for (const auto& x : ub) {
    const UfsElement X = ufs_mono(p, x);
    const UfsElement sx = ufs_antipode(X);
    const UfsElement xs = ufs_star(X);
    for (const auto& a : ab) {
      const AfsElement A = AfsElement::basis(p, a);
      const AfsElement sa = afs_antipode(A, conv);
      const CycloScalar lhs = pair(sx, A, weight), rhs = pair(X, sa, weight);
      record(anti, lhs == rhs, [&] { return "x = " + show(x) + ", a = " + show(a) + ": " + mismatch(lhs, rhs); });
      const CycloScalar sl = pair(xs, A, weight), sr = pair(X, afs_star(sa), weight).conj();
      record(star, sl == sr, [&] { return "x = " + show(x) + ", a = " + show(a) + ": " + mismatch(sl, sr); });
    }
  }
  report.checks.push_back(anti);

  PairingCheck ucounit;
  ucounit.identity = "<x, 1> = eps(x)";
  for (const auto& x : ub) {
    const CycloScalar lhs = pair(p, x, AfsMonomial{}, weight), rhs = ufs_counit(p, x);
    record(ucounit, lhs == rhs, [&] { return "x = " + show(x) + ": " + mismatch(lhs, rhs); });
  }
  report.checks.push_back(ucounit);

  PairingCheck acounit;
  acounit.identity = "<1, a> = eps(a)";
  for (const auto& a : ab) {
    const CycloScalar lhs = pair(p, UfsMonomial{}, a, weight), rhs = afs_counit(p, a);
    record(acounit, lhs == rhs, [&] { return "a = " + show(a) + ": " + mismatch(lhs, rhs); });
  }
  report.checks.push_back(acounit);
  report.checks.push_back(star);
  return report;
}

int finite_sector_rank(int p) {
  check_order(p);
  ScalarMatrix g;
  for (int n = 0; n < p; ++n)
    for (int m = 0; m < p; ++m)
      for (int k = 0; k < p; ++k) {
        std::vector<CycloScalar> row;
        for (int n2 = 0; n2 < p; ++n2)
          for (int m2 = 0; m2 < p; ++m2)
            for (int k2 = 0; k2 < p; ++k2)
              row.push_back(pair_basis(p, UfsMonomial{n, m, k, 0, 0, 0}, ZetaMonomial{n2, m2, k2, 0, 0, 0}));
        g.push_back(std::move(row));
      }
  return exact_rank(std::move(g));
}

}  // namespace qfs
