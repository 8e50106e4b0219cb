#include "qfs/superspace.hpp"

#include <random>
#include <sstream>

#include "qfs/errors.hpp"
#include "qfs/qcomb.hpp"

namespace qfs {

namespace {

CycloScalar qp(int p, long long e) { return CycloScalar::q_power(p, e); }
CycloScalar qh(int p, long long twice) { return q_half_power(p, twice); }
CycloScalar ci(int p) { return CycloScalar::imag(p); }
CycloScalar num(int p, long long n) { return CycloScalar::integer(p, n); }

/// 1 + Q + ... + Q^(n-1) with Q = q^base.
CycloScalar geometric(int p, int base, int n) {
  CycloScalar acc = CycloScalar::zero(p);
  for (int j = 0; j < n; ++j) acc += qp(p, static_cast<long long>(base) * j);
  return acc;
}

/// d/dz of z^a exp(-w z^2) as (coefficient, exponent) pairs.
template <class Fn>
void dz_terms(int a, int w, Fn&& emit) {
  if (a > 0) emit(a, a - 1);
  if (w > 0) emit(-2 * w, a + 1);
}

}  // namespace

std::string to_string(const ZMonomial& z) {
  std::ostringstream os;
  os << "z+^" << z.a << " z-^" << z.b;
  if (z.w) os << " g^" << z.w;
  return os.str();
}

std::string to_string(const SuperMonomial& mono) {
  return to_string(mono.z) + " eta+^" + std::to_string(mono.n) + " eta-^" + std::to_string(mono.m);
}

std::string to_string(const SuperField& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [mono, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*[" + to_string(mono) + "]";
  }
  return out;
}

SuperField sf_unit(int p) { return SuperField::basis(p, SuperMonomial{}); }

SuperField sf_eta(int p, int n, int m) {
  if (n < 0 || m < 0) throw IndexOutOfRange("negative eta power");
  if (n >= p || m >= p) return SuperField(p);
  return SuperField::basis(p, SuperMonomial{n, m, {}});
}

SuperField sf_mono(int p, const SuperMonomial& mono, const CycloScalar& c) {
  if (mono.n < 0 || mono.m < 0 || mono.z.w < 0 || mono.z.a < 0 || mono.z.b < 0)
    throw IndexOutOfRange("negative exponent in superspace monomial");
  if (mono.n >= p || mono.m >= p) return SuperField(p);
  return SuperField::term(p, mono, c);
}

SuperField sf_mono(int p, const SuperMonomial& mono) { return sf_mono(p, mono, CycloScalar::one(p)); }

std::map<std::pair<int, int>, ZFunction> components(const SuperField& x) {
  std::map<std::pair<int, int>, ZFunction> out;
  for (const auto& [mono, c] : x.terms()) {
    auto [it, inserted] = out.try_emplace({mono.n, mono.m}, ZFunction(x.order()));
    it->second.add_term(mono.z, c);
  }
  return out;
}

SuperField from_components(int p, const std::map<std::pair<int, int>, ZFunction>& comps) {
  SuperField out(p);
  for (const auto& [nm, f] : comps)
    for (const auto& [z, c] : f.terms()) out += sf_mono(p, SuperMonomial{nm.first, nm.second, z}, c);
  return out;
}

SuperField sf_mul(const SuperField& x, const SuperField& y) {
  const int p = x.order() ? x.order() : y.order();
  SuperField out(p);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      const int n = a.n + b.n, m = a.m + b.m;
      if (n >= p || m >= p) continue;
      // eta-^m1 eta+^n2 = q^(2 m1 n2) eta+^n2 eta-^m1
      const ZMonomial z{a.z.w + b.z.w, a.z.a + b.z.a, a.z.b + b.z.b};
      out.add_term(SuperMonomial{n, m, z}, ca * cb * qp(p, 2LL * a.m * b.n));
    }
  return out;
}

SuperField sf_star(const SuperField& x) {
  const int p = x.order();
  SuperField out(p);
  // (eta+^n eta-^m)* = eta-^m eta+^n = q^(2nm) eta+^n eta-^m
  for (const auto& [mono, c] : x.terms()) out.add_term(mono, c.conj() * qp(p, 2LL * mono.n * mono.m));
  return out;
}

SuperField sf_dz(int sign, const SuperField& x) {
  const int p = x.order();
  SuperField out(p);
  for (const auto& [mono, c] : x.terms()) {
    const int e = sign > 0 ? mono.z.a : mono.z.b;
    dz_terms(e, mono.z.w, [&](int coeff, int e2) {
      SuperMonomial y = mono;
      (sign > 0 ? y.z.a : y.z.b) = e2;
      out.add_term(y, c * num(p, coeff));
    });
  }
  return out;
}

AfsElement to_afs(const SuperField& x) {
  const int p = x.order();
  AfsElement out(p);
  for (const auto& [mono, c] : x.terms()) {
    if (mono.z != ZMonomial{}) throw NonGrassmannInput();
    // eta+^n eta-^m = q^(-2nm) eta-^m eta+^n
    out.add_term(AfsMonomial{mono.m, mono.n, 0, 0, 0, 0, 0}, c * qp(p, -2LL * mono.n * mono.m));
  }
  return out;
}

SuperField from_afs(const AfsElement& x) {
  const int p = x.order();
  SuperField out(p);
  for (const auto& [mono, c] : x.terms()) {
    if (!mono.is_grassmann() || mono.d != 0) throw NonGrassmannInput();
    out.add_term(SuperMonomial{mono.m, mono.n, {}}, c * qp(p, 2LL * mono.n * mono.m));
  }
  return out;
}

PiScalar& PiScalar::operator+=(const PiScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    rational_part = o.rational_part + rational_part;
    pi_power = o.pi_power;
    return *this;
  }
  if (pi_power != o.pi_power) throw DomainError("sum of different powers of pi");
  rational_part += o.rational_part;
  return *this;
}

bool operator==(const PiScalar& a, const PiScalar& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.pi_power == b.pi_power && a.rational_part == b.rational_part;
}

std::string to_string(const PiScalar& v) {
  if (v.is_zero()) return "0";
  std::string s = "(" + v.rational_part.to_string() + ")";
  if (v.pi_power == 1) s += "*pi";
  if (v.pi_power > 1) s += "*pi^" + std::to_string(v.pi_power);
  return s;
}

std::string to_string(ActionTable t) { return t == ActionTable::Printed ? "printed" : "corrected"; }
std::string to_string(Realization r) { return r == Realization::Printed ? "printed" : "corrected"; }

ActionCoefficients action_coefficients(int p, ActionTable table) {
  check_order(p);
  const CycloScalar i = ci(p);
  const CycloScalar inv_fact = inv_q_factorial(p, p - 1);
  ActionCoefficients c;
  if (table == ActionTable::Printed) {
    c.a1 = i * qh(p, 1);
    // i q^(1/2 - n) [2n] eta- eta+^n at n = 1, reordered to eta+ eta-
    c.b1 = i * qh(p, 3) * q_number(p, 2);
    c.c1 = -i * qh(p, -1);
    c.d1 = i * qh(p, -1);
    c.f_plus = i * qh(p, 1) * inv_fact;
    c.f_minus = i * qh(p, -1) * inv_fact;
    c.p_plus = i;
    c.p_minus = i;
    c.h_sign = 1;
    return c;
  }
  c.a1 = i * qh(p, 1);
  c.c1 = i * qh(p, 1);
  c.b1 = -(CycloScalar::one(p) + qp(p, 2)) * c.c1;
  c.d1 = -c.c1.inverse();
  c.f_plus = i * qh(p, 1) * inv_fact;
  c.f_minus = i * qh(p, -1) * inv_fact;
  // R(E+-)^p f = i^p df/dz+- with these tails
  c.p_plus = i.pow(p);
  c.p_minus = i.pow(p);
  c.h_sign = -1;
  return c;
}

SuperField rop_gen(UfsGen g, const SuperField& x, ActionTable table) {
  return rop_gen(g, x, action_coefficients(x.order(), table));
}

SuperField rop_gen(UfsGen g, const SuperField& x, const ActionCoefficients& co) {
  const int p = x.order();
  SuperField out(p);
  const CycloScalar i = ci(p);
  const CycloScalar inv_q2 = q_number(p, 2).inverse();
  for (const auto& [mono, c] : x.terms()) {
    const int n = mono.n, m = mono.m;
    auto emit = [&](int n2, int m2, const ZMonomial& z, const CycloScalar& v) {
      if (n2 < 0 || m2 < 0 || n2 >= p || m2 >= p || v.is_zero()) return;
      out.add_term(SuperMonomial{n2, m2, z}, c * v);
    };
    auto emit_dz = [&](int sign, int n2, int m2, const CycloScalar& v) {
      if (n2 >= p || m2 >= p) return;
      const int e = sign > 0 ? mono.z.a : mono.z.b;
      dz_terms(e, mono.z.w, [&](int coeff, int e2) {
        ZMonomial z = mono.z;
        (sign > 0 ? z.a : z.b) = e2;
        emit(n2, m2, z, v * num(p, coeff));
      });
    };
    switch (g) {
      case UfsGen::K: emit(n, m, mono.z, qp(p, n - m)); break;
      case UfsGen::Kinv: emit(n, m, mono.z, qp(p, m - n)); break;
      case UfsGen::H: {
        const CycloScalar h = i * num(p, co.h_sign);
        emit(n, m, mono.z, h * CycloScalar::rational(p, Rational(n - m, p)));
        // z+ d/dz+ - z- d/dz-
        emit(n, m, mono.z, h * num(p, mono.z.a - mono.z.b));
        if (mono.z.w) {
          ZMonomial z = mono.z;
          z.a += 2;
          emit(n, m, z, h * num(p, -2 * mono.z.w));
          z = mono.z;
          z.b += 2;
          emit(n, m, z, h * num(p, 2 * mono.z.w));
        }
        break;
      }
      case UfsGen::Pp: emit_dz(+1, n, m, co.p_plus); break;
      case UfsGen::Pm: emit_dz(-1, n, m, co.p_minus); break;
      case UfsGen::Ep: {
        // R(E+)(f Y) = R(E+)f R(K)Y + f R(E+)Y, Y = eta+^n eta-^m
        if (n == 0) emit_dz(+1, p - 1, m, co.f_plus * qp(p, -m));
        if (n > 0) emit(n - 1, m, mono.z, co.a1 * q_number(p, n) * qp(p, -m));
        const CycloScalar bn = co.b1 * qp(p, n - 1) * q_number(p, 2LL * n) * inv_q2;
        emit(n, m + 1, mono.z, bn * qp(p, -m) + qp(p, -n) * co.c1 * q_number(p, m));
        break;
      }
      case UfsGen::Em: {
        if (m == 0) emit_dz(-1, n, p - 1, co.f_minus * qp(p, -n));
        if (m > 0) emit(n, m - 1, mono.z, co.d1 * q_number(p, m) * qp(p, -n));
        break;
      }
    }
  }
  return out;
}

SuperField rop_extend(UfsGen g, const SuperField& x, const SuperField& y, ActionTable table) {
  const ActionCoefficients co = action_coefficients(x.order() ? x.order() : y.order(), table);
  auto r = [&](UfsGen h, const SuperField& f) { return rop_gen(h, f, co); };
  switch (g) {
    case UfsGen::Ep:
    case UfsGen::Em:
      return sf_mul(r(g, x), r(UfsGen::K, y)) + sf_mul(r(UfsGen::Kinv, x), r(g, y));
    case UfsGen::K:
    case UfsGen::Kinv:
      return sf_mul(r(g, x), r(g, y));
    case UfsGen::H:
    case UfsGen::Pp:
    case UfsGen::Pm:
      return sf_mul(r(g, x), y) + sf_mul(x, r(g, y));
  }
  throw UnknownGenerator("?");
}

SuperField rop_apply(const UfsElement& x, const SuperField& field, ActionTable table) {
  return rop_apply(x, field, action_coefficients(field.order(), table));
}

SuperField rop_apply(const UfsElement& x, const SuperField& field, const ActionCoefficients& co) {
  const int p = field.order();
  SuperField out(p);
  for (const auto& [mono, c] : x.terms()) {
    // R(E-^n E+^m K^k P+^r P-^s H^l) = R(H)^l R(P-)^s R(P+)^r R(K)^k R(E+)^m R(E-)^n, so E- acts first
    SuperField y = field;
    auto rep = [&](UfsGen g, int e) {
      for (int j = 0; j < e && !y.is_zero(); ++j) y = rop_gen(g, y, co);
    };
    rep(UfsGen::Em, mono.n);
    rep(UfsGen::Ep, mono.m);
    rep(UfsGen::K, mono.k);
    rep(UfsGen::Pp, mono.r);
    rep(UfsGen::Pm, mono.s);
    rep(UfsGen::H, mono.l);
    out += y * c;
  }
  return out;
}

SuperField qderiv(int sign, const SuperField& x, bool inverse_base, QDerivBraid braid) {
  const int p = x.order();
  const int base = inverse_base ? -1 : 1;
  // D+ meets the m right factors eta-hat- on its way to eta+^n
  const int braid_exp = braid == QDerivBraid::Graded ? -2 : 2 * base;
  SuperField out(p);
  for (const auto& [mono, c] : x.terms()) {
    SuperMonomial y = mono;
    if (sign > 0) {
      if (mono.n == 0) continue;
      --y.n;
      out.add_term(y, c * geometric(p, base, mono.n) * qp(p, static_cast<long long>(braid_exp) * mono.m));
    } else {
      if (mono.m == 0) continue;
      --y.m;
      out.add_term(y, c * geometric(p, base, mono.m));
    }
  }
  return out;
}

SuperField eta_hat(int sign, const SuperField& x) {
  return sf_mul(x, sign > 0 ? sf_eta(x.order(), 1, 0) : sf_eta(x.order(), 0, 1));
}

SuperField dilat(int sign, bool inverse, const SuperField& x, QDerivBraid braid) {
  const int p = x.order();
  const CycloScalar one = CycloScalar::one(p);
  const CycloScalar factor = one - qp(p, inverse ? -1 : 1);
  return x - eta_hat(sign, qderiv(sign, x, inverse, braid)) * factor;
}

SuperField diff_real(UfsGen g, const SuperField& x, Realization r) {
  const int p = x.order();
  const CycloScalar one = CycloScalar::one(p), i = ci(p);
  const CycloScalar q = qp(p, 1);
  const QDerivBraid braid = r == Realization::Printed ? QDerivBraid::Printed : QDerivBraid::Graded;
  auto T = [&](int sign, bool inv, const SuperField& f) { return dilat(sign, inv, f, braid); };
  auto D = [&](int sign, const SuperField& f) {
    return qderiv(sign, f, true, braid) + qderiv(sign, f, false, braid) * q;
  };
  auto left = [&](int n, int m, const SuperField& f) { return sf_mul(sf_eta(p, n, m), f); };
  const CycloScalar inv_fact = inv_q_factorial(p, p - 1);
  const CycloScalar one_plus_q = (one + q).inverse();
  const CycloScalar q_diff = (q - q.inverse()).inverse();
  const CycloScalar q2_diff = (qp(p, 2) - qp(p, -2)).inverse();

  switch (g) {
    case UfsGen::K: return T(-1, true, T(+1, false, x));
    case UfsGen::Kinv: return T(-1, false, T(+1, true, x));
    case UfsGen::Ep: {
      const SuperField tp = T(+1, false, x), tpi = T(+1, true, x);
      const SuperField d_part = T(-1, false, D(+1, x));
      const SuperField a = eta_hat(-1, T(-1, true, T(+1, false, T(+1, false, tp))));
      const SuperField b = eta_hat(-1, T(-1, true, tpi));
      const SuperField c = eta_hat(-1, T(-1, false, tpi));
      const SuperField tail = left(p - 1, 0, sf_dz(+1, x));
      if (r == Realization::Printed) {
        return d_part * (i * qh(p, 1) * one_plus_q) + a * (i * qh(p, 1) * q2_diff) + b * (i * qh(p, -3) * q2_diff) -
               c * (i * qh(p, -1) * q_diff) + tail * (i * qh(p, 1) * inv_fact);
      }
      const CycloScalar pre = i * qh(p, 1);
      return d_part * (pre * one_plus_q) - (a - c) * (pre * q_diff) + T(-1, true, tail) * (pre * inv_fact);
    }
    case UfsGen::Em: {
      const SuperField d_part = T(+1, true, D(-1, x));
      const SuperField tail = left(0, p - 1, sf_dz(-1, x));
      if (r == Realization::Printed)
        return d_part * (i * qh(p, -1) * one_plus_q) + tail * (i * qh(p, -1) * inv_fact);
      const CycloScalar pre = i * qh(p, -1);
      return d_part * (pre * one_plus_q) + T(+1, false, tail) * (pre * inv_fact);
    }
    default: throw UnknownGenerator(to_string(g) + " has no differential realization");
  }
}

PiScalar invariant_integral(const SuperField& x) {
  const int p = x.order();
  const CycloScalar top = grassmann_integral(to_afs(sf_eta(p, p - 1, p - 1)));
  PiScalar out{CycloScalar::zero(p), 0};
  for (const auto& [mono, c] : x.terms()) {
    if (mono.n != p - 1 || mono.m != p - 1) continue;
    const ZMonomial& z = mono.z;
    if (z.w == 0) throw DivergentIntegral("undamped top component " + to_string(mono));
    if (z.a % 2 || z.b % 2) continue;
    // int z^(2k) e^(-w z^2) dz = (2k-1)!! / (2w)^k * sqrt(pi/w)
    Rational v(1, z.w);
    for (int j = 1; j < z.a; j += 2) v *= Rational(j, 2 * z.w);
    for (int j = 1; j < z.b; j += 2) v *= Rational(j, 2 * z.w);
    out += PiScalar{c * top * CycloScalar::rational(p, v), 1};
  }
  return out;
}

PiScalar hermitian_form(const SuperField& x, const SuperField& y) { return invariant_integral(sf_mul(x, sf_star(y))); }

PiScalar action(const SuperField& phi, const UfsElement& c, ActionTable table) {
  return invariant_integral(sf_mul(sf_star(phi), rop_apply(c, phi, table)));
}

SuperField random_superfield(int p, std::uint64_t seed, int terms, int max_poly) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> eta(0, p - 1), poly(0, max_poly), coef(-3, 3), qe(0, p - 1), wt(1, 2);
  SuperField out(p);
  for (int j = 0; j < terms; ++j) {
    const SuperMonomial mono{eta(rng), eta(rng), {wt(rng), poly(rng), poly(rng)}};
    const CycloScalar c = CycloScalar::gauss(p, {coef(rng), coef(rng)}) * qp(p, qe(rng));
    out += SuperField::term(p, mono, c);
  }
  return out;
}

UfsElement random_ufs(int p, std::uint64_t seed, int max_degree, int terms) {
  std::mt19937_64 rng(seed);
  static constexpr UfsGen gens[] = {UfsGen::Em, UfsGen::Ep, UfsGen::K, UfsGen::Kinv, UfsGen::H, UfsGen::Pp, UfsGen::Pm};
  std::uniform_int_distribution<int> len(0, max_degree), pick(0, 6), coef(-2, 2);
  UfsElement out(p);
  for (int j = 0; j < terms; ++j) {
    UfsWord w;
    for (int k = len(rng); k > 0; --k) w.push_back({gens[pick(rng)], 1});
    out += ufs_normalize(p, w) * CycloScalar::gauss(p, {coef(rng), 1 + coef(rng)});
  }
  return out;
}

bool SuperReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return !checks.empty();
}

const SuperCheck* SuperReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

SuperCheck named(const std::string& name) {
  SuperCheck c;
  c.name = name;
  return c;
}

void record(SuperCheck& c, bool ok, const std::string& what) {
  ++c.cases;
  if (ok) return;
  if (c.failures++ == 0) c.counterexample = what;
}

constexpr UfsGen kGens[] = {UfsGen::Ep, UfsGen::Em, UfsGen::K, UfsGen::Kinv, UfsGen::H, UfsGen::Pp, UfsGen::Pm};

}  // namespace

SuperReport verify_superspace(int p, int instances, std::uint64_t seed, ActionTable table, Realization realization) {
  check_order(p);
  const ActionCoefficients co = action_coefficients(p, table);
  SuperReport rep;
  rep.p = p;
  rep.table = table;
  rep.realization = realization;
  std::mt19937_64 rng(seed);
  auto field = [&] { return random_superfield(p, rng(), 4, 2); };

  SuperCheck anti = named("R(xy) = R(y) R(x)"), power = named("R(E+-)^p = R(P+-)"), leib = named("twisted Leibniz");
  SuperCheck diff = named("diff_real = rop_gen"), qalg = named("q-derivative algebra"), dil = named("dilatations");
  SuperCheck star = named("(R(E+-)X, Y)_E = (X, R(E+-)Y)_E"), herm = named("(Y, X)_E = conj (X, Y)_E");

  for (int t = 0; t < instances; ++t) {
    const SuperField x = field(), y = field();
    const UfsElement a = random_ufs(p, rng()), b = random_ufs(p, rng());
    record(anti, rop_apply(ufs_mul(a, b), x, co) == rop_apply(b, rop_apply(a, x, co), co),
           "x = " + to_string(a) + ", y = " + to_string(b) + ", X = " + to_string(x));
    for (UfsGen g : kGens) {
      const SuperField lhs = rop_gen(g, sf_mul(x, y), co);
      SuperField rhs(p);
      switch (g) {
        case UfsGen::Ep:
        case UfsGen::Em:
          rhs = sf_mul(rop_gen(g, x, co), rop_gen(UfsGen::K, y, co)) +
                sf_mul(rop_gen(UfsGen::Kinv, x, co), rop_gen(g, y, co));
          break;
        case UfsGen::K:
        case UfsGen::Kinv: rhs = sf_mul(rop_gen(g, x, co), rop_gen(g, y, co)); break;
        default: rhs = sf_mul(rop_gen(g, x, co), y) + sf_mul(x, rop_gen(g, y, co)); break;
      }
      record(leib, lhs == rhs, to_string(g) + " on X = " + to_string(x) + ", Y = " + to_string(y));
    }
    for (int sign : {+1, -1}) {
      const UfsGen e = sign > 0 ? UfsGen::Ep : UfsGen::Em, pg = sign > 0 ? UfsGen::Pp : UfsGen::Pm;
      SuperField z = x;
      for (int j = 0; j < p; ++j) z = rop_gen(e, z, co);
      record(power, z == rop_gen(pg, x, co), to_string(e) + " on X = " + to_string(x));
      record(star, hermitian_form(rop_gen(e, x, co), y) == hermitian_form(x, rop_gen(e, y, co)),
             to_string(e) + " on X = " + to_string(x) + ", Y = " + to_string(y));
    }
    record(herm, hermitian_form(y, x) == hermitian_form(x, y).conj(), "X = " + to_string(x) + ", Y = " + to_string(y));
  }

  // the full monomial basis, with a damped z-part that exercises the d/dz tails
  const QDerivBraid braid = realization == Realization::Printed ? QDerivBraid::Printed : QDerivBraid::Graded;
  for (int n = 0; n < p; ++n)
    for (int m = 0; m < p; ++m)
      for (const ZMonomial z : {ZMonomial{}, ZMonomial{1, 1, 0}, ZMonomial{1, 0, 2}}) {
        const SuperField b = sf_mono(p, SuperMonomial{n, m, z});
        for (UfsGen g : {UfsGen::Ep, UfsGen::Em, UfsGen::K})
          record(diff, diff_real(g, b, realization) == rop_gen(g, b, co), to_string(g) + " on " + to_string(b));
        if (z != ZMonomial{}) continue;
        const CycloScalar q = qp(p, 1);
        for (int sign : {+1, -1}) {
          const SuperField lhs = qderiv(sign, eta_hat(sign, b), false, braid) -
                                 eta_hat(sign, qderiv(sign, b, false, braid)) * q;
          record(qalg, lhs == b, "D eta-hat - q eta-hat D on " + to_string(b));
          const SuperField cross = qderiv(sign, eta_hat(-sign, b), false, braid);
          const SuperField expect = eta_hat(-sign, qderiv(sign, b, false, braid)) * qp(p, -2 * sign);
          record(qalg, cross == expect, "D" + std::string(sign > 0 ? "+" : "-") + " eta-hat braid on " + to_string(b));
          const SuperField tb = dilat(sign, false, b, braid);
          record(dil, tb == b * qp(p, sign > 0 ? n : m), "T grading on " + to_string(b));
          record(dil, dilat(sign, true, tb, braid) == b, "T T^-1 on " + to_string(b));
          record(dil, dilat(sign, false, dilat(-sign, false, b, braid), braid) ==
                          dilat(-sign, false, dilat(sign, false, b, braid), braid),
                 "T+ T- on " + to_string(b));
        }
      }
  rep.checks = {anti, power, leib, diff, qalg, dil, star, herm};
  return rep;
}

SuperReport verify_invariance(int p, int instances, std::uint64_t seed, ActionTable table) {
  check_order(p);
  const ActionCoefficients co = action_coefficients(p, table);
  SuperReport rep;
  rep.p = p;
  rep.table = table;
  std::mt19937_64 rng(seed);
  SuperCheck inv = named("I_E(R(g)X) = eps(g) I_E(X)"), cas = named("[R(C), R(g)] = 0");
  const UfsElement c1 = casimir(p, Casimir::C1), c2 = casimir(p, Casimir::C2);
  for (int t = 0; t < instances; ++t) {
    SuperField x = random_superfield(p, rng(), 4, 2);
    // make the top component present so the check is not vacuous
    x += sf_mono(p, SuperMonomial{p - 1, p - 1, {1, 2 * (t % 2), 0}}, CycloScalar::gauss(p, {1, t % 3}));
    x += sf_mono(p, SuperMonomial{p - 2, p - 1, {1, 1, 0}}, CycloScalar::one(p));
    x += sf_mono(p, SuperMonomial{p - 1, 0, {1, 0, 1}}, CycloScalar::one(p));
    const PiScalar base = invariant_integral(x);
    for (UfsGen g : kGens) {
      const UfsElement ge = ufs_gen(p, g);
      record(inv, invariant_integral(rop_gen(g, x, co)) == base * ufs_counit(ge),
             to_string(g) + " on X = " + to_string(x));
      for (const UfsElement* c : {&c1, &c2})
        record(cas, rop_apply(*c, rop_apply(ge, x, co), co) == rop_apply(ge, rop_apply(*c, x, co), co),
               (c == &c1 ? std::string("C1, ") : std::string("C2, ")) + to_string(g) + " on X = " + to_string(x));
    }
  }
  rep.checks = {inv, cas};
  return rep;
}

}  // namespace qfs
