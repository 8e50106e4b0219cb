#include "qfs/afs.hpp"

#include <algorithm>
#include <sstream>

#include "qfs/errors.hpp"
#include "qfs/qcomb.hpp"

namespace qfs {

namespace {

int wrap(int a, int p) { return ((a % p) + p) % p; }

CycloScalar qp(int p, long long e) { return CycloScalar::q_power(p, e); }

}  // namespace

std::string to_string(AfsGen g) {
  switch (g) {
    case AfsGen::EtaP: return "eta+";
    case AfsGen::EtaM: return "eta-";
    case AfsGen::Delta: return "delta";
    case AfsGen::DeltaInv: return "delta^-1";
    case AfsGen::Zp: return "z+";
    case AfsGen::Zm: return "z-";
    case AfsGen::Lam: return "lam";
    case AfsGen::Exp: return "exp(lam/p)";
  }
  return "?";
}

std::string to_string(const AfsMonomial& x) {
  std::ostringstream o;
  o << "eta-^" << x.n << " eta+^" << x.m << " delta^" << x.d << " z+^" << x.t << " z-^" << x.s << " lam^" << x.l
    << " exp(" << x.u << " lam/p)";
  return o.str();
}

std::string to_string(const AfsElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream o;
  bool first = true;
  for (const auto& [mono, c] : x.terms()) {
    if (!first) o << " + ";
    o << "(" << c.to_string() << ")*[" << to_string(mono) << "]";
    first = false;
  }
  return o.str();
}

AfsElement afs_unit(int p) { return AfsElement::basis(p, AfsMonomial{}); }

AfsElement afs_mono(int p, const AfsMonomial& mono) {
  if (mono.n < 0 || mono.m < 0 || mono.t < 0 || mono.s < 0 || mono.l < 0)
    throw NegativeExponent("A_FS monomial");
  AfsMonomial x = mono;
  x.d = wrap(x.d, p);
  if (x.n >= p || x.m >= p) return AfsElement(p);
  return AfsElement::basis(p, x);
}

AfsElement afs_gen(int p, AfsGen g) {
  AfsMonomial x;
  switch (g) {
    case AfsGen::EtaP: x.m = 1; break;
    case AfsGen::EtaM: x.n = 1; break;
    case AfsGen::Delta: x.d = 1; break;
    case AfsGen::DeltaInv: x.d = p - 1; break;
    case AfsGen::Zp: x.t = 1; break;
    case AfsGen::Zm: x.s = 1; break;
    case AfsGen::Lam: x.l = 1; break;
    case AfsGen::Exp: x.u = 1; break;
  }
  return afs_mono(p, x);
}

AfsElement afs_mul(int p, const AfsMonomial& a, const AfsMonomial& b) {
  if (a.n + b.n >= p || a.m + b.m >= p) return AfsElement(p);
  // delta^d eta = q^-2d eta delta^d and eta+^m eta-^n = q^-2mn eta-^n eta+^m
  const long long e = -2LL * a.d * (b.n + b.m) - 2LL * a.m * b.n;
  AfsMonomial r{a.n + b.n, a.m + b.m, wrap(a.d + b.d, p), a.t + b.t, a.s + b.s, a.l + b.l, a.u + b.u};
  return AfsElement::term(p, r, qp(p, e));
}

AfsElement afs_mul(const AfsElement& a, const AfsElement& b) {
  if (a.order() && b.order() && a.order() != b.order()) throw IncompatibleModulus(a.order(), b.order());
  const int p = a.order() ? a.order() : b.order();
  AfsElement out(p);
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) {
      AfsElement xy = afs_mul(p, x, y);
      if (!xy.is_zero()) out += xy * (cx * cy);
    }
  return out;
}

AfsElement afs_pow(const AfsElement& a, int e) {
  if (e < 0) throw NegativeExponent("A_FS element");
  AfsElement acc = afs_unit(a.order());
  for (int j = 0; j < e; ++j) acc = afs_mul(acc, a);
  return acc;
}

AfsElement afs_normalize(int p, std::span<const std::pair<AfsGen, int>> word) {
  check_order(p);
  AfsElement acc = afs_unit(p);
  for (auto [g, e] : word) {
    if (g == AfsGen::Exp) {
      AfsMonomial x;
      x.u = e;
      acc = afs_mul(acc, afs_mono(p, x));
      continue;
    }
    if (g == AfsGen::Delta || g == AfsGen::DeltaInv) {
      AfsMonomial x;
      x.d = wrap(g == AfsGen::Delta ? e : -e, p);
      acc = afs_mul(acc, afs_mono(p, x));
      continue;
    }
    if (e < 0) throw NegativeExponent(to_string(g));
    const AfsElement gg = afs_gen(p, g);
    for (int j = 0; j < e && !acc.is_zero(); ++j) acc = afs_mul(acc, gg);
  }
  return acc;
}

AfsWord afs_word(const AfsMonomial& x) {
  AfsWord w;
  if (x.n) w.push_back({AfsGen::EtaM, x.n});
  if (x.m) w.push_back({AfsGen::EtaP, x.m});
  if (x.d) w.push_back({AfsGen::Delta, x.d});
  if (x.t) w.push_back({AfsGen::Zp, x.t});
  if (x.s) w.push_back({AfsGen::Zm, x.s});
  if (x.l) w.push_back({AfsGen::Lam, x.l});
  if (x.u) w.push_back({AfsGen::Exp, x.u});
  return w;
}

AfsElement zeta(int p, int k) {
  AfsElement z(p);
  const CycloScalar inv_p = CycloScalar::rational(p, Rational(1, p));
  for (int n = 0; n < p; ++n) {
    AfsMonomial x;
    x.d = n;
    z.add_term(x, qp(p, -static_cast<long long>(n) * k) * inv_p);
  }
  return z;
}

AfsElement afs_pochhammer(const AfsElement& a, int base_exp, int k) {
  const int p = a.order();
  AfsElement acc = afs_unit(p);
  for (int j = 1; j <= k; ++j) acc = afs_mul(acc, afs_unit(p) - a * qp(p, static_cast<long long>(base_exp) * (j - 1)));
  return acc;
}

// ---------------------------------------------------------------- Hopf structure

AfsTensor afs_tensor_mul(const AfsTensor& a, const AfsTensor& b) {
  const int p = a.order() ? a.order() : b.order();
  return tensor_mul(a, b, [p](const AfsMonomial& x, const AfsMonomial& y) { return afs_mul(p, x, y); });
}

AfsElement afs_multiply_legs(const AfsTensor& t) {
  AfsElement out(t.order());
  for (const auto& [k, c] : t.terms()) out += afs_mul(t.order(), k[0], k[1]) * c;
  return out;
}

namespace {

AfsElement mono_of(int p, int n, int m, int d, int u = 0) {
  AfsMonomial x;
  x.n = n;
  x.m = m;
  x.d = d;
  x.u = u;
  return afs_mono(p, x);
}

// eta+^a eta-^b delta^d written in basis order, delta^d on the right of the eta's
AfsElement eta_pm(int p, int a, int b, int d = 0) {
  return afs_mul(afs_mul(mono_of(p, 0, a, 0), mono_of(p, b, 0, 0)), mono_of(p, 0, 0, wrap(d, p)));
}

AfsElement delta_pow(int p, int d) { return mono_of(p, 0, 0, wrap(d, p)); }

int charge(ZChargeIndex c, int p, int k) {
  switch (c) {
    case ZChargeIndex::K: return k;
    case ZChargeIndex::PMinusK: return p - k;
    case ZChargeIndex::None: return 0;
  }
  return k;
}

AfsTensor coproduct_delta(int p, const AfsConventions& conv) {
  const AfsElement del = delta_pow(p, 1);
  const int quad = conv.delta_quadratic == DeltaQuadratic::Printed ? -2 : -4;
  AfsTensor t = outer(del, del);
  t += outer(afs_mul(delta_pow(p, -1), eta_pm(p, 2, 0)), afs_mul(eta_pm(p, 0, 2), del)) * qp(p, quad);
  t += outer(eta_pm(p, 1, 0), afs_mul(eta_pm(p, 0, 1), del)) * (CycloScalar::one(p) + qp(p, -2));
  return t;
}

AfsTensor coproduct_eta_plus(int p) {
  const AfsElement one = afs_unit(p);
  const AfsElement ep = eta_pm(p, 1, 0);
  const AfsElement em = eta_pm(p, 0, 1);
  const AfsElement epem = eta_pm(p, 1, 1);
  AfsTensor t = outer(ep, one) + outer(delta_pow(p, 1), ep);
  t += outer(ep, epem) * (CycloScalar::one(p) + qp(p, 2));
  t += outer(afs_mul(delta_pow(p, -1), eta_pm(p, 2, 0)), afs_mul(one + epem * qp(p, 2), em)) * qp(p, -2);
  return t;
}

AfsTensor coproduct_eta_minus(int p) {
  const AfsElement one = afs_unit(p);
  const AfsElement em = eta_pm(p, 0, 1);
  AfsTensor t = outer(em, one) + outer(delta_pow(p, -1), em);
  for (int k = 1; k <= p - 2; ++k) {
    const CycloScalar c = CycloScalar::integer(p, k % 2 ? -1 : 1) * qp(p, -static_cast<long long>(k) * (k + 1));
    t += outer(afs_mul(delta_pow(p, -k - 1), eta_pm(p, k, 0)), eta_pm(p, 0, k + 1)) * c;
  }
  return t;
}

AfsTensor coproduct_z(int p, bool plus, const AfsConventions& conv) {
  const AfsElement one = afs_unit(p);
  const int sg = plus ? 1 : -1;
  const AfsElement z = afs_gen(p, plus ? AfsGen::Zp : AfsGen::Zm);
  AfsTensor t = outer(z, one) + outer(mono_of(p, 0, 0, 0, sg * p), z);
  const AfsElement epem = eta_pm(p, 1, 1);
  for (int k = 1; k <= p - 1; ++k) {
    const CycloScalar c =
        qp(p, sg * static_cast<long long>(k) * k) * inv_q_factorial(p, k) * inv_q_factorial(p, p - k);
    const AfsElement ex = mono_of(p, 0, 0, 0, sg * charge(conv.charge, p, k));
    if (plus) {
      const AfsElement left = afs_mul(afs_mul(eta_pm(p, p - k, 0), delta_pow(p, k)), ex);
      const AfsElement right = afs_mul(afs_pochhammer(epem * -qp(p, 2), 2, p - k), eta_pm(p, k, 0));
      t += outer(left, right) * c;
    } else {
      const AfsElement left =
          afs_mul(afs_mul(afs_mul(eta_pm(p, 0, p - k), delta_pow(p, -k)), ex), afs_pochhammer(-epem, -2, k));
      t += outer(left, eta_pm(p, 0, k)) * c;
    }
  }
  return t;
}

AfsElement gen_antipode(int p, AfsGen g, const AfsConventions& conv) {
  const AfsElement one = afs_unit(p);
  switch (g) {
    case AfsGen::Delta:
      return afs_mul(afs_mul(delta_pow(p, -1), one + eta_pm(p, 1, 1) * qp(p, -2)), one + eta_pm(p, 1, 1));
    case AfsGen::DeltaInv: {
      const AfsElement sd = gen_antipode(p, AfsGen::Delta, conv);
      return afs_pow(sd, p - 1);
    }
    case AfsGen::EtaP: {
      const int u = conv.eta_charge == EtaCharge::Graded ? -1 : 0;
      const AfsElement lead = -afs_mul(mono_of(p, 0, 0, p - 1, u), eta_pm(p, 1, 0));
      if (conv.eta_antipode == EtaAntipode::Printed) return lead;
      return afs_mul(lead, one + eta_pm(p, 1, 1));
    }
    case AfsGen::EtaM: {
      const int u = conv.eta_charge == EtaCharge::Graded ? 1 : 0;
      const AfsElement lead = -afs_mul(mono_of(p, 0, 0, 1, u), eta_pm(p, 0, 1));
      if (conv.eta_antipode == EtaAntipode::Printed) return lead;
      // (1 + q^2 eta+ eta-)^-1 as a terminating geometric series
      const AfsElement x = eta_pm(p, 1, 1) * -qp(p, 2);
      AfsElement inv = one, pw = one;
      for (int j = 1; j < p; ++j) {
        pw = afs_mul(pw, x);
        inv += pw;
      }
      return afs_mul(lead, inv);
    }
    case AfsGen::Lam: return -afs_gen(p, AfsGen::Lam);
    case AfsGen::Exp: return mono_of(p, 0, 0, 0, -1);
    case AfsGen::Zp:
    case AfsGen::Zm: {
      const AfsElement z = -afs_gen(p, g);
      if (conv.z_antipode == ZAntipode::Printed) return z;
      return afs_mul(mono_of(p, 0, 0, 0, g == AfsGen::Zp ? -p : p), z);
    }
  }
  return AfsElement(p);
}

AfsTensor graded(const AfsTensor& t, const AfsConventions& conv) {
  if (conv.eta_charge == EtaCharge::Omitted) return t;
  AfsTensor r(t.order());
  for (const auto& [k, c] : t.terms()) {
    TensorKey<AfsMonomial, 2> k2 = k;
    k2[0].u += k[1].m - k[1].n;
    r.add_term(k2, c);
  }
  return r;
}

}  // namespace

AfsTensor afs_gen_coproduct(int p, AfsGen g, const AfsConventions& conv) {
  switch (g) {
    case AfsGen::Delta: return graded(coproduct_delta(p, conv), conv);
    case AfsGen::DeltaInv: {
      const AfsTensor d = graded(coproduct_delta(p, conv), conv);
      AfsTensor acc = outer(afs_unit(p), afs_unit(p));
      for (int j = 0; j < p - 1; ++j) acc = afs_tensor_mul(acc, d);
      return acc;
    }
    case AfsGen::EtaP: return graded(coproduct_eta_plus(p), conv);
    case AfsGen::EtaM: return graded(coproduct_eta_minus(p), conv);
    case AfsGen::Zp: return coproduct_z(p, true, conv);
    case AfsGen::Zm: return coproduct_z(p, false, conv);
    case AfsGen::Lam: return outer(afs_gen(p, g), afs_unit(p)) + outer(afs_unit(p), afs_gen(p, g));
    case AfsGen::Exp: return outer(afs_gen(p, g), afs_gen(p, g));
  }
  return AfsTensor(p);
}

AfsTensor afs_coproduct(int p, const AfsMonomial& mono, const AfsConventions& conv) {
  AfsTensor acc = outer(afs_unit(p), afs_unit(p));
  for (auto [g, e] : afs_word(mono)) {
    if (g == AfsGen::Exp) {
      AfsMonomial x;
      x.u = e;
      acc = afs_tensor_mul(acc, outer(afs_mono(p, x), afs_mono(p, x)));
      continue;
    }
    const AfsTensor dg = afs_gen_coproduct(p, g, conv);
    for (int j = 0; j < e; ++j) acc = afs_tensor_mul(acc, dg);
  }
  return acc;
}

AfsTensor afs_coproduct(const AfsElement& x, const AfsConventions& conv) {
  AfsTensor out(x.order());
  for (const auto& [mono, c] : x.terms()) out += afs_coproduct(x.order(), mono, conv) * c;
  return out;
}

CycloScalar afs_counit(int p, const AfsMonomial& x) {
  if (x.n || x.m || x.t || x.s || x.l) return CycloScalar::zero(p);
  return CycloScalar::one(p);
}

CycloScalar afs_counit(const AfsElement& x) {
  return x.eval_linear([&](const AfsMonomial& m) { return afs_counit(x.order(), m); });
}

AfsElement afs_antipode(int p, const AfsMonomial& mono, const AfsConventions& conv) {
  AfsElement acc = afs_unit(p);
  const AfsWord w = afs_word(mono);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->first == AfsGen::Exp) {
      AfsMonomial x;
      x.u = -it->second;
      acc = afs_mul(acc, afs_mono(p, x));
      continue;
    }
    const AfsElement sg = gen_antipode(p, it->first, conv);
    for (int j = 0; j < it->second; ++j) acc = afs_mul(acc, sg);
  }
  return acc;
}

AfsElement afs_antipode(const AfsElement& x, const AfsConventions& conv) {
  return x.map_linear([&](const AfsMonomial& m) { return afs_antipode(x.order(), m, conv); });
}

AfsElement afs_star(const AfsElement& x) {
  const int p = x.order();
  AfsElement out(p);
  for (const auto& [mono, c] : x.terms()) {
    AfsWord w = afs_word(mono);
    std::reverse(w.begin(), w.end());
    out += afs_normalize(p, w) * c.conj();
  }
  return out;
}

CycloScalar grassmann_integral(const AfsElement& x) {
  const int p = x.order();
  CycloScalar acc = CycloScalar::zero(p);
  for (const auto& [mono, c] : x.terms()) {
    if (!mono.is_grassmann()) throw NonGrassmannInput();
    if (mono.d != 0 || mono.n != p - 1 || mono.m != p - 1) continue;
    // eta-^(p-1) eta+^(p-1) = q^(2(p-1)^2) eta+^(p-1) eta-^(p-1)
    acc += c * qp(p, 2LL * (p - 1) * (p - 1) - 1);
  }
  return acc;
}


AfsAxiomCheck afs_check_axioms(int p, AfsGen g, const AfsConventions& conv) {
  const AfsElement x = afs_gen(p, g);
  const AfsTensor d = afs_coproduct(x, conv);
  auto dd = [&](const AfsMonomial& mono) { return afs_coproduct(p, mono, conv); };
  auto s = [&](const AfsMonomial& mono) { return afs_antipode(p, mono, conv); };

  AfsAxiomCheck r;
  r.coassociative = expand_leg(d, 0, dd) == expand_leg(d, 1, dd);

  AfsElement left(p), right(p);
  for (const auto& [k, c] : d.terms()) {
    left += afs_mono(p, k[1]) * (c * afs_counit(p, k[0]));
    right += afs_mono(p, k[0]) * (c * afs_counit(p, k[1]));
  }
  r.counit = left == x && right == x;

  const AfsElement eps = afs_unit(p) * afs_counit(x);
  r.antipode = afs_multiply_legs(apply_on_leg(d, 0, s)) == eps && afs_multiply_legs(apply_on_leg(d, 1, s)) == eps;
  return r;
}

bool afs_coproduct_respects_relations(int p, const AfsConventions& conv) {
  auto D = [&](AfsGen g) { return afs_gen_coproduct(p, g, conv); };
  auto mul = [](const AfsTensor& a, const AfsTensor& b) { return afs_tensor_mul(a, b); };
  const AfsTensor one = outer(afs_unit(p), afs_unit(p));
  auto power = [&](const AfsTensor& t, int e) {
    AfsTensor a = one;
    for (int j = 0; j < e; ++j) a = mul(a, t);
    return a;
  };
  const CycloScalar q2 = CycloScalar::q_power(p, 2);
  const AfsTensor ep = D(AfsGen::EtaP), em = D(AfsGen::EtaM), de = D(AfsGen::Delta);
  if (!(mul(em, ep) == mul(ep, em) * q2)) return false;
  if (!(mul(ep, de) == mul(de, ep) * q2)) return false;
  if (!(mul(em, de) == mul(de, em) * q2)) return false;
  if (!power(ep, p).is_zero() || !power(em, p).is_zero()) return false;
  if (!(power(de, p) == one)) return false;
  for (AfsGen z : {AfsGen::Zp, AfsGen::Zm, AfsGen::Lam}) {
    const AfsTensor zt = D(z);
    for (const AfsTensor* g : {&ep, &em, &de})
      if (!(mul(zt, *g) == mul(*g, zt))) return false;
  }
  return true;
}

}  // namespace qfs
