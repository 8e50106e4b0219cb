#include "qfs/ufs.hpp"

#include <algorithm>
#include <sstream>

#include "qfs/errors.hpp"
#include "qfs/qcomb.hpp"

namespace qfs {

namespace {

int wrap(int a, int p) { return ((a % p) + p) % p; }

CycloScalar binomial(int p, int l, int j) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(l), static_cast<unsigned long>(j));
  return CycloScalar::rational(p, Rational(b));
}

// coeff * base * (H + shift)^l, with base.l ignored
void add_h_shifted(UfsElement& out, UfsMonomial base, int l, const CycloScalar& shift, const CycloScalar& coeff) {
  const int p = out.order();
  if (shift.is_zero()) {
    base.l = l;
    out.add_term(base, coeff);
    return;
  }
  CycloScalar pw = CycloScalar::one(p);
  for (int j = l; j >= 0; --j) {
    base.l = j;
    out.add_term(base, coeff * binomial(p, l, j) * pw);
    pw *= shift;
  }
}

// E+^p = P+ and E-^p = P- reductions on a monomial whose n or m just reached p.
UfsMonomial reduce_powers(UfsMonomial x, int p) {
  if (x.m == p) {
    x.m = 0;
    ++x.r;
  }
  if (x.n == p) {
    x.n = 0;
    ++x.s;
  }
  return x;
}

CycloScalar inv_q_minus_qinv(int p) {
  return (CycloScalar::q_power(p, 1) - CycloScalar::q_power(p, -1)).inverse();
}

}  // namespace

std::string to_string(UfsGen g) {
  switch (g) {
    case UfsGen::Em: return "E-";
    case UfsGen::Ep: return "E+";
    case UfsGen::K: return "K";
    case UfsGen::Kinv: return "K^-1";
    case UfsGen::H: return "H";
    case UfsGen::Pp: return "P+";
    case UfsGen::Pm: return "P-";
  }
  return "?";
}

std::string to_string(const UfsMonomial& x) {
  std::ostringstream o;
  o << "E-^" << x.n << " E+^" << x.m << " K^" << x.k << " P+^" << x.r << " P-^" << x.s << " H^" << x.l;
  return o.str();
}

std::string to_string(const UfsElement& x) {
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

UfsElement ufs_unit(int p) { return UfsElement::basis(p, UfsMonomial{}); }

UfsElement ufs_mono(int p, const UfsMonomial& mono) { return UfsElement::basis(p, mono); }

UfsElement ufs_gen(int p, UfsGen g) { return ufs_mul_gen_right(p, UfsMonomial{}, g); }

UfsElement ufs_mul_gen_right(int p, const UfsMonomial& x, UfsGen g) {
  UfsElement out(p);
  const CycloScalar one = CycloScalar::one(p);
  const CycloScalar i = CycloScalar::imag(p);
  const CycloScalar i_over_p = i * CycloScalar::rational(p, Rational(1, p));
  UfsMonomial y = x;
  switch (g) {
    case UfsGen::H:
      ++y.l;
      out.add_term(y, one);
      break;
    case UfsGen::K:
      y.k = wrap(y.k + 1, p);
      out.add_term(y, one);
      break;
    case UfsGen::Kinv:
      y.k = wrap(y.k - 1, p);
      out.add_term(y, one);
      break;
    case UfsGen::Pp:  // H P+ = P+ (H - i)
      ++y.r;
      add_h_shifted(out, y, x.l, -i, one);
      break;
    case UfsGen::Pm:  // H P- = P- (H + i)
      ++y.s;
      add_h_shifted(out, y, x.l, i, one);
      break;
    case UfsGen::Ep: {  // H E+ = E+ (H - i/p), K^k E+ = q^k E+ K^k
      ++y.m;
      add_h_shifted(out, reduce_powers(y, p), x.l, -i_over_p, CycloScalar::q_power(p, x.k));
      break;
    }
    case UfsGen::Em: {  // H E- = E- (H + i/p), K^k E- = q^-k E- K^k
      const CycloScalar kq = CycloScalar::q_power(p, -x.k);
      ++y.n;
      add_h_shifted(out, reduce_powers(y, p), x.l, i_over_p, kq);
      if (x.m > 0) {
        // E+^m E- = E- E+^m + [m] E+^(m-1) (q^(m-1) K^2 - q^(1-m) K^-2) / (q - q^-1)
        const CycloScalar c = kq * q_number(p, x.m) * inv_q_minus_qinv(p);
        UfsMonomial a = x;
        a.m -= 1;
        a.k = wrap(x.k + 2, p);
        add_h_shifted(out, a, x.l, i_over_p, c * CycloScalar::q_power(p, x.m - 1));
        a.k = wrap(x.k - 2, p);
        add_h_shifted(out, a, x.l, i_over_p, -c * CycloScalar::q_power(p, 1 - x.m));
      }
      break;
    }
  }
  return out;
}

UfsElement ufs_mul_gen_left(int p, UfsGen g, const UfsMonomial& x) {
  UfsElement out(p);
  const CycloScalar one = CycloScalar::one(p);
  const CycloScalar i = CycloScalar::imag(p);
  UfsMonomial y = x;
  switch (g) {
    case UfsGen::Em:
      ++y.n;
      out.add_term(reduce_powers(y, p), one);
      break;
    case UfsGen::Ep: {
      ++y.m;
      out.add_term(reduce_powers(y, p), one);
      if (x.n > 0) {
        // E+ E-^n = E-^n E+ + [n] E-^(n-1) (q^(1-n) K^2 - q^(n-1) K^-2) / (q - q^-1), then K^(+-2) past E+^m
        const CycloScalar c = q_number(p, x.n) * inv_q_minus_qinv(p);
        UfsMonomial a = x;
        a.n -= 1;
        a.k = wrap(x.k + 2, p);
        out.add_term(a, c * CycloScalar::q_power(p, 1 - x.n + 2 * x.m));
        a.k = wrap(x.k - 2, p);
        out.add_term(a, -c * CycloScalar::q_power(p, x.n - 1 - 2 * x.m));
      }
      break;
    }
    case UfsGen::K:
      y.k = wrap(y.k + 1, p);
      out.add_term(y, CycloScalar::q_power(p, x.m - x.n));
      break;
    case UfsGen::Kinv:
      y.k = wrap(y.k - 1, p);
      out.add_term(y, CycloScalar::q_power(p, x.n - x.m));
      break;
    case UfsGen::Pp:
      ++y.r;
      out.add_term(y, one);
      break;
    case UfsGen::Pm:
      ++y.s;
      out.add_term(y, one);
      break;
    case UfsGen::H: {
      // H x = x H + x * i((n - m)/p - r + s)
      ++y.l;
      out.add_term(y, one);
      const Rational shift = Rational(x.n - x.m, p) - x.r + x.s;
      out.add_term(x, i * CycloScalar::rational(p, shift));
      break;
    }
  }
  return out;
}

namespace {

void check_word_entry(UfsGen g, int e) {
  if (e < 0 && g != UfsGen::K && g != UfsGen::Kinv) throw NegativeExponent(to_string(g));
}

std::pair<UfsGen, int> canonical_entry(UfsGen g, int e) {
  if (e < 0 && g == UfsGen::K) return {UfsGen::Kinv, -e};
  if (e < 0 && g == UfsGen::Kinv) return {UfsGen::K, -e};
  return {g, e};
}

UfsElement right_mul_gen(const UfsElement& a, UfsGen g) {
  UfsElement out(a.order());
  for (const auto& [mono, c] : a.terms()) out += ufs_mul_gen_right(a.order(), mono, g) * c;
  return out;
}

UfsElement left_mul_gen(UfsGen g, const UfsElement& a) {
  UfsElement out(a.order());
  for (const auto& [mono, c] : a.terms()) out += ufs_mul_gen_left(a.order(), g, mono) * c;
  return out;
}

}  // namespace

UfsWord ufs_word(const UfsMonomial& x) {
  UfsWord w;
  if (x.n) w.emplace_back(UfsGen::Em, x.n);
  if (x.m) w.emplace_back(UfsGen::Ep, x.m);
  if (x.k) w.emplace_back(UfsGen::K, x.k);
  if (x.r) w.emplace_back(UfsGen::Pp, x.r);
  if (x.s) w.emplace_back(UfsGen::Pm, x.s);
  if (x.l) w.emplace_back(UfsGen::H, x.l);
  return w;
}

UfsElement ufs_normalize(int p, std::span<const std::pair<UfsGen, int>> word) {
  check_order(p);
  UfsElement acc = ufs_unit(p);
  for (auto [g0, e0] : word) {
    check_word_entry(g0, e0);
    auto [g, e] = canonical_entry(g0, e0);
    for (int j = 0; j < e; ++j) acc = right_mul_gen(acc, g);
  }
  return acc;
}

UfsElement ufs_normalize_rtl(int p, std::span<const std::pair<UfsGen, int>> word) {
  check_order(p);
  UfsElement acc = ufs_unit(p);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    check_word_entry(it->first, it->second);
    auto [g, e] = canonical_entry(it->first, it->second);
    for (int j = 0; j < e; ++j) acc = left_mul_gen(g, acc);
  }
  return acc;
}

UfsElement ufs_mul(const UfsElement& a, const UfsElement& b) {
  if (a.order() && b.order() && a.order() != b.order()) throw IncompatibleModulus(a.order(), b.order());
  const int p = a.order() ? a.order() : b.order();
  UfsElement out(p);
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [mono, c] : b.terms()) {
    UfsElement part = a;
    for (auto [g, e] : ufs_word(mono))
      for (int j = 0; j < e; ++j) part = right_mul_gen(part, g);
    out += part * c;
  }
  return out;
}

// ---------------------------------------------------------------- Hopf structure

UfsTensor ufs_tensor_mul(const UfsTensor& a, const UfsTensor& b) {
  const int p = a.order() ? a.order() : b.order();
  return tensor_mul(a, b, [p](const UfsMonomial& x, const UfsMonomial& y) {
    return ufs_mul(ufs_mono(p, x), ufs_mono(p, y));
  });
}

UfsTensor3 ufs_tensor_mul(const UfsTensor3& a, const UfsTensor3& b) {
  const int p = a.order() ? a.order() : b.order();
  return tensor_mul(a, b, [p](const UfsMonomial& x, const UfsMonomial& y) {
    return ufs_mul(ufs_mono(p, x), ufs_mono(p, y));
  });
}

UfsElement ufs_multiply_legs(const UfsTensor& t) {
  UfsElement out(t.order());
  for (const auto& [k, c] : t.terms()) out += ufs_mul(ufs_mono(t.order(), k[0]), ufs_mono(t.order(), k[1])) * c;
  return out;
}

namespace {

UfsTensor gen_coproduct(int p, UfsGen g) {
  const UfsElement one = ufs_unit(p);
  const UfsElement gg = ufs_gen(p, g);
  switch (g) {
    case UfsGen::K:
    case UfsGen::Kinv:
      return outer(gg, gg);
    case UfsGen::H:
    case UfsGen::Pp:
    case UfsGen::Pm:
      return outer(gg, one) + outer(one, gg);
    case UfsGen::Ep:
    case UfsGen::Em:
      return outer(gg, ufs_gen(p, UfsGen::K)) + outer(ufs_gen(p, UfsGen::Kinv), gg);
  }
  return UfsTensor(p);
}

UfsElement gen_antipode(int p, UfsGen g) {
  switch (g) {
    case UfsGen::K: return ufs_gen(p, UfsGen::Kinv);
    case UfsGen::Kinv: return ufs_gen(p, UfsGen::K);
    case UfsGen::H:
    case UfsGen::Pp:
    case UfsGen::Pm: return -ufs_gen(p, g);
    case UfsGen::Ep: return ufs_gen(p, g) * -CycloScalar::q_power(p, 1);
    case UfsGen::Em: return ufs_gen(p, g) * -CycloScalar::q_power(p, -1);
  }
  return UfsElement(p);
}

}  // namespace

UfsTensor ufs_coproduct(int p, const UfsMonomial& mono) {
  UfsTensor acc = outer(ufs_unit(p), ufs_unit(p));
  for (auto [g, e] : ufs_word(mono)) {
    const UfsTensor dg = gen_coproduct(p, g);
    for (int j = 0; j < e; ++j) acc = ufs_tensor_mul(acc, dg);
  }
  return acc;
}

UfsTensor ufs_coproduct(const UfsElement& x) {
  UfsTensor out(x.order());
  for (const auto& [mono, c] : x.terms()) out += ufs_coproduct(x.order(), mono) * c;
  return out;
}

CycloScalar ufs_counit(int p, const UfsMonomial& mono) {
  if (mono.n || mono.m || mono.r || mono.s || mono.l) return CycloScalar::zero(p);
  return CycloScalar::one(p);
}

CycloScalar ufs_counit(const UfsElement& x) {
  return x.eval_linear([&](const UfsMonomial& m) { return ufs_counit(x.order(), m); });
}

UfsElement ufs_antipode(int p, const UfsMonomial& mono) {
  UfsElement acc = ufs_unit(p);
  const UfsWord w = ufs_word(mono);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const UfsElement sg = gen_antipode(p, it->first);
    for (int j = 0; j < it->second; ++j) acc = ufs_mul(acc, sg);
  }
  return acc;
}

UfsElement ufs_antipode(const UfsElement& x) {
  return x.map_linear([&](const UfsMonomial& m) { return ufs_antipode(x.order(), m); });
}

UfsElement ufs_star(const UfsElement& x) {
  const int p = x.order();
  UfsElement out(p);
  for (const auto& [mono, c] : x.terms()) {
    UfsWord w = ufs_word(mono);
    std::reverse(w.begin(), w.end());
    out += ufs_normalize(p, w) * c.conj();
  }
  return out;
}

// ---------------------------------------------------------------- Casimirs

namespace {

// E- E+ + (a K - a^-1 K^-1)^2 / d^2
UfsElement quadratic_casimir(int p, const CycloScalar& a, const CycloScalar& d) {
  UfsMonomial em_ep{.n = 1, .m = 1};
  UfsElement c = ufs_mono(p, em_ep);
  const CycloScalar inv_d2 = (d * d).inverse();
  UfsElement kpart(p);
  kpart.add_term(UfsMonomial{.k = 2 % p}, a * a * inv_d2);
  kpart.add_term(UfsMonomial{.k = 0}, CycloScalar::integer(p, -2) * inv_d2);
  kpart.add_term(UfsMonomial{.k = (p - 2) % p}, a.inverse() * a.inverse() * inv_d2);
  return c + kpart;
}

}  // namespace

UfsElement casimir(int p, Casimir which) {
  check_order(p);
  if (which == Casimir::C2) return ufs_mono(p, UfsMonomial{.r = 1, .s = 1});
  return quadratic_casimir(p, q_half_power(p, 1), CycloScalar::q_power(p, 1) - CycloScalar::q_power(p, -1));
}

UfsElement casimir_c1_printed(int p) {
  check_order(p);
  return quadratic_casimir(p, CycloScalar::q_power(p, 1), CycloScalar::q_power(p, 2) - CycloScalar::q_power(p, -2));
}

bool is_central(const UfsElement& x) {
  const int p = x.order();
  for (UfsGen g : {UfsGen::Ep, UfsGen::Em, UfsGen::K, UfsGen::H, UfsGen::Pp, UfsGen::Pm}) {
    const UfsElement gg = ufs_gen(p, g);
    if (!(ufs_mul(x, gg) == ufs_mul(gg, x))) return false;
  }
  return true;
}

}  // namespace qfs
