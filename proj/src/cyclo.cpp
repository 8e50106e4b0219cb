#include "qfs/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qfs/errors.hpp"

namespace qfs {

namespace {

using GPoly = std::vector<GaussRational>;

int mod(long long a, int p) {
  long long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

void trim(GPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// Fold a cyclic coefficient array of length p (exponents mod p) into the power basis mod Phi_p.
std::vector<GaussRational> reduce_cyclic(std::vector<GaussRational>&& t, int p) {
  const GaussRational top = t[p - 1];
  t.resize(p - 1);
  if (!top.is_zero())
    for (auto& c : t) c = c - top;
  return std::move(t);
}

GPoly poly_mul(const GPoly& a, const GPoly& b) {
  if (a.empty() || b.empty()) return {};
  GPoly r(a.size() + b.size() - 1, GaussRational{});
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  trim(r);
  return r;
}

GPoly poly_sub(const GPoly& a, const GPoly& b) {
  GPoly r(std::max(a.size(), b.size()), GaussRational{});
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  trim(r);
  return r;
}

// Quotient and remainder of a by b (b nonzero, trimmed).
std::pair<GPoly, GPoly> poly_divmod(GPoly a, const GPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  GPoly q(a.size() - b.size() + 1, GaussRational{});
  const GaussRational lead_inv = b.back().inverse();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const GaussRational f = a.back() * lead_inv;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

}  // namespace

GaussRational GaussRational::inverse() const {
  const Rational n = norm();
  if (sgn(n) == 0) throw DivisionByZero();
  return {re / n, -im / n};
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return "(" + r.get_str() + ")";
}

// ---------------------------------------------------------------- Cyclo

Cyclo::Cyclo(int p) : p_(p), c_(static_cast<std::size_t>(p - 1), GaussRational{}) { check_order(p); }

Cyclo::Cyclo(int p, const GaussRational& c) : Cyclo(p) { c_[0] = c; }

Cyclo Cyclo::q_power(int p, long long e) {
  Cyclo r(p);
  const int j = mod(e, p);
  if (j < p - 1) {
    r.c_[j].re = 1;
  } else {
    for (auto& c : r.c_) c.re = -1;
  }
  return r;
}

Cyclo Cyclo::imag(int p) { return Cyclo(p, GaussRational{0, 1}); }

bool Cyclo::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const GaussRational& g) { return g.is_zero(); });
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (p_ != o.p_) throw IncompatibleModulus(p_, o.p_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  if (p_ != o.p_) throw IncompatibleModulus(p_, o.p_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
  return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  if (p_ != o.p_) throw IncompatibleModulus(p_, o.p_);
  std::vector<GaussRational> t(static_cast<std::size_t>(p_), GaussRational{});
  for (int i = 0; i < p_ - 1; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; j < p_ - 1; ++j) {
      if (o.c_[j].is_zero()) continue;
      auto& slot = t[(i + j) % p_];
      slot = slot + c_[i] * o.c_[j];
    }
  }
  c_ = reduce_cyclic(std::move(t), p_);
  return *this;
}

Cyclo& Cyclo::operator*=(const GaussRational& r) {
  for (auto& c : c_) c = c * r;
  return *this;
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

Cyclo Cyclo::conj() const {
  std::vector<GaussRational> t(static_cast<std::size_t>(p_), GaussRational{});
  for (int j = 0; j < p_ - 1; ++j) t[(p_ - j) % p_] = c_[j].conj();
  Cyclo r(p_);
  r.c_ = reduce_cyclic(std::move(t), p_);
  return r;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // Phi_p = 1 + x + ... + x^(p-1)
  GPoly r0(static_cast<std::size_t>(p_), GaussRational{1, 0});
  GPoly r1 = c_;
  trim(r1);
  GPoly s0, s1{GaussRational{1, 0}};
  while (r1.size() > 1) {
    auto [quot, rem] = poly_divmod(r0, r1);
    GPoly s2 = poly_sub(s0, poly_mul(quot, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since Phi_p is irreducible over Q(i)
  const GaussRational g = r1.at(0).inverse();
  std::vector<GaussRational> t(static_cast<std::size_t>(p_), GaussRational{});
  for (std::size_t i = 0; i < s1.size(); ++i) t[i % p_] = t[i % p_] + s1[i] * g;
  Cyclo out(p_);
  out.c_ = reduce_cyclic(std::move(t), p_);
  return out;
}

ComplexApprox Cyclo::embed() const {
  ComplexApprox acc{0.0, 0.0};
  for (int j = 0; j < p_ - 1; ++j) {
    if (c_[j].is_zero()) continue;
    const double ang = 2.0 * std::numbers::pi * j / p_;
    acc += ComplexApprox(c_[j].re.get_d(), c_[j].im.get_d()) * ComplexApprox(std::cos(ang), std::sin(ang));
  }
  return acc;
}

// ---------------------------------------------------------------- CycloScalar

CycloScalar::CycloScalar(const Cyclo& c, int mu_exp) : p_(c.order()) {
  if (!c.is_zero()) terms_.emplace_back(mu_exp, c);
}

CycloScalar CycloScalar::zero(int p) {
  check_order(p);
  CycloScalar s;
  s.p_ = p;
  return s;
}

CycloScalar CycloScalar::one(int p) { return integer(p, 1); }

CycloScalar CycloScalar::integer(int p, long long n) { return rational(p, Rational(static_cast<long>(n))); }

CycloScalar CycloScalar::rational(int p, const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return CycloScalar(Cyclo(p, GaussRational{c, 0}));
}

CycloScalar CycloScalar::gauss(int p, const GaussRational& r) {
  GaussRational c = r;
  c.re.canonicalize();
  c.im.canonicalize();
  return CycloScalar(Cyclo(p, c));
}

CycloScalar CycloScalar::imag(int p) { return CycloScalar(Cyclo::imag(p)); }

CycloScalar CycloScalar::q_power(int p, long long e) { return CycloScalar(Cyclo::q_power(p, e)); }

CycloScalar CycloScalar::mu_power(int p, int e) { return CycloScalar(Cyclo(p, GaussRational{1, 0}), e); }

bool CycloScalar::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == Cyclo(p_, GaussRational{1, 0});
}

void CycloScalar::adopt_order(const CycloScalar& o) {
  if (p_ == o.p_) return;
  if (p_ == 0 && terms_.empty()) {
    p_ = o.p_;
    return;
  }
  if (o.p_ == 0 && o.terms_.empty()) return;
  throw IncompatibleModulus(p_, o.p_);
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
  adopt_order(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Cyclo c = std::move(a->second);
      c += b->second;
      if (!c.is_zero()) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) { return *this += -o; }

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
  adopt_order(o);
  if (terms_.empty() || o.terms_.empty()) {
    terms_.clear();
    return *this;
  }
  if (o.terms_.size() == 1) {
    for (auto& [e, c] : terms_) {
      e += o.terms_[0].first;
      c *= o.terms_[0].second;
    }
    std::erase_if(terms_, [](const Term& t) { return t.second.is_zero(); });
    return *this;
  }
  CycloScalar acc = zero(p_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) acc += CycloScalar(ca * cb, ea + eb);
  *this = std::move(acc);
  return *this;
}

CycloScalar& CycloScalar::operator/=(const CycloScalar& o) { return *this *= o.inverse(); }

CycloScalar CycloScalar::operator-() const {
  CycloScalar r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
  if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
  return a.p_ == b.p_ && a.terms_.size() == b.terms_.size() &&
         std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                    [](const CycloScalar::Term& x, const CycloScalar::Term& y) { return x.first == y.first && x.second == y.second; });
}

CycloScalar CycloScalar::inverse() const {
  if (terms_.empty()) throw DivisionByZero();
  if (terms_.size() != 1) throw DomainError("scalar with several mu-powers is not a unit: " + to_string());
  return CycloScalar(terms_[0].second.inverse(), -terms_[0].first);
}

CycloScalar CycloScalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloScalar base = *this;
  CycloScalar acc = one(p_);
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return acc;
}

CycloScalar CycloScalar::conj() const {
  CycloScalar r = *this;
  for (auto& t : r.terms_) t.second = t.second.conj();
  return r;
}

ComplexApprox CycloScalar::embed(double mu_value) const {
  ComplexApprox acc{0.0, 0.0};
  for (const auto& [e, c] : terms_) acc += c.embed() * std::pow(mu_value, e);
  return acc;
}

std::string CycloScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (int j = 0; j < p_ - 1; ++j) {
      const GaussRational& g = c.coeffs()[j];
      for (int part = 0; part < 2; ++part) {
        const Rational& r = part == 0 ? g.re : g.im;
        if (sgn(r) == 0) continue;
        std::string factors;
        if (part == 1) factors += "i";
        if (j > 0) factors += (factors.empty() ? "" : "*") + std::string("q") + (j > 1 ? "^" + std::to_string(j) : "");
        if (e != 0) factors += (factors.empty() ? "" : "*") + std::string("mu") + (e != 1 ? "^" + std::to_string(e) : "");
        const Rational mag = abs(r);
        std::string term;
        if (factors.empty()) {
          term = qfs::to_string(mag);
        } else if (mag == 1) {
          term = factors;
        } else {
          term = qfs::to_string(mag) + "*" + factors;
        }
        if (first) {
          out << (sgn(r) < 0 ? "-" : "") << term;
        } else {
          out << (sgn(r) < 0 ? " - " : " + ") << term;
        }
        first = false;
      }
    }
  }
  return out.str();
}

}  // namespace qfs
