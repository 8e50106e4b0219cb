#pragma once

// Exact arithmetic in Q(i)(q)[mu, 1/mu], q a primitive p-th root of unity
// (p odd), mu a formal invertible unit standing for lambda_+^(1/p).

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qfs {

using Rational = mpq_class;
using ComplexApprox = std::complex<double>;

struct GaussRational {
  Rational re;
  Rational im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
  GaussRational inverse() const;
};

/// Element of Q(i)[q] / Phi_p(q), stored by its p-1 coefficients in the power basis 1, q, ..., q^(p-2).
class Cyclo {
 public:
  Cyclo() = default;
  explicit Cyclo(int p);
  Cyclo(int p, const GaussRational& c);

  static Cyclo q_power(int p, long long e);
  static Cyclo imag(int p);

  int order() const { return p_; }
  bool is_zero() const;
  const std::vector<GaussRational>& coeffs() const { return c_; }

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator*=(const GaussRational& r);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  Cyclo operator-() const;
  friend bool operator==(const Cyclo& a, const Cyclo& b);

  /// Complex conjugation: i -> -i, q -> q^-1.
  Cyclo conj() const;
  /// Field inverse by the extended Euclidean algorithm against Phi_p over Q(i).
  Cyclo inverse() const;
  ComplexApprox embed() const;

 private:
  int p_ = 0;
  std::vector<GaussRational> c_;
};

/// Laurent polynomial in mu with Cyclo coefficients. Immutable value semantics.
class CycloScalar {
 public:
  using Term = std::pair<int, Cyclo>;

  /// The zero scalar of unspecified order; adopts the order of whatever it is combined with.
  CycloScalar() = default;
  explicit CycloScalar(const Cyclo& c, int mu_exp = 0);

  static CycloScalar zero(int p);
  static CycloScalar one(int p);
  static CycloScalar integer(int p, long long n);
  static CycloScalar rational(int p, const Rational& r);
  static CycloScalar gauss(int p, const GaussRational& r);
  static CycloScalar imag(int p);
  static CycloScalar q_power(int p, long long e);
  static CycloScalar mu_power(int p, int e);

  int order() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }
  /// True when the scalar does not involve mu.
  bool is_mu_free() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

  CycloScalar& operator+=(const CycloScalar& o);
  CycloScalar& operator-=(const CycloScalar& o);
  CycloScalar& operator*=(const CycloScalar& o);
  CycloScalar& operator/=(const CycloScalar& o);
  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
  friend CycloScalar operator/(CycloScalar a, const CycloScalar& b) { return a /= b; }
  CycloScalar operator-() const;
  friend bool operator==(const CycloScalar& a, const CycloScalar& b);

  /// Inverse; only scalars with a single mu-power are units of the Laurent ring.
  CycloScalar inverse() const;
  CycloScalar pow(long long e) const;
  /// Complex conjugation with mu treated as real.
  CycloScalar conj() const;
  ComplexApprox embed(double mu_value) const;

  /// Canonical text form such as "(3/2)*i*q^2*mu^-1".
  std::string to_string() const;

 private:
  void adopt_order(const CycloScalar& o);

  int p_ = 0;
  std::vector<Term> terms_;  // sorted by mu exponent, no zero coefficients
};

std::string to_string(const Rational& r);

}  // namespace qfs
