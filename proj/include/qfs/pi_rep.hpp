#pragma once

// Numeric realization of pi_{lambda+-} on the span of Gaussian atoms x^deg e^{-(x-c)^2/2} t^tpow,
// with t^p = 1 in the t-sector.

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qfs/cyclo.hpp"
#include "qfs/ufs.hpp"

namespace qfs {

struct GaussAtom {
  int deg = 0;
  Rational center = 0;
  int tpow = 0;

  friend bool operator<(const GaussAtom& a, const GaussAtom& b);
  friend bool operator==(const GaussAtom& a, const GaussAtom& b);
};

std::string to_string(const GaussAtom& a);

class GaussAtomState {
 public:
  using Map = std::map<GaussAtom, ComplexApprox>;

  GaussAtomState() = default;
  static GaussAtomState atom(const GaussAtom& a, ComplexApprox c = 1.0);

  void add(const GaussAtom& a, ComplexApprox c);
  const Map& terms() const& { return terms_; }
  Map terms() && { return std::move(terms_); }
  bool empty() const { return terms_.empty(); }

  GaussAtomState& operator+=(const GaussAtomState& o);
  GaussAtomState& operator-=(const GaussAtomState& o);
  GaussAtomState& operator*=(ComplexApprox s);
  friend GaussAtomState operator+(GaussAtomState a, const GaussAtomState& b) { return a += b; }
  friend GaussAtomState operator-(GaussAtomState a, const GaussAtomState& b) { return a -= b; }
  friend GaussAtomState operator*(GaussAtomState a, ComplexApprox s) { return a *= s; }
  friend GaussAtomState operator*(ComplexApprox s, GaussAtomState a) { return a *= s; }

 private:
  Map terms_;
};

/// Reading of M_0. The general formula at n = 0 gives lambda+^(1 - 1/p); the printed value is lambda+^(-1/p).
enum class MConvention { Uniform, Printed };

struct RepParams {
  int p = 3;
  double lambda_plus = 1.0;
  MConvention m_convention = MConvention::Uniform;

  double root_lambda() const;
  /// prod_{n=0}^{p-1} M_n.
  double lambda_minus() const;
};

/// [n] at q = exp(2 pi i/p); real.
double q_number_numeric(int p, long long n);
double m_coeff(int n, const RepParams& params);
/// prod M_n with lambda+^(1/p) kept as the formal unit mu.
CycloScalar exact_lambda_minus(int p, MConvention conv = MConvention::Uniform);

GaussAtomState apply_pi(UfsGen gen, const GaussAtomState& state, const RepParams& params);
/// pi of a U_FS element; mu is evaluated at lambda+^(1/p).
GaussAtomState apply_pi(const UfsElement& x, const GaussAtomState& state, const RepParams& params);

/// (u, v) = integral u conj(v) dx times Phi(t^(n+m)) with conjugated coefficients.
ComplexApprox inner_product(const GaussAtomState& u, const GaussAtomState& v, int p);
/// Positive-definite norm with t-monomials orthonormal; used to measure residuals.
double positive_norm(const GaussAtomState& u);

/// Matrix elements (b_i, pi(g) b_j) with respect to the hermitian form.
std::vector<std::vector<ComplexApprox>> rep_matrix(UfsGen gen, const std::vector<GaussAtom>& basis,
                                                   const RepParams& params);

struct PiCheck {
  std::string name;
  double max_deviation = 0.0;
  bool passed = true;
};

struct PiReport {
  RepParams params;
  double tol = 0.0;
  std::vector<PiCheck> checks;
  bool all_passed() const;
};

/// Defining relations of U_FS and the *-property on a seeded batch of random states.
PiReport verify_pi(const RepParams& params, double tol, std::uint64_t seed = 0, int batch = 8);

/// Numbers of positive and negative eigenvalues of G_nm = delta_{n+m = 0 mod p}.
std::pair<int, int> gram_signature(int p);

}  // namespace qfs
