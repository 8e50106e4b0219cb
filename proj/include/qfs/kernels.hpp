#pragma once

// Kernels of the quasi-regular corepresentation: the exact xi-polynomials Omega, Omega-tilde with
// xi = q eta+ eta-, the symbolic kernel Q_kl, and the numeric scalar factor K_s.

#include <array>
#include <string>
#include <vector>

#include "qfs/afs.hpp"
#include "qfs/cyclo.hpp"
#include "qfs/pi_rep.hpp"

namespace qfs {

/// sum_m coeffs[m] xi^m, degree < p.
struct XiPolynomial {
  int p = 3;
  std::vector<CycloScalar> coeffs;

  bool is_zero() const;
  /// -1 for the zero polynomial.
  int degree() const;
  CycloScalar coeff(int m) const;
};

std::string to_string(const XiPolynomial& x);

/// Bookkeeping of one Omega evaluation: summands visited, summands dropped because a reciprocal
/// q-factorial argument left [0, p) or the xi power reached p, and q-factorials inverted.
struct OmegaAudit {
  int summands = 0;
  int dropped = 0;
  int inversions = 0;
  /// Inverted q-factorials that were zero; stays 0.
  int zero_inversions = 0;
};

/// M_n in mu-form, n reduced mod p.
CycloScalar m_exact(int p, int n, MConvention conv = MConvention::Uniform);

/// Omega_{k,l} for 0 <= k < p, k <= l < k + p.
XiPolynomial omega(int p, int k, int l, MConvention conv = MConvention::Uniform, OmegaAudit* audit = nullptr);
/// Omega-tilde_{k,l} for 0 <= k < p, 0 <= l < 2p.
XiPolynomial omega_tilde(int p, int k, int l, MConvention conv = MConvention::Uniform, OmegaAudit* audit = nullptr);

/// q eta+ eta- in A_FS.
AfsElement xi_element(int p);
AfsElement evaluate_xi(const XiPolynomial& x);

/// K_s(nu, mu, g0) * prefactor * Omega(xi).
struct KernelTerm {
  int s = 0;
  AfsElement prefactor;
  XiPolynomial omega;
  bool tilde = false;

  /// prefactor * Omega(xi) in A_FS.
  AfsElement grassmann() const;
};

struct KernelQ {
  int p = 3;
  int k = 0;
  int l = 0;
  std::array<KernelTerm, 2> terms;
};

/// Q_kl for k, l taken mod p.
KernelQ kernel_Q(int p, int k, int l, MConvention conv = MConvention::Uniform);

struct QuadrantPoint {
  int quadrant = 1;
  double rho = 0.0;
  double beta = 0.0;
};

/// Quad 1: z+- = rho e^(+-beta)/2; Quad 2: z+- = +-rho e^(+-beta)/2;
/// Quad 3: z+- = -rho e^(+-beta)/2; Quad 4: z+- = -+rho e^(+-beta)/2.
QuadrantPoint polar_map(double z_plus, double z_minus);
std::array<double, 2> polar_inverse(const QuadrantPoint& pt);

struct KernelParams {
  int p = 3;
  ComplexApprox nu = 0.0;
  ComplexApprox mu = 0.0;
  int s = 0;
  double r = 1.0;
  double lambda_coord = 0.0;

  /// nu - mu + s/p.
  ComplexApprox exponent() const;
  /// mu - nu - s/p.
  ComplexApprox bessel_order() const { return -exponent(); }
};

struct KsResult {
  ComplexApprox value;
  /// |I(h) - I(h/2)| at the final halving.
  double error = 0.0;
  double step = 0.0;
  int halvings = 0;
  int nodes = 0;
};

/// (1/2 pi i) e^(mu lambda) integral exp(i r (e^x z+ + e^-x z-) + x (nu - mu + s/p)) dx, computed by the
/// trapezoid rule on the contour x = t + i phi(t), with phi -> +-pi/2 at the ends so that both tails
/// decay double-exponentially; the step is halved until two levels agree to tol.
KsResult ks_quadrature(const KernelParams& params, double z_plus, double z_minus, double tol,
                      int max_halvings = 16);

enum class BesselKind { Hankel1, Hankel2, Macdonald };
std::string to_string(BesselKind k);

/// Bessel function produced by K_s in the given quadrant: H^(1) in Quad 1, H^(2) in Quad 3,
/// K in Quads 2 and 4.
BesselKind ks_bessel_kind(int quadrant);

/// Closed form of K_s in terms of Boost's Bessel functions. Requires a real Bessel order.
///   Quad 1:  (1/2)  e^(o (beta + i pi/2) + mu lambda) H^(1)_o(r rho)
///   Quad 2:  1/(pi i) e^(o (beta - i pi/2) + mu lambda) K_o(r rho)
///   Quad 3: -(1/2)  e^(o (beta - i pi/2) + mu lambda) H^(2)_o(r rho)
///   Quad 4:  1/(pi i) e^(o (beta + i pi/2) + mu lambda) K_o(r rho)
ComplexApprox ks_closed_form(const KernelParams& params, double z_plus, double z_minus);

/// The closed forms in the printed quadrant assignment: H^(1), H^(2) in Quads 1, 2 with phases beta +- i pi/2
/// and K in Quads 3, 4 with phases beta +- i pi/2, all with positive prefactors.
ComplexApprox ks_closed_form_printed(const KernelParams& params, double z_plus, double z_minus);

/// Elementary half-order values, independent of Boost.
ComplexApprox hankel1_half(double order, double x);
double macdonald_half(double x);

struct KernelCheck {
  std::string name;
  int cases = 0;
  double max_deviation = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

struct KernelReport {
  int p = 3;
  double tol = 0.0;
  std::vector<KernelCheck> checks;
  /// max |printed - quadrature| per quadrant, diagnostics only.
  std::array<double, 4> printed_deviation{};
  bool all_passed() const;
  const KernelCheck* find(const std::string& name) const;
};

/// Omega well-definedness, kernel degrees, polar round trip, K_s against the half-order closed forms at
/// r rho in {0.5, 1, 2}, step-halving stability, and the z+ <-> z- substitution symmetry.
KernelReport verify_kernels(int p, double tol);

}  // namespace qfs
