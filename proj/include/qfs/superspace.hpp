#pragma once

// Generalized superspace (eta+-, z+-): fields sum f_nm(z+, z-) eta+^n eta-^m with Gaussian-damped
// polynomial coefficients, the right action R of U_FS, its q-derivative realization, the invariant
// integral, the hermitian form and the invariant action.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qfs/afs.hpp"
#include "qfs/ufs.hpp"

namespace qfs {

/// z+^a z-^b exp(-w (z+^2 + z-^2)).
struct ZMonomial {
  int w = 0;
  int a = 0;
  int b = 0;
  auto operator<=>(const ZMonomial&) const = default;
};

using ZFunction = LinComb<ZMonomial>;

/// f(z) eta+^n eta-^m with f a single ZMonomial; the superspace ordering puts eta+ before eta-.
struct SuperMonomial {
  int n = 0;  // eta+
  int m = 0;  // eta-
  ZMonomial z;
  auto operator<=>(const SuperMonomial&) const = default;
};

using SuperField = LinComb<SuperMonomial>;

std::string to_string(const ZMonomial& z);
std::string to_string(const SuperMonomial& mono);
std::string to_string(const SuperField& x);

SuperField sf_unit(int p);
/// eta+^n eta-^m.
SuperField sf_eta(int p, int n, int m);
/// f eta+^n eta-^m.
SuperField sf_mono(int p, const SuperMonomial& mono, const CycloScalar& c);
SuperField sf_mono(int p, const SuperMonomial& mono);
/// The component map (n, m) -> f_nm.
std::map<std::pair<int, int>, ZFunction> components(const SuperField& x);
SuperField from_components(int p, const std::map<std::pair<int, int>, ZFunction>& comps);

SuperField sf_mul(const SuperField& x, const SuperField& y);
/// eta_+- stay fixed, z+- = z+-, scalars conjugated, order reversed.
SuperField sf_star(const SuperField& x);
/// d/dz+ (sign = +1) or d/dz- (sign = -1).
SuperField sf_dz(int sign, const SuperField& x);

/// Components with eta powers only, rewritten in the A_FS basis (eta- first).
AfsElement to_afs(const SuperField& x);
/// Inverse of to_afs on delta-free Grassmann elements.
SuperField from_afs(const AfsElement& x);

/// Exact value rational_part * pi^pi_power.
struct PiScalar {
  CycloScalar rational_part;
  int pi_power = 0;

  bool is_zero() const { return rational_part.is_zero(); }
  PiScalar& operator+=(const PiScalar& o);
  friend PiScalar operator+(PiScalar a, const PiScalar& b) { return a += b; }
  friend PiScalar operator*(PiScalar a, const CycloScalar& s) {
    a.rational_part *= s;
    return a;
  }
  friend bool operator==(const PiScalar& a, const PiScalar& b);
  PiScalar conj() const { return {rational_part.conj(), pi_power}; }
};

std::string to_string(const PiScalar& v);

/// Coefficients of the right action on the generators of superspace; the values on eta powers follow
/// from the n = 1 values by the twisted Leibniz rule:
///   R(E+) eta+^n = a1 [n] eta+^(n-1) + b1 q^(n-1) [2n]/[2] eta+^n eta-,  R(E+) eta-^n = c1 [n] eta-^(n+1),
///   R(E-) eta-^n = d1 [n] eta-^(n-1),  R(E+-) f = f_plus/minus eta+-^(p-1) df/dz+-,
///   R(P+-) f = p_plus/minus df/dz+-,   R(H) = h_sign i ((#eta+ - #eta-)/p + z+ d/dz+ - z- d/dz-).
struct ActionCoefficients {
  CycloScalar a1, b1, c1, d1;
  CycloScalar f_plus, f_minus;
  CycloScalar p_plus, p_minus;
  int h_sign = 1;
};

enum class ActionTable {
  Printed,    // the closed table as printed, with its H signs and i normalization of P+-
  Corrected,  // c1 = i q^(1/2), b1 = -(1+q^2) c1, h_sign = -1, p+- = i^p; a1, d1 and the tails as printed
};

ActionCoefficients action_coefficients(int p, ActionTable table);
std::string to_string(ActionTable t);

/// R(g) X for g in E+, E-, K, K^-1, H, P+, P- on arbitrary fields.
SuperField rop_gen(UfsGen g, const SuperField& x, ActionTable table = ActionTable::Corrected);
SuperField rop_gen(UfsGen g, const SuperField& x, const ActionCoefficients& c);
/// R(E+-)X R(K)Y + R(K^-1)X R(E+-)Y, R(K)X R(K)Y, or the derivation rule for H, P+-.
SuperField rop_extend(UfsGen g, const SuperField& x, const SuperField& y, ActionTable table = ActionTable::Corrected);
/// R(x) X with R(phi phi') = R(phi') R(phi).
SuperField rop_apply(const UfsElement& x, const SuperField& field, ActionTable table = ActionTable::Corrected);
SuperField rop_apply(const UfsElement& x, const SuperField& field, const ActionCoefficients& c);

/// Commutation of D^q+ past eta-hat-: Printed reads D+ eta-hat- = q^2 eta-hat- D+, Graded uses q^-2,
/// which is the reading under which T+ eta+^n eta-^m = q^n eta+^n eta-^m.
enum class QDerivBraid { Printed, Graded };

/// D^q+- (inverse_base = false) or D^(q^-1)+- on the superspace basis.
SuperField qderiv(int sign, const SuperField& x, bool inverse_base = false, QDerivBraid braid = QDerivBraid::Graded);
/// X eta+-.
SuperField eta_hat(int sign, const SuperField& x);
/// T+- = 1 - (1-q) eta-hat D^q, T+-^-1 = 1 - (1-q^-1) eta-hat D^(q^-1).
SuperField dilat(int sign, bool inverse, const SuperField& x, QDerivBraid braid = QDerivBraid::Graded);

enum class Realization {
  Printed,    // the q-derivative operators as printed, with the printed D-braiding
  Corrected,  // coefficients matching the corrected table; eta-power tails graded by T-+^-+1
};

std::string to_string(Realization r);

/// Differential realization of R(E+), R(E-) and R(K) = T-^-1 T+.
SuperField diff_real(UfsGen g, const SuperField& x, Realization r = Realization::Corrected);

/// Left invariant integral: q^-1 delta_{n,p-1} delta_{m,p-1} times the Gaussian moment of f_nm.
PiScalar invariant_integral(const SuperField& x);
/// (X, Y)_E = I_E(X Y*).
PiScalar hermitian_form(const SuperField& x, const SuperField& y);
/// S[Phi] = I_E(Phi* R(C) Phi).
PiScalar action(const SuperField& phi, const UfsElement& c, ActionTable table = ActionTable::Corrected);

/// Seeded random damped field with up to `terms` monomials.
SuperField random_superfield(int p, std::uint64_t seed, int terms = 4, int max_poly = 2);
/// Seeded random U_FS element of degree at most max_degree.
UfsElement random_ufs(int p, std::uint64_t seed, int max_degree = 2, int terms = 3);

struct SuperCheck {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string counterexample;
  bool passed() const { return failures == 0 && cases > 0; }
};

struct SuperReport {
  int p = 3;
  ActionTable table = ActionTable::Corrected;
  Realization realization = Realization::Corrected;
  std::vector<SuperCheck> checks;
  bool all_passed() const;
  const SuperCheck* find(const std::string& name) const;
};

/// Representation identities: anti-homomorphism, E+-^p = P+-, twisted Leibniz, diff_real = rop_gen,
/// q-derivative algebra, dilatations, the *-property and the hermitian symmetry of the form.
SuperReport verify_superspace(int p, int instances, std::uint64_t seed, ActionTable table = ActionTable::Corrected,
                              Realization realization = Realization::Corrected);

/// Left invariance I_E(R(g)X) = eps(g) I_E(X) and [R(C), R(g)] = 0 for C in {C1, C2}.
SuperReport verify_invariance(int p, int instances, std::uint64_t seed, ActionTable table = ActionTable::Corrected);

}  // namespace qfs
