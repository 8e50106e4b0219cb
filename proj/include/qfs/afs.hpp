#pragma once

// The dual function algebra A_FS generated by eta+, eta-, delta, z+, z-, lambda,
// with group-like charges exp(u lambda/p). Basis order eta-^n eta+^m delta^d z+^t z-^s lam^l exp(u lam/p).

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qfs/lincomb.hpp"

namespace qfs {

struct AfsMonomial {
  int n = 0;  // eta-
  int m = 0;  // eta+
  int d = 0;  // delta
  int t = 0;  // z+
  int s = 0;  // z-
  int l = 0;  // lambda
  int u = 0;  // exp(u lambda / p)

  auto operator<=>(const AfsMonomial&) const = default;
  bool is_grassmann() const { return t == 0 && s == 0 && l == 0 && u == 0; }
};

using AfsElement = LinComb<AfsMonomial>;
using AfsTensor = Tensor<AfsMonomial, 2>;
using AfsTensor3 = Tensor<AfsMonomial, 3>;

enum class AfsGen { EtaP, EtaM, Delta, DeltaInv, Zp, Zm, Lam, Exp };

/// One word entry; for Exp the exponent is the charge u of exp(u lambda/p).
using AfsWord = std::vector<std::pair<AfsGen, int>>;

/// Which index carries the exponential charge inside the sums of Delta(z+-).
enum class ZChargeIndex {
  K,        // exp(+-k lambda/p)
  PMinusK,  // exp(+-(p-k) lambda/p)
  None,     // no charge
};

/// Antipode of z+-.
enum class ZAntipode {
  Printed,  // S(z+-) = -z+-
  Twisted,  // S(z+-) = -exp(-+lambda) z+-
};

/// Coefficient of delta^-1 eta+^2 (x) eta-^2 delta in Delta(delta).
enum class DeltaQuadratic {
  Printed,        // q^-2
  Coassociative,  // q^-4
};

/// Antipode of eta+-.
enum class EtaAntipode {
  Printed,   // S(eta+-) = -delta^-+1 eta+-
  Complete,  // S(eta+) = -delta^-1 eta+ (1 + eta+ eta-), S(eta-) = -delta eta- (1 + q^2 eta+ eta-)^-1
};

/// Exponential charges in Delta(delta) and Delta(eta+-).
enum class EtaCharge {
  Omitted,  // as printed, no exp(u lambda/p) factors
  Graded,   // each left leg carries exp(g lambda/p), g = (#eta+ - #eta-) of the right leg
};

struct AfsConventions {
  ZChargeIndex charge = ZChargeIndex::K;
  EtaCharge eta_charge = EtaCharge::Graded;
  ZAntipode z_antipode = ZAntipode::Twisted;
  DeltaQuadratic delta_quadratic = DeltaQuadratic::Coassociative;
  EtaAntipode eta_antipode = EtaAntipode::Complete;
};

std::string to_string(AfsGen g);
/// Text form "eta-^n eta+^m delta^d z+^t z-^s lam^l exp(u lam/p)".
std::string to_string(const AfsMonomial& mono);
std::string to_string(const AfsElement& x);

AfsElement afs_unit(int p);
AfsElement afs_gen(int p, AfsGen g);
AfsElement afs_mono(int p, const AfsMonomial& mono);

/// Product of two basis monomials (zero when an eta power reaches p).
AfsElement afs_mul(int p, const AfsMonomial& a, const AfsMonomial& b);
AfsElement afs_mul(const AfsElement& a, const AfsElement& b);
AfsElement afs_pow(const AfsElement& a, int e);
AfsElement afs_normalize(int p, std::span<const std::pair<AfsGen, int>> word);
AfsWord afs_word(const AfsMonomial& mono);

/// zeta(k) = (1/p) sum_n q^(-nk) delta^n.
AfsElement zeta(int p, int k);
/// prod_{j=1..k} (1 - a q^(base_exp (j-1))).
AfsElement afs_pochhammer(const AfsElement& a, int base_exp, int k);

AfsTensor afs_coproduct(int p, const AfsMonomial& mono, const AfsConventions& conv = {});
AfsTensor afs_coproduct(const AfsElement& x, const AfsConventions& conv = {});
/// Coproduct of a single generator.
AfsTensor afs_gen_coproduct(int p, AfsGen g, const AfsConventions& conv = {});
CycloScalar afs_counit(int p, const AfsMonomial& mono);
CycloScalar afs_counit(const AfsElement& x);
AfsElement afs_antipode(int p, const AfsMonomial& mono, const AfsConventions& conv = {});
AfsElement afs_antipode(const AfsElement& x, const AfsConventions& conv = {});
AfsElement afs_star(const AfsElement& x);

AfsTensor afs_tensor_mul(const AfsTensor& a, const AfsTensor& b);
AfsElement afs_multiply_legs(const AfsTensor& t);

struct AfsAxiomCheck {
  bool coassociative = false;
  bool counit = false;
  bool antipode = false;
  bool all() const { return coassociative && counit && antipode; }
};

/// Coassociativity, both counit laws and both antipode laws on a single generator.
AfsAxiomCheck afs_check_axioms(int p, AfsGen g, const AfsConventions& conv = {});

/// True iff Delta respects eta- eta+ = q^2 eta+ eta-, eta+- delta = q^2 delta eta+-, eta+-^p = 0, delta^p = 1
/// and the centrality of z+-.
bool afs_coproduct_respects_relations(int p, const AfsConventions& conv = {});

/// I(eta+^(p-1) eta-^(p-1)) = q^-1 on the delta^0 component; zero on other eta monomials.
CycloScalar grassmann_integral(const AfsElement& x);

}  // namespace qfs
