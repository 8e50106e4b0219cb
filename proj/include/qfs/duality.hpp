#pragma once

// The bilinear pairing between U_FS and A_FS and its compatibility checks.

#include <string>
#include <vector>

#include "qfs/afs.hpp"
#include "qfs/ufs.hpp"

namespace qfs {

/// How the product of one algebra is matched with the coproduct of the other.
enum class PairingConvention {
  Straight,  // <xy, a> = <x, a1><y, a2>
  Flipped,   // <xy, a> = <y, a1><x, a2>
};

std::string to_string(PairingConvention c);

/// Normalization of the eta-sector weight in the pairing.
enum class PairingWeight {
  Printed,     // i^(n+m) q^((n-m)/2 - nm) [n]! [m]!
  Consistent,  // (-1)^n i^(n+m) q^((n-m)/2 + nm) [n]! [m]!, <P+, z+> = i^p, <P-, z-> = (-i)^p, <H, lam> = -i
};

std::string to_string(PairingWeight w);

/// <phi^{nmkrsl}, eta-^n' eta+^m' zeta(k') z+^t z-^s lam^l> on zeta-form basis elements.
struct ZetaMonomial {
  int n = 0, m = 0, k = 0, t = 0, s = 0, l = 0;
};
CycloScalar pair_basis(int p, const UfsMonomial& phi, const ZetaMonomial& a,
                       PairingWeight w = PairingWeight::Printed);

/// Pairing of a U_FS monomial with a delta-form A_FS monomial (delta^d expanded over zeta(k)).
CycloScalar pair(int p, const UfsMonomial& phi, const AfsMonomial& a, PairingWeight w = PairingWeight::Printed);
CycloScalar pair(const UfsElement& x, const AfsElement& a, PairingWeight w = PairingWeight::Printed);

/// eta-^n eta+^m zeta(k) z+^t z-^s lam^l as a delta-form element.
AfsElement zeta_form(int p, const ZetaMonomial& a);

struct PairingCheck {
  std::string identity;
  bool diagnostic = false;  // informational; not part of all_passed()
  bool passed = true;
  long long cases = 0;
  std::string counterexample;  // first failing instance, empty when passed
};

struct PairingReport {
  PairingConvention convention = PairingConvention::Straight;
  PairingWeight weight = PairingWeight::Consistent;
  int max_degree = 0;
  std::vector<PairingCheck> checks;
  bool all_passed() const;
};

/// Checks the duality identities on U_FS and A_FS basis monomials of total degree <= max_degree.
PairingReport verify_pairing_axioms(int p, int max_degree, PairingConvention convention,
                                    PairingWeight weight = PairingWeight::Consistent, const AfsConventions& conv = {});

/// Rank of the p^3 x p^3 pairing matrix between E-^n E+^m K^k and eta-^n eta+^m delta^d.
int finite_sector_rank(int p);

}  // namespace qfs
