#pragma once

// The fractional supersymmetry algebra U_FS generated by E+, E-, K, H, P+, P-,
// normal ordered on the PBW basis E-^n E+^m K^k P+^r P-^s H^l.

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qfs/lincomb.hpp"

namespace qfs {

struct UfsMonomial {
  int n = 0;  // E-
  int m = 0;  // E+
  int k = 0;  // K
  int r = 0;  // P+
  int s = 0;  // P-
  int l = 0;  // H

  auto operator<=>(const UfsMonomial&) const = default;
  int degree() const { return n + m + k + r + s + l; }
};

using UfsElement = LinComb<UfsMonomial>;
using UfsTensor = Tensor<UfsMonomial, 2>;
using UfsTensor3 = Tensor<UfsMonomial, 3>;

enum class UfsGen { Em, Ep, K, Kinv, H, Pp, Pm };

using UfsWord = std::vector<std::pair<UfsGen, int>>;

std::string to_string(UfsGen g);
/// Full text form "E-^2 E+^1 K^0 P+^1 P-^0 H^3".
std::string to_string(const UfsMonomial& mono);
std::string to_string(const UfsElement& x);

UfsElement ufs_unit(int p);
UfsElement ufs_gen(int p, UfsGen g);
UfsElement ufs_mono(int p, const UfsMonomial& mono);

/// Normal form of x * g for a basis monomial x.
UfsElement ufs_mul_gen_right(int p, const UfsMonomial& x, UfsGen g);
/// Normal form of g * x for a basis monomial x; an independent rewriting path.
UfsElement ufs_mul_gen_left(int p, UfsGen g, const UfsMonomial& x);

/// Normalizes a word left to right (repeated right multiplication by generators).
UfsElement ufs_normalize(int p, std::span<const std::pair<UfsGen, int>> word);
/// Normalizes a word right to left (repeated left multiplication by generators).
UfsElement ufs_normalize_rtl(int p, std::span<const std::pair<UfsGen, int>> word);

UfsElement ufs_mul(const UfsElement& a, const UfsElement& b);
/// Word of generators spelling out a basis monomial.
UfsWord ufs_word(const UfsMonomial& mono);

UfsTensor ufs_coproduct(const UfsElement& x);
UfsTensor ufs_coproduct(int p, const UfsMonomial& mono);
CycloScalar ufs_counit(const UfsElement& x);
CycloScalar ufs_counit(int p, const UfsMonomial& mono);
UfsElement ufs_antipode(const UfsElement& x);
UfsElement ufs_antipode(int p, const UfsMonomial& mono);
UfsElement ufs_star(const UfsElement& x);

UfsTensor ufs_tensor_mul(const UfsTensor& a, const UfsTensor& b);
UfsTensor3 ufs_tensor_mul(const UfsTensor3& a, const UfsTensor3& b);
/// m: A (x) A -> A.
UfsElement ufs_multiply_legs(const UfsTensor& t);

enum class Casimir { C1, C2 };

/// C2 = P+ P-; C1 = E- E+ + (q^(1/2) K - q^(-1/2) K^-1)^2 / (q - q^-1)^2, the central quadratic element.
UfsElement casimir(int p, Casimir which);
/// C1 exactly as printed, E- E+ + (q K - q^-1 K^-1)^2 / (q^2 - q^-2)^2. Not central; kept for comparison.
UfsElement casimir_c1_printed(int p);

/// True iff x commutes with E+, E-, K, H, P+, P-.
bool is_central(const UfsElement& x);

}  // namespace qfs
