#pragma once

// Expression mini-language for U_FS and A_FS elements.
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := atom ('^' signed-int)?
//   atom   := integer | integer '/' integer | i | q | mu | generator | '(' expr ')'
// Generators: E+ E- K H P+ P- (ufs); eta+ eta- delta z+ z- lam exp(k lam/p) (afs).
// K^-1 and delta^-1 are the powers K^(-1), delta^(-1).

#include <cstddef>
#include <string>
#include <vector>

#include "qfs/afs.hpp"
#include "qfs/cyclo.hpp"
#include "qfs/ufs.hpp"

namespace qfs {

enum class Algebra { Ufs, Afs };

std::string to_string(Algebra a);
Algebra algebra_from_string(const std::string& s);

struct Expr {
  enum class Kind { Number, Imag, Q, Mu, Generator, Sum, Product, Power };

  Kind kind = Kind::Number;
  Rational number = 0;        // Number
  int generator = 0;          // Generator: UfsGen or AfsGen as int
  int charge = 0;             // exp(charge lam/p)
  int exponent = 1;           // Power
  std::vector<Expr> children; // Sum, Product, Power (one child)
  std::vector<int> signs;     // Sum: +1 or -1 per child
  std::size_t position = 0;   // offset of the first character

  /// Structural equality; positions are ignored.
  friend bool operator==(const Expr& a, const Expr& b);
};

/// Throws SyntaxError (with the offending offset) or UnknownGenerator.
Expr parse(const std::string& text, Algebra algebra);

/// Minimal-parenthesis text form; parse(print(e)) == e.
std::string print(const Expr& e, Algebra algebra);

/// Normal ordered value. Negative powers need an invertible base (K, delta, exp charges, scalars).
UfsElement evaluate_ufs(const Expr& e, int p);
AfsElement evaluate_afs(const Expr& e, int p);

UfsElement parse_ufs(const std::string& text, int p);
AfsElement parse_afs(const std::string& text, int p);

/// Canonical expression text of a normal ordered element, e.g. "(2/3) + (-(1/3)*q)*K^2 + E-*E+".
std::string to_expression(const UfsElement& x);
std::string to_expression(const AfsElement& x);

}  // namespace qfs
