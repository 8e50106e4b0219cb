#include <random>

#include "doctest.h"
#include "qfs/errors.hpp"
#include "qfs/expr.hpp"
#include "qfs/superspace.hpp"

using namespace qfs;

namespace {

std::size_t error_position(const std::string& text, Algebra a) {
  try {
    parse(text, a);
  } catch (const SyntaxError& e) {
    return e.position;
  }
  return std::string::npos;
}

Expr random_expr(std::mt19937_64& rng, Algebra alg, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 7 : 3);
  Expr e;
  switch (pick(rng)) {
    case 0: {
      e.kind = Expr::Kind::Number;
      std::uniform_int_distribution<int> num(0, 9), den(1, 4);
      e.number = Rational(num(rng), den(rng));
      e.number.canonicalize();
      break;
    }
    case 1: e.kind = std::uniform_int_distribution<int>(0, 2)(rng) == 0 ? Expr::Kind::Imag : Expr::Kind::Q; break;
    case 2:
    case 3: {
      e.kind = Expr::Kind::Generator;
      if (alg == Algebra::Ufs) {
        const UfsGen gens[] = {UfsGen::Ep, UfsGen::Em, UfsGen::K, UfsGen::H, UfsGen::Pp, UfsGen::Pm};
        e.generator = static_cast<int>(gens[std::uniform_int_distribution<int>(0, 5)(rng)]);
      } else {
        const AfsGen gens[] = {AfsGen::EtaP, AfsGen::EtaM, AfsGen::Delta, AfsGen::Zp, AfsGen::Zm, AfsGen::Lam, AfsGen::Exp};
        const AfsGen g = gens[std::uniform_int_distribution<int>(0, 6)(rng)];
        e.generator = static_cast<int>(g);
        if (g == AfsGen::Exp) e.charge = std::uniform_int_distribution<int>(-3, 3)(rng);
      }
      break;
    }
    case 4:
    case 5: {
      e.kind = Expr::Kind::Sum;
      const int n = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int j = 0; j < n; ++j) {
        e.children.push_back(random_expr(rng, alg, depth - 1));
        e.signs.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1);
      }
      // a single positive term is not a Sum node
      if (n == 1) e.signs[0] = -1;
      break;
    }
    case 6: {
      e.kind = Expr::Kind::Product;
      const int n = std::uniform_int_distribution<int>(2, 3)(rng);
      for (int j = 0; j < n; ++j) e.children.push_back(random_expr(rng, alg, depth - 1));
      break;
    }
    default:
      e.kind = Expr::Kind::Power;
      e.exponent = std::uniform_int_distribution<int>(-2, 3)(rng);
      e.children.push_back(random_expr(rng, alg, depth - 1));
  }
  return e;
}

AfsElement random_afs(int p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> e(0, p - 1), small(0, 2), coef(-3, 3), qe(0, p - 1), u(-2, 2);
  AfsElement x(p);
  for (int j = 0; j < 4; ++j) {
    const AfsMonomial m{e(rng), e(rng), e(rng), small(rng), small(rng), small(rng), u(rng)};
    x += AfsElement::term(p, m, CycloScalar::gauss(p, {coef(rng), coef(rng)}) * CycloScalar::q_power(p, qe(rng)));
  }
  return x;
}

}  // namespace

TEST_CASE("spec examples") {
  const Expr a = parse("E+ * E- - E- * E+", Algebra::Ufs);
  REQUIRE(a.kind == Expr::Kind::Sum);
  CHECK(a.children.size() == 2);
  CHECK(a.signs == std::vector<int>{1, -1});
  CHECK(a.children[0].kind == Expr::Kind::Product);
  CHECK(a.children[1].kind == Expr::Kind::Product);

  const Expr b = parse("q^2 * eta+ ^ 2 * delta", Algebra::Afs);
  REQUIRE(b.kind == Expr::Kind::Product);
  CHECK(b.children.size() == 3);
  CHECK(b.children[1].kind == Expr::Kind::Power);
  CHECK(b.children[1].exponent == 2);

  CHECK(error_position("eta+ ^^ 2", Algebra::Afs) == 6);
}

TEST_CASE("syntax errors carry positions") {
  CHECK(error_position("E+ * (E- + K", Algebra::Ufs) == 12);
  CHECK(error_position("E+ * ", Algebra::Ufs) == 5);
  CHECK(error_position("2/0", Algebra::Ufs) == 2);
  CHECK(error_position("K^x", Algebra::Ufs) == 2);
  CHECK(error_position("K^2^3", Algebra::Ufs) == 3);
  CHECK(error_position("E+ )", Algebra::Ufs) == 3);
  CHECK(error_position("exp(2 lum/p)", Algebra::Afs) == 6);
  CHECK(error_position("eta+ # 2", Algebra::Afs) == 5);
  CHECK_THROWS_AS(parse("E+", Algebra::Afs), UnknownGenerator);
  CHECK_THROWS_AS(parse("eta+", Algebra::Ufs), UnknownGenerator);
  CHECK_THROWS_AS(parse("foo + 1", Algebra::Ufs), UnknownGenerator);
}

TEST_CASE("evaluation") {
  const int p = 3;
  const UfsElement comm = parse_ufs("E+ * E- - E- * E+", p);
  const UfsElement rhs = parse_ufs("(K^2 - K^-2)", p) * (CycloScalar::q_power(p, 1) - CycloScalar::q_power(p, -1)).inverse();
  CHECK(comm == rhs);
  CHECK(parse_ufs("E+^3", p) == ufs_gen(p, UfsGen::Pp));
  CHECK(parse_ufs("K^-1", p) == ufs_gen(p, UfsGen::Kinv));
  CHECK(parse_ufs("K H - H K", p).is_zero());
  CHECK(parse_ufs("2 i mu", p) == ufs_unit(p) * (CycloScalar::integer(p, 2) * CycloScalar::imag(p) * CycloScalar::mu_power(p, 1)));
  CHECK(parse_ufs("(q)^-1", p) == ufs_unit(p) * CycloScalar::q_power(p, -1));
  CHECK_THROWS_AS(parse_ufs("P+^-1", p), NegativeExponent);
  CHECK_THROWS_AS(parse_ufs("(K + 1)^-1", p), NegativeExponent);

  CHECK(parse_afs("eta- eta+ - q^2 eta+ eta-", p).is_zero());
  CHECK(parse_afs("eta+^3", p).is_zero());
  CHECK(parse_afs("delta^-1 delta", p) == afs_unit(p));
  CHECK(parse_afs("delta^-1", p) == afs_gen(p, AfsGen::DeltaInv));
  CHECK(parse_afs("exp(lam/p)", p) == afs_gen(p, AfsGen::Exp));
  CHECK(parse_afs("exp(-lam/p) exp(1*lam/p)", p) == afs_unit(p));
  CHECK(parse_afs("exp(2 lam/p)^-1", p) == parse_afs("exp(-2 lam/p)", p));
}

TEST_CASE("parse, print, parse is the identity on trees") {
  std::mt19937_64 rng(2024);
  for (Algebra alg : {Algebra::Ufs, Algebra::Afs})
    for (int j = 0; j < 400; ++j) {
      const Expr e = random_expr(rng, alg, 3);
      const std::string text = print(e, alg);
      CAPTURE(text);
      CHECK(parse(text, alg) == e);
      CHECK(print(parse(text, alg), alg) == text);
    }
}

TEST_CASE("canonical forms round-trip") {
  for (int p : {3, 5}) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const UfsElement x = random_ufs(p, seed, 3, 4);
      const std::string t = to_expression(x);
      CAPTURE(t);
      CHECK(parse_ufs(t, p) == x);
      CHECK(to_expression(parse_ufs(t, p)) == t);

      const AfsElement a = random_afs(p, seed);
      const std::string u = to_expression(a);
      CAPTURE(u);
      CHECK(parse_afs(u, p) == a);
      CHECK(to_expression(parse_afs(u, p)) == u);
    }
    const UfsElement c1 = casimir(p, Casimir::C1);
    CHECK(parse_ufs(to_expression(c1), p) == c1);
  }
  CHECK(to_expression(UfsElement(3)) == "0");
  CHECK(parse_ufs("0", 3).is_zero());
}
