#include <random>

#include "doctest.h"
#include "qfs/errors.hpp"
#include "qfs/qcomb.hpp"
#include "qfs/ufs.hpp"
#include "test_support.hpp"

namespace doctest {
template <>
struct StringMaker<qfs::UfsElement> {
  static String convert(const qfs::UfsElement& x) { return qfs::to_string(x).c_str(); }
};
}  // namespace doctest

using namespace qfs;

namespace {

UfsElement gen(int p, UfsGen g) { return ufs_gen(p, g); }
UfsElement mono(int p, int n, int m, int k, int r, int s, int l) { return ufs_mono(p, {n, m, k, r, s, l}); }
CycloScalar q(int p, int e = 1) { return CycloScalar::q_power(p, e); }

UfsElement word(int p, const UfsWord& w) { return ufs_normalize(p, w); }

UfsElement random_element(std::mt19937& rng, int p, int max_degree = 3) {
  std::uniform_int_distribution<int> nterms(1, 3);
  UfsElement x(p);
  const int t = nterms(rng);
  for (int j = 0; j < t; ++j) {
    UfsMonomial mono;
    int budget = max_degree;
    int* slots[] = {&mono.n, &mono.m, &mono.k, &mono.r, &mono.s, &mono.l};
    for (int* s : slots) {
      std::uniform_int_distribution<int> d(0, budget);
      *s = d(rng);
      budget -= *s;
    }
    std::shuffle(std::begin(slots), std::end(slots), rng);
    x += ufs_normalize(p, ufs_word(mono)) * qfs::testing::random_scalar(rng, p, 20);
  }
  return x;
}

UfsWord random_word(std::mt19937& rng, std::size_t len) {
  static const UfsGen gens[] = {UfsGen::Em, UfsGen::Ep, UfsGen::K, UfsGen::Kinv, UfsGen::H, UfsGen::Pp, UfsGen::Pm};
  std::uniform_int_distribution<int> pick(0, 6);
  std::uniform_int_distribution<int> ex(1, 2);
  UfsWord w;
  for (std::size_t i = 0; i < len; ++i) w.push_back({gens[pick(rng)], ex(rng)});
  return w;
}

std::vector<UfsElement> generators(int p) {
  return {gen(p, UfsGen::Ep), gen(p, UfsGen::Em), gen(p, UfsGen::K),  gen(p, UfsGen::Kinv),
          gen(p, UfsGen::H),  gen(p, UfsGen::Pp), gen(p, UfsGen::Pm)};
}

// (D (x) id) D and (id (x) D) D on an element
UfsTensor3 delta_left(const UfsElement& x) {
  return expand_leg(ufs_coproduct(x), 0, [&](const UfsMonomial& m) { return ufs_coproduct(x.order(), m); });
}
UfsTensor3 delta_right(const UfsElement& x) {
  return expand_leg(ufs_coproduct(x), 1, [&](const UfsMonomial& m) { return ufs_coproduct(x.order(), m); });
}

UfsElement counit_left(const UfsTensor& t, int p) {
  UfsElement r(p);
  for (const auto& [k, c] : t.terms()) r += ufs_mono(p, k[1]) * (c * ufs_counit(p, k[0]));
  return r;
}
UfsElement counit_right(const UfsTensor& t, int p) {
  UfsElement r(p);
  for (const auto& [k, c] : t.terms()) r += ufs_mono(p, k[0]) * (c * ufs_counit(p, k[1]));
  return r;
}

void check_hopf(const UfsElement& x) {
  const int p = x.order();
  CHECK(delta_left(x) == delta_right(x));
  const UfsTensor d = ufs_coproduct(x);
  CHECK(counit_left(d, p) == x);
  CHECK(counit_right(d, p) == x);
  const UfsElement unit_eps = ufs_unit(p) * ufs_counit(x);
  const auto s = [p](const UfsMonomial& m) { return ufs_antipode(p, m); };
  CHECK(ufs_multiply_legs(apply_on_leg(d, 0, s)) == unit_eps);
  CHECK(ufs_multiply_legs(apply_on_leg(d, 1, s)) == unit_eps);
}

}  // namespace

TEST_CASE("normal ordering examples at p = 3") {
  const int p = 3;
  CHECK(word(p, {{UfsGen::K, 1}, {UfsGen::Ep, 1}}) == mono(p, 0, 1, 1, 0, 0, 0) * q(p));
  CHECK(word(p, {{UfsGen::H, 1}, {UfsGen::Pp, 1}}) ==
        mono(p, 0, 0, 0, 1, 0, 1) - mono(p, 0, 0, 0, 1, 0, 0) * CycloScalar::imag(p));
  CHECK(word(p, {{UfsGen::Ep, 1}, {UfsGen::Ep, 1}, {UfsGen::Ep, 1}}) == gen(p, UfsGen::Pp));

  const CycloScalar c = (q(p) - q(p, -1)).inverse();
  const UfsElement expect = mono(p, 1, 1, 0, 0, 0, 0) + mono(p, 0, 0, 2, 0, 0, 0) * c - mono(p, 0, 0, p - 2, 0, 0, 0) * c;
  CHECK(ufs_mul(gen(p, UfsGen::Ep), gen(p, UfsGen::Em)) == expect);
}

TEST_CASE("text forms") {
  CHECK(to_string(UfsMonomial{2, 1, 0, 1, 0, 3}) == "E-^2 E+^1 K^0 P+^1 P-^0 H^3");
}

TEST_CASE("invalid words") {
  CHECK_THROWS_AS(word(3, {{UfsGen::Ep, -1}}), NegativeExponent);
  CHECK_THROWS_AS(word(3, {{UfsGen::H, -2}}), NegativeExponent);
  CHECK_NOTHROW(word(3, {{UfsGen::K, -4}}));
  CHECK_THROWS_AS(ufs_mul(gen(3, UfsGen::K), gen(5, UfsGen::K)), IncompatibleModulus);
}

TEST_CASE("defining relations are rewriting fixed points") {
  for (int p : {3, 5, 7}) {
    CAPTURE(p);
    const auto E = [p](UfsGen g) { return gen(p, g); };
    const auto mul = [](const UfsElement& a, const UfsElement& b) { return ufs_mul(a, b); };
    const auto comm = [&](const UfsElement& a, const UfsElement& b) { return mul(a, b) - mul(b, a); };
    const CycloScalar i = CycloScalar::imag(p);
    CHECK(comm(E(UfsGen::Pp), E(UfsGen::Pm)).is_zero());
    CHECK(comm(E(UfsGen::Pp), E(UfsGen::H)) == E(UfsGen::Pp) * i);
    CHECK(comm(E(UfsGen::Pm), E(UfsGen::H)) == E(UfsGen::Pm) * (-i));
    CHECK(mul(mul(E(UfsGen::K), E(UfsGen::Ep)), E(UfsGen::Kinv)) == E(UfsGen::Ep) * q(p));
    CHECK(mul(mul(E(UfsGen::K), E(UfsGen::Em)), E(UfsGen::Kinv)) == E(UfsGen::Em) * q(p, -1));
    const UfsElement k2 = word(p, {{UfsGen::K, 2}});
    const UfsElement km2 = word(p, {{UfsGen::K, -2}});
    CHECK(comm(E(UfsGen::Ep), E(UfsGen::Em)) == (k2 - km2) * (q(p) - q(p, -1)).inverse());
    CHECK(comm(E(UfsGen::K), E(UfsGen::H)).is_zero());
    const CycloScalar ip = i * CycloScalar::rational(p, Rational(1, p));
    CHECK(comm(E(UfsGen::Ep), E(UfsGen::H)) == E(UfsGen::Ep) * ip);
    CHECK(comm(E(UfsGen::Em), E(UfsGen::H)) == E(UfsGen::Em) * (-ip));
    CHECK(mul(E(UfsGen::K), E(UfsGen::Kinv)) == ufs_unit(p));
    CHECK(word(p, {{UfsGen::Ep, p}}) == E(UfsGen::Pp));
    CHECK(word(p, {{UfsGen::Em, p}}) == E(UfsGen::Pm));
    CHECK(word(p, {{UfsGen::K, p}}) == ufs_unit(p));
    CHECK(word(p, {{UfsGen::K, -1}}) == word(p, {{UfsGen::K, p - 1}}));
    // P+- commute with everything but H
    CHECK_FALSE(is_central(E(UfsGen::Pp)));
    CHECK(comm(E(UfsGen::Pp), E(UfsGen::Ep)).is_zero());
    CHECK(comm(E(UfsGen::Pp), E(UfsGen::Em)).is_zero());
    CHECK(comm(E(UfsGen::Pm), E(UfsGen::Ep)).is_zero());
    CHECK(comm(E(UfsGen::Pp), E(UfsGen::K)).is_zero());
  }
}

TEST_CASE("unit and associativity") {
  std::mt19937 rng(3);
  for (int p : {3, 5}) {
    for (int trial = 0; trial < 10; ++trial) {
      const UfsElement a = random_element(rng, p);
      const UfsElement b = random_element(rng, p);
      const UfsElement c = random_element(rng, p);
      CHECK(ufs_mul(ufs_unit(p), a) == a);
      CHECK(ufs_mul(a, ufs_unit(p)) == a);
      CHECK(ufs_mul(ufs_mul(a, b), c) == ufs_mul(a, ufs_mul(b, c)));
      CHECK(ufs_mul(a, b + c) == ufs_mul(a, b) + ufs_mul(a, c));
    }
  }
  const int p = 3;
  const UfsElement lhs = ufs_mul(ufs_mul(gen(p, UfsGen::Ep), gen(p, UfsGen::Em)), gen(p, UfsGen::K));
  const UfsElement rhs = ufs_mul(gen(p, UfsGen::Ep), ufs_mul(gen(p, UfsGen::Em), gen(p, UfsGen::K)));
  CHECK((lhs - rhs).is_zero());
}

TEST_CASE("confluence of left-to-right and right-to-left rewriting") {
  std::mt19937 rng(17);
  for (int p : {3, 5, 7}) {
    CAPTURE(p);
    for (int trial = 0; trial < 40; ++trial) {
      const UfsWord w = random_word(rng, 1 + trial % 8);
      CHECK(ufs_normalize(p, w) == ufs_normalize_rtl(p, w));
    }
  }
}

TEST_CASE("Hopf structure on generators") {
  const int p = 3;
  CHECK(ufs_coproduct(gen(p, UfsGen::K)) == outer(gen(p, UfsGen::K), gen(p, UfsGen::K)));
  CHECK(ufs_antipode(gen(p, UfsGen::Ep)) == gen(p, UfsGen::Ep) * (-q(p)));
  CHECK(ufs_antipode(gen(p, UfsGen::Em)) == gen(p, UfsGen::Em) * (-q(p, -1)));
  CHECK(ufs_counit(gen(p, UfsGen::H)).is_zero());
  CHECK(ufs_counit(gen(p, UfsGen::K)) == CycloScalar::one(p));
  CHECK(ufs_coproduct(gen(p, UfsGen::Ep)) ==
        outer(gen(p, UfsGen::Ep), gen(p, UfsGen::K)) + outer(gen(p, UfsGen::Kinv), gen(p, UfsGen::Ep)));
  for (int pp : {3, 5, 7}) {
    CAPTURE(pp);
    for (const auto& g : generators(pp)) check_hopf(g);
  }
  // the coproduct of E+^p agrees with that of P+
  CHECK(ufs_coproduct(word(5, {{UfsGen::Ep, 5}})) == ufs_coproduct(gen(5, UfsGen::Pp)));
}

TEST_CASE("Hopf axioms on random degree <= 3 elements") {
  std::mt19937 rng(23);
  for (int p : {3, 5, 7}) {
    CAPTURE(p);
    for (int trial = 0; trial < 6; ++trial) check_hopf(random_element(rng, p));
  }
}

TEST_CASE("coproduct and counit are morphisms, antipode is an anti-morphism") {
  std::mt19937 rng(29);
  for (int p : {3, 5}) {
    for (int trial = 0; trial < 6; ++trial) {
      const UfsElement a = random_element(rng, p, 2);
      const UfsElement b = random_element(rng, p, 2);
      const UfsElement ab = ufs_mul(a, b);
      CHECK(ufs_coproduct(ab) == ufs_tensor_mul(ufs_coproduct(a), ufs_coproduct(b)));
      CHECK(ufs_counit(ab) == ufs_counit(a) * ufs_counit(b));
      CHECK(ufs_antipode(ab) == ufs_mul(ufs_antipode(b), ufs_antipode(a)));
    }
  }
}

TEST_CASE("star structure") {
  const int p = 3;
  const CycloScalar i = CycloScalar::imag(p);
  CHECK(ufs_star(gen(p, UfsGen::Ep) * i) == gen(p, UfsGen::Ep) * (-i));
  CHECK(ufs_star(ufs_mul(gen(p, UfsGen::Ep), gen(p, UfsGen::Em))) == ufs_mul(gen(p, UfsGen::Em), gen(p, UfsGen::Ep)));
  std::mt19937 rng(31);
  for (int pp : {3, 5, 7}) {
    for (int trial = 0; trial < 10; ++trial) {
      const UfsElement a = random_element(rng, pp);
      const UfsElement b = random_element(rng, pp);
      CHECK(ufs_star(ufs_star(a)) == a);
      CHECK(ufs_star(ufs_mul(a, b)) == ufs_mul(ufs_star(b), ufs_star(a)));
    }
    // star maps each defining relation to a valid identity
    const auto E = [pp](UfsGen g) { return gen(pp, g); };
    const UfsElement lhs = ufs_star(ufs_mul(E(UfsGen::Ep), E(UfsGen::Em)) - ufs_mul(E(UfsGen::Em), E(UfsGen::Ep)));
    const UfsElement rhs =
        ufs_star((word(pp, {{UfsGen::K, 2}}) - word(pp, {{UfsGen::K, -2}})) * (q(pp) - q(pp, -1)).inverse());
    CHECK(lhs == rhs);
    CHECK(ufs_star(ufs_mul(ufs_mul(E(UfsGen::K), E(UfsGen::Ep)), E(UfsGen::Kinv))) == ufs_star(E(UfsGen::Ep) * q(pp)));
    CHECK(ufs_star(ufs_mul(E(UfsGen::Pp), E(UfsGen::H)) - ufs_mul(E(UfsGen::H), E(UfsGen::Pp))) ==
          ufs_star(E(UfsGen::Pp) * CycloScalar::imag(pp)));
  }
}

TEST_CASE("Casimir elements") {
  for (int p : {3, 5, 7}) {
    CAPTURE(p);
    CHECK(casimir(p, Casimir::C2) == mono(p, 0, 0, 0, 1, 1, 0));
    CHECK(is_central(casimir(p, Casimir::C1)));
    CHECK(is_central(casimir(p, Casimir::C2)));
    CHECK_FALSE(is_central(casimir_c1_printed(p)));
    CHECK_FALSE(is_central(gen(p, UfsGen::Ep)));
    CHECK(is_central(ufs_unit(p)));
    const UfsElement c1 = casimir(p, Casimir::C1);
    CHECK(ufs_mul(c1, gen(p, UfsGen::Ep)) - ufs_mul(gen(p, UfsGen::Ep), c1) == UfsElement(p));
  }
  // explicit form at p = 3: E-E+ + (q^2 K - q^-2 K^-1)^2 / (q - q^-1)^2 with q^(1/2) = q^2
  const int p = 3;
  const CycloScalar d2 = ((q(p) - q(p, -1)) * (q(p) - q(p, -1))).inverse();
  const UfsElement expect = mono(p, 1, 1, 0, 0, 0, 0) + mono(p, 0, 0, 2, 0, 0, 0) * (q(p) * d2) -
                            ufs_unit(p) * (CycloScalar::integer(p, 2) * d2) + mono(p, 0, 0, 1, 0, 0, 0) * (q(p, -1) * d2);
  CHECK(casimir(p, Casimir::C1) == expect);
}
