#include <random>

#include "doctest.h"
#include "qfs/afs.hpp"
#include "qfs/errors.hpp"
#include "qfs/qcomb.hpp"
#include "test_support.hpp"

namespace doctest {
template <>
struct StringMaker<qfs::AfsElement> {
  static String convert(const qfs::AfsElement& x) { return qfs::to_string(x).c_str(); }
};
}  // namespace doctest

using namespace qfs;

namespace {

CycloScalar q(int p, int e = 1) { return CycloScalar::q_power(p, e); }
AfsElement g(int p, AfsGen x) { return afs_gen(p, x); }
AfsElement mono(int p, int n, int m, int d = 0) { return afs_mono(p, AfsMonomial{n, m, d, 0, 0, 0, 0}); }

const AfsGen kGenerators[] = {AfsGen::Delta, AfsGen::EtaP, AfsGen::EtaM, AfsGen::Lam, AfsGen::Zp, AfsGen::Zm};

AfsElement random_element(std::mt19937& rng, int p) {
  std::uniform_int_distribution<int> idx(0, p - 1), small(0, 2), charge(-2, 2), nterms(1, 3);
  AfsElement x(p);
  for (int j = nterms(rng); j > 0; --j) {
    AfsMonomial mono{idx(rng), idx(rng), idx(rng), small(rng), small(rng), small(rng), charge(rng)};
    x += afs_mono(p, mono) * qfs::testing::random_scalar(rng, p, 20);
  }
  return x;
}

}  // namespace

TEST_CASE("afs rewriting examples") {
  const int p = 3;
  // basis order stores eta- first, so eta- eta+ is already normal and eta+ eta- picks q^-2
  CHECK(afs_mul(g(p, AfsGen::EtaM), g(p, AfsGen::EtaP)) == mono(p, 1, 1));
  CHECK(afs_mul(g(p, AfsGen::EtaM), g(p, AfsGen::EtaP)) == afs_mul(g(p, AfsGen::EtaP), g(p, AfsGen::EtaM)) * q(p, 2));
  CHECK(afs_mul(g(p, AfsGen::Delta), g(p, AfsGen::EtaP)) == mono(p, 0, 1, 1) * q(p, -2));
  CHECK(afs_mul(g(p, AfsGen::EtaP), g(p, AfsGen::Delta)) == mono(p, 0, 1, 1));
  CHECK(afs_pow(g(p, AfsGen::EtaP), p).is_zero());
  CHECK(afs_pow(g(p, AfsGen::EtaM), p).is_zero());
  CHECK(afs_pow(g(p, AfsGen::Delta), p) == afs_unit(p));
  CHECK(afs_mul(g(p, AfsGen::Delta), g(p, AfsGen::DeltaInv)) == afs_unit(p));
  const AfsElement e1 = afs_normalize(p, AfsWord{{AfsGen::Exp, 2}});
  const AfsElement e2 = afs_normalize(p, AfsWord{{AfsGen::Exp, -5}});
  CHECK(afs_mul(e1, e2) == afs_normalize(p, AfsWord{{AfsGen::Exp, -3}}));
  CHECK(afs_mul(g(p, AfsGen::Zp), g(p, AfsGen::EtaM)) == afs_mul(g(p, AfsGen::EtaM), g(p, AfsGen::Zp)));
}

TEST_CASE("afs associativity on random triples") {
  std::mt19937 rng(7);
  for (int p : {3, 5}) {
    for (int trial = 0; trial < 40; ++trial) {
      const AfsElement a = random_element(rng, p), b = random_element(rng, p), c = random_element(rng, p);
      CHECK(afs_mul(afs_mul(a, b), c) == afs_mul(a, afs_mul(b, c)));
    }
  }
}

TEST_CASE("zeta idempotents") {
  for (int p : {3, 5, 7}) {
    AfsElement sum(p);
    for (int j = 0; j < p; ++j) {
      sum += zeta(p, j);
      for (int k = 0; k < p; ++k) {
        const AfsElement prod = afs_mul(zeta(p, j), zeta(p, k));
        if (j == k)
          CHECK(prod == zeta(p, j));
        else
          CHECK(prod.is_zero());
      }
    }
    CHECK(sum == afs_unit(p));
    CHECK(afs_mul(zeta(p, 0), g(p, AfsGen::EtaP)) == afs_mul(g(p, AfsGen::EtaP), zeta(p, 2)));
  }
}

TEST_CASE("pochhammer") {
  const int p = 3;
  const AfsElement xi = afs_mul(g(p, AfsGen::EtaP), g(p, AfsGen::EtaM));
  CHECK(afs_pochhammer(xi, 2, 0) == afs_unit(p));
  CHECK(afs_pochhammer(xi * (-q(p, 2)), 2, 1) == afs_unit(p) + xi * q(p, 2));
  // three factors, but (eta+ eta-)^3 = 0
  const AfsElement full = afs_pochhammer(xi, 1, 3);
  const AfsElement expected = afs_unit(p) - xi * (CycloScalar::one(p) + q(p) + q(p, 2)) +
                              afs_pow(xi, 2) * (q(p) + q(p, 2) + q(p, 3));
  CHECK(full == expected);
  CHECK(afs_pow(xi, 3).is_zero());
}

TEST_CASE("coproduct of delta") {
  const int p = 3;
  const AfsTensor d = afs_gen_coproduct(p, AfsGen::Delta, AfsConventions{
                                                                .charge = ZChargeIndex::K,
                                                                .eta_charge = EtaCharge::Omitted,
                                                                .delta_quadratic = DeltaQuadratic::Printed,
                                                            });
  const AfsElement ep = g(p, AfsGen::EtaP), em = g(p, AfsGen::EtaM), de = g(p, AfsGen::Delta);
  const AfsElement dinv = g(p, AfsGen::DeltaInv);
  const AfsTensor expected = outer(de, de) +
                             outer(afs_mul(dinv, afs_pow(ep, 2)), afs_mul(afs_pow(em, 2), de)) * q(p, -2) +
                             outer(ep, afs_mul(em, de)) * (CycloScalar::one(p) + q(p, -2));
  CHECK(d == expected);

  AfsElement left(p);
  const AfsTensor full = afs_gen_coproduct(p, AfsGen::Delta);
  for (const auto& [k, c] : full.terms()) left += afs_mono(p, k[1]) * (c * afs_counit(p, k[0]));
  CHECK(left == de);
}

TEST_CASE("afs Hopf axioms on generators") {
  for (int p : {3, 5}) {
    for (AfsGen x : kGenerators) {
      CAPTURE(p);
      CAPTURE(to_string(x));
      const AfsAxiomCheck r = afs_check_axioms(p, x);
      CHECK(r.coassociative);
      CHECK(r.counit);
      CHECK(r.antipode);
    }
    CHECK(afs_coproduct_respects_relations(p));
  }
}

TEST_CASE("printed structure maps fail the axioms") {
  const int p = 3;
  AfsConventions quad;
  quad.delta_quadratic = DeltaQuadratic::Printed;
  CHECK_FALSE(afs_check_axioms(p, AfsGen::Delta, quad).coassociative);

  AfsConventions eta;
  eta.eta_antipode = EtaAntipode::Printed;
  CHECK_FALSE(afs_check_axioms(p, AfsGen::EtaP, eta).antipode);
  CHECK_FALSE(afs_check_axioms(p, AfsGen::EtaM, eta).antipode);

  AfsConventions za;
  za.z_antipode = ZAntipode::Printed;
  CHECK(afs_check_axioms(p, AfsGen::Zp, za).coassociative);
  CHECK_FALSE(afs_check_axioms(p, AfsGen::Zp, za).antipode);
  CHECK_FALSE(afs_check_axioms(p, AfsGen::Zm, za).antipode);

  for (ZChargeIndex c : {ZChargeIndex::PMinusK, ZChargeIndex::None}) {
    AfsConventions alt;
    alt.charge = c;
    CHECK_FALSE(afs_check_axioms(p, AfsGen::Zp, alt).coassociative);
  }

  AfsConventions flat;
  flat.eta_charge = EtaCharge::Omitted;
  CHECK_FALSE(afs_coproduct_respects_relations(p, flat));
  for (ZChargeIndex c : {ZChargeIndex::K, ZChargeIndex::PMinusK, ZChargeIndex::None}) {
    flat.charge = c;
    CHECK_FALSE(afs_check_axioms(p, AfsGen::Zp, flat).coassociative);
  }
}

TEST_CASE("antipode values") {
  const int p = 3;
  const AfsElement ep = g(p, AfsGen::EtaP), em = g(p, AfsGen::EtaM), dinv = g(p, AfsGen::DeltaInv);
  AfsConventions printed;
  printed.eta_antipode = EtaAntipode::Printed;
  printed.eta_charge = EtaCharge::Omitted;
  CHECK(afs_antipode(ep, printed) == -afs_mul(dinv, ep));
  CHECK(afs_antipode(ep, printed) == -afs_mul(afs_pow(g(p, AfsGen::Delta), p - 1), ep));

  const AfsElement xi = afs_mul(ep, em);
  const AfsElement Sp = afs_antipode(ep);
  const AfsElement expected =
      -afs_mul(afs_mul(afs_mul(dinv, afs_normalize(p, AfsWord{{AfsGen::Exp, -1}})), ep), afs_unit(p) + xi);
  CHECK(Sp == expected);

  CHECK(afs_antipode(g(p, AfsGen::Lam)) == -g(p, AfsGen::Lam));
  CHECK(afs_antipode(g(p, AfsGen::Zp)) == -afs_mul(afs_normalize(p, AfsWord{{AfsGen::Exp, -p}}), g(p, AfsGen::Zp)));
  CHECK(afs_counit(g(p, AfsGen::Lam)).is_zero());
  CHECK(afs_counit(g(p, AfsGen::Delta)) == CycloScalar::one(p));
}

TEST_CASE("antipode is an anti-morphism and Delta a morphism") {
  std::mt19937 rng(11);
  const int p = 3;
  for (int trial = 0; trial < 15; ++trial) {
    const AfsElement a = random_element(rng, p), b = random_element(rng, p);
    CHECK(afs_antipode(afs_mul(a, b)) == afs_mul(afs_antipode(b), afs_antipode(a)));
    CHECK(afs_coproduct(afs_mul(a, b)) == afs_tensor_mul(afs_coproduct(a), afs_coproduct(b)));
  }
}

TEST_CASE("afs star") {
  const int p = 3;
  const AfsElement ep = g(p, AfsGen::EtaP), em = g(p, AfsGen::EtaM);
  CHECK(afs_star(afs_mul(ep, em)) == afs_mul(em, ep));
  CHECK(afs_star(afs_mul(ep, em)) == afs_mul(ep, em) * q(p, 2));
  const CycloScalar i = CycloScalar::gauss(p, {0, 1});
  CHECK(afs_star(g(p, AfsGen::Delta) * i) == g(p, AfsGen::Delta) * (-i));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const AfsElement x = random_element(rng, p);
    CHECK(afs_star(afs_star(x)) == x);
  }
}

TEST_CASE("grassmann integral") {
  const int p = 3;
  const AfsElement top = afs_mul(afs_pow(g(p, AfsGen::EtaP), 2), afs_pow(g(p, AfsGen::EtaM), 2));
  CHECK(grassmann_integral(top) == q(p, -1));
  CHECK(grassmann_integral(top * q(p)) == CycloScalar::one(p));
  CHECK(grassmann_integral(g(p, AfsGen::EtaP)).is_zero());
  CHECK(grassmann_integral(afs_mul(top, g(p, AfsGen::Delta))).is_zero());
  CHECK_THROWS_AS(grassmann_integral(g(p, AfsGen::Lam)), NonGrassmannInput);
  for (int pp : {5, 7}) {
    const AfsElement t = afs_mul(afs_pow(g(pp, AfsGen::EtaP), pp - 1), afs_pow(g(pp, AfsGen::EtaM), pp - 1));
    CHECK(grassmann_integral(t) == q(pp, -1));
  }
}

TEST_CASE("nilpotency is respected") {
  std::mt19937 rng(5);
  for (int p : {3, 5}) {
    for (int trial = 0; trial < 10; ++trial) {
      const AfsElement x = random_element(rng, p);
      for (const auto& [k, c] : afs_coproduct(x).terms()) {
        CHECK(k[0].n < p);
        CHECK(k[0].m < p);
        CHECK(k[1].n < p);
        CHECK(k[1].m < p);
      }
      for (const auto& [k, c] : afs_antipode(x).terms()) CHECK(k.n < p);
    }
  }
}
