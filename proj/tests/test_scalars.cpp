#include <cmath>
#include <random>

#include "doctest.h"
#include "qfs/cyclo.hpp"
#include "qfs/errors.hpp"
#include "qfs/qcomb.hpp"
#include "test_support.hpp"

using namespace qfs;
using qfs::testing::q_numeric;
using qfs::testing::random_scalar;

namespace {
CycloScalar q(int p, int e = 1) { return CycloScalar::q_power(p, e); }
}  // namespace

TEST_CASE("cyclo arithmetic at p = 3") {
  const int p = 3;
  CHECK(q(p) * q(p, 2) == CycloScalar::one(p));
  CHECK(q(p) + q(p, 2) == CycloScalar::integer(p, -1));
  // numeric confirmation of the Phi_3 reduction
  const auto z = q_numeric(3);
  CHECK(std::abs(z + z * z - std::complex<double>(-1.0, 0.0)) < 1e-15);

  const CycloScalar d = q(p) - q(p, -1);
  const CycloScalar c = CycloScalar::one(p) / d;
  CHECK(c * d == CycloScalar::one(p));
}

TEST_CASE("division by zero and incompatible orders") {
  CHECK_THROWS_AS(CycloScalar::one(3) / CycloScalar::zero(3), DivisionByZero);
  CHECK_THROWS_AS(CycloScalar::one(3) + CycloScalar::one(5), IncompatibleModulus);
  CHECK_THROWS_AS(CycloScalar::one(3) * CycloScalar::q_power(7, 1), IncompatibleModulus);
  CHECK_THROWS_AS(CycloScalar::one(4), InvalidOrder);
  // mu-polynomials with several terms are not units
  CHECK_THROWS_AS((CycloScalar::one(3) + CycloScalar::mu_power(3, 1)).inverse(), DomainError);
}

TEST_CASE("q-numbers") {
  CHECK(q_number(3, 1) == CycloScalar::one(3));
  CHECK(q_number(3, 2) == CycloScalar::integer(3, -1));
  CHECK(q_number(3, 3).is_zero());
  CHECK(std::abs(q_number(3, 2).embed(1.0) - std::complex<double>(-1.0, 0.0)) < 1e-14);
  for (int p : {3, 5, 7}) {
    CHECK(q_number(p, p).is_zero());
    for (int n = -9; n <= 9; ++n) {
      CHECK(q_number(p, -n) == -q_number(p, n));
      // against the defining quotient
      const CycloScalar quotient = (q(p, n) - q(p, -n)) / (q(p) - q(p, -1));
      CHECK(q_number(p, n) == quotient);
    }
    for (int n = p; n < p + 4; ++n) CHECK(q_factorial(p, n).is_zero());
    CHECK(inv_q_factorial(p, -1).is_zero());
    CHECK(inv_q_factorial(p, p).is_zero());
    for (int n = 0; n < p; ++n) CHECK(inv_q_factorial(p, n) * q_factorial(p, n) == CycloScalar::one(p));
  }
  CHECK(q_factorial(3, 0) == CycloScalar::one(3));
  CHECK(q_factorial(3, 2) == CycloScalar::integer(3, -1));
  CHECK(q_factorial(3, 3).is_zero());
}

TEST_CASE("half powers of q") {
  CHECK(q_half_power(3, 1) == q(3, 2));
  CHECK(q_half_power(3, -1) == q(3, 1));
  CHECK(q_half_power(5, 1) == q(5, 3));
  for (int p : {3, 5, 7, 9, 11}) {
    const CycloScalar h = q_half_power(p, 1);
    CHECK(h * h == q(p));
    CHECK(q_half_power(p, 3) == h * q(p));
  }
}

TEST_CASE("numeric embedding") {
  const auto e = q(3).embed(1.0);
  CHECK(e.real() == doctest::Approx(-0.5));
  CHECK(e.imag() == doctest::Approx(0.8660254037844386));
  const auto m = CycloScalar::mu_power(3, 2).embed(2.0);
  CHECK(m.real() == doctest::Approx(4.0));
  CHECK(m.imag() == doctest::Approx(0.0));
}

TEST_CASE("field axioms and homomorphism property on random triples") {
  std::mt19937 rng(7);
  for (int p : {3, 5, 7}) {
    for (int trial = 0; trial < 40; ++trial) {
      const CycloScalar a = random_scalar(rng, p);
      const CycloScalar b = random_scalar(rng, p);
      const CycloScalar c = random_scalar(rng, p);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inverse() == CycloScalar::one(p));
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      const double scale = std::max({1.0, std::abs(a.embed(1.0)), std::abs(b.embed(1.0))});
      CHECK(std::abs((a * b).embed(1.0) - a.embed(1.0) * b.embed(1.0)) < 1e-12 * scale * scale);
    }
  }
  // mu is formal: mu * mu^-1 = 1 and monomials in mu are units
  std::mt19937 rng2(11);
  const CycloScalar m = random_scalar(rng2, 5, 50, 0) * CycloScalar::mu_power(5, 3);
  CHECK(m * m.inverse() == CycloScalar::one(5));
}

TEST_CASE("canonical text form") {
  const int p = 5;
  const CycloScalar s = CycloScalar::gauss(p, {0, Rational(3, 2)}) * q(p, 2) * CycloScalar::mu_power(p, -1);
  CHECK(s.to_string() == "(3/2)*i*q^2*mu^-1");
  CHECK(CycloScalar::integer(p, -1).to_string() == "-1");
  CHECK(CycloScalar::zero(p).to_string() == "0");
  CHECK((q(3) + q(3, 2)).to_string() == "-1");
  CHECK((CycloScalar::imag(3) * q(3) - CycloScalar::one(3)).to_string() == "-1 + i*q");
}
