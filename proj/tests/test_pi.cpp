#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qfs/pi_rep.hpp"

using namespace qfs;

namespace {

GaussAtom atom(int deg, Rational c, int t) { return GaussAtom{deg, c, t}; }

double deviation(const GaussAtomState& a, const GaussAtomState& b) { return positive_norm(a - b); }

}  // namespace

TEST_CASE("M coefficients") {
  const RepParams r{3, 1.0};
  CHECK(m_coeff(0, r) == doctest::Approx(1.0));
  CHECK(m_coeff(1, r) == doctest::Approx(1.0));
  CHECK(m_coeff(2, r) == doctest::Approx(2.0));
  CHECK(r.lambda_minus() == doctest::Approx(2.0));
  CHECK(exact_lambda_minus(3).embed(1.0).real() == doctest::Approx(2.0));

  const RepParams printed{3, 2.7, MConvention::Printed};
  const RepParams uniform{3, 2.7, MConvention::Uniform};
  CHECK(m_coeff(0, printed) == doctest::Approx(std::pow(2.7, -1.0 / 3)));
  CHECK(m_coeff(0, uniform) == doctest::Approx(std::pow(2.7, 2.0 / 3)));
  CHECK(m_coeff(0, uniform) == doctest::Approx(m_coeff(1, uniform)));
  for (int p : {3, 5, 7})
    for (int n = 1; n < p; ++n) {
      const RepParams rp{p, 1.7};
      CHECK(m_coeff(n, rp) == doctest::Approx(m_coeff(1 - n, rp)));
    }
}

TEST_CASE("generator actions") {
  const int p = 3;
  const RepParams r{p, 1.0};
  const GaussAtomState g0 = GaussAtomState::atom(atom(0, 0, 1));
  const auto q = std::polar(1.0, 2.0 * std::numbers::pi / 3);
  CHECK(deviation(apply_pi(UfsGen::K, g0, r), g0 * q) < 1e-15);

  const GaussAtomState base = GaussAtomState::atom(atom(0, 0, 0));
  GaussAtomState e = base;
  for (int j = 0; j < p; ++j) e = apply_pi(UfsGen::Ep, e, r);
  CHECK(deviation(e, apply_pi(UfsGen::Pp, base, r)) < 1e-12);
  CHECK(e.terms().size() == 1);
  CHECK(e.terms().begin()->first.center == Rational(1));

  const GaussAtomState h = apply_pi(UfsGen::H, base, r);
  CHECK(deviation(h, GaussAtomState::atom(atom(1, 0, 0), {0.0, 1.0})) < 1e-15);
}

TEST_CASE("hermitian form") {
  const int p = 3;
  const GaussAtomState a = GaussAtomState::atom(atom(0, 0, 0));
  CHECK(inner_product(a, a, p).real() == doctest::Approx(std::sqrt(std::numbers::pi)));
  const GaussAtomState t1 = GaussAtomState::atom(atom(0, 0, 1)), t2 = GaussAtomState::atom(atom(0, 0, 2));
  CHECK(inner_product(t1, t2, p).real() == doctest::Approx(std::sqrt(std::numbers::pi)));
  CHECK(std::abs(inner_product(t1, t1, p)) < 1e-300);

  // shifted centers: integral exp(-(x-c1)^2/2 - (x-c2)^2/2) = sqrt(pi) exp(-(c1-c2)^2/4)
  const GaussAtomState s = GaussAtomState::atom(atom(0, 1, 0));
  CHECK(inner_product(a, s, p).real() == doctest::Approx(std::sqrt(std::numbers::pi) * std::exp(-0.25)));
  // second moment about a shifted center
  const GaussAtomState x2 = GaussAtomState::atom(atom(2, 0, 0));
  CHECK(inner_product(x2, a, p).real() == doctest::Approx(0.5 * std::sqrt(std::numbers::pi)));
}

TEST_CASE("relations and pseudo-unitarity") {
  for (int p : {3, 5, 7})
    for (double lam : {0.5, 1.0, 2.7}) {
      CAPTURE(p);
      CAPTURE(lam);
      const PiReport rep = verify_pi(RepParams{p, lam}, 1e-10, 42);
      for (const auto& c : rep.checks) {
        CAPTURE(c.name);
        CHECK(c.max_deviation < 1e-10);
      }
      CHECK(rep.all_passed());
    }
}

TEST_CASE("printed M_0 breaks the representation away from lambda+ = 1") {
  const PiReport rep = verify_pi(RepParams{3, 2.7, MConvention::Printed}, 1e-10, 42);
  CHECK_FALSE(rep.all_passed());
  CHECK(verify_pi(RepParams{3, 1.0, MConvention::Printed}, 1e-10, 42).all_passed());
}

TEST_CASE("reports are deterministic") {
  const PiReport a = verify_pi(RepParams{5, 2.7}, 1e-10, 9), b = verify_pi(RepParams{5, 2.7}, 1e-10, 9);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t j = 0; j < a.checks.size(); ++j) CHECK(a.checks[j].max_deviation == b.checks[j].max_deviation);
}

TEST_CASE("gram signature") {
  for (int p = 3; p <= 15; p += 2) {
    const auto [pos, neg] = gram_signature(p);
    CHECK(pos == (p + 1) / 2);
    CHECK(neg == (p - 1) / 2);
  }
}

TEST_CASE("rep matrix uses the hermitian form") {
  const RepParams r{3, 1.0};
  const std::vector<GaussAtom> basis{atom(0, 0, 0), atom(0, 0, 1), atom(0, 0, 2)};
  const auto m = rep_matrix(UfsGen::K, basis, r);
  const auto q = std::polar(1.0, 2.0 * std::numbers::pi / 3);
  // (t^2, K t^1) = conj(q) Phi(t^3)
  CHECK(std::abs(m[2][1] - std::conj(q) * std::sqrt(std::numbers::pi)) < 1e-12);
  CHECK(std::abs(m[1][1]) < 1e-15);
}
