#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qfs/errors.hpp"
#include "qfs/kernels.hpp"

using namespace qfs;

namespace {

AfsElement gen_pow(int p, AfsGen g, int e) { return afs_pow(afs_gen(p, g), e); }

KernelParams half_order(int p, int s, double order) {
  KernelParams kp;
  kp.p = p;
  kp.s = s;
  kp.nu = {0.3, -0.2};
  kp.mu = kp.nu + static_cast<double>(s) / p + order;
  kp.lambda_coord = -0.4;
  return kp;
}

}  // namespace

TEST_CASE("omega coefficients") {
  const int p = 3;
  CHECK(omega(p, 0, 0, MConvention::Printed).coeff(0) == CycloScalar::mu_power(p, -1));
  CHECK(omega(p, 0, 0).coeff(0) == CycloScalar::mu_power(p, 2));
  CHECK(m_exact(p, 3) == m_exact(p, 0));
  CHECK(m_exact(p, -1) == m_exact(p, 2));

  // m - k + l reaches p for m >= 1
  OmegaAudit audit;
  const XiPolynomial w = omega(p, 0, 2, MConvention::Uniform, &audit);
  CHECK(w.degree() == 0);
  CHECK(audit.summands == 5);
  CHECK(audit.dropped == 4);
  CHECK(audit.zero_inversions == 0);

  // Omega_{0,1}: m = 0, 1 survive
  const XiPolynomial w01 = omega(p, 0, 1);
  CHECK(w01.degree() == 1);
  CHECK(w01.coeff(0) == CycloScalar::imag(p) * CycloScalar::mu_power(p, 3));

  CHECK_THROWS_AS(omega(p, 1, 0), IndexOutOfRange);
  CHECK_THROWS_AS(omega(p, 0, 3), IndexOutOfRange);
  CHECK_THROWS_AS(omega(p, 3, 3), IndexOutOfRange);
  CHECK_NOTHROW(omega(p, 2, 4));
}

TEST_CASE("omega-tilde vanishes on its whole display range") {
  for (int p : {3, 5, 7})
    for (int k = 0; k < p; ++k)
      for (int l = 0; l < 2 * p; ++l) {
        OmegaAudit audit;
        CHECK(omega_tilde(p, k, l, MConvention::Uniform, &audit).is_zero());
        CHECK(audit.dropped == audit.summands);
        if (k - l - 1 < 0) CHECK(audit.summands == 0);
      }
  CHECK_THROWS_AS(omega_tilde(3, 0, 6), IndexOutOfRange);
}

TEST_CASE("kernel_Q triples") {
  const int p = 3;
  const AfsElement delta = afs_gen(p, AfsGen::Delta);

  const KernelQ a = kernel_Q(p, 0, 1);
  CHECK(a.terms[0].s == 1);
  CHECK(a.terms[0].prefactor == afs_mul(delta, afs_gen(p, AfsGen::EtaP)));
  CHECK(a.terms[0].omega.coeffs == omega(p, 0, 1).coeffs);
  CHECK(a.terms[1].s == -2);
  CHECK(a.terms[1].prefactor == afs_mul(gen_pow(p, AfsGen::EtaM, 2), delta));
  CHECK(a.terms[1].tilde);

  const KernelQ b = kernel_Q(p, 2, 0);
  CHECK(b.terms[0].s == 1);
  CHECK(b.terms[1].s == -2);
  CHECK(b.terms[0].prefactor == afs_gen(p, AfsGen::EtaP));
  CHECK(b.terms[1].prefactor == gen_pow(p, AfsGen::EtaM, 2));
  CHECK(b.terms[0].omega.coeffs == omega(p, 2, 3).coeffs);

  // at l = k the tilde prefactor is eta-^p = 0
  CHECK(kernel_Q(p, 1, 1).terms[1].prefactor.is_zero());
  CHECK(kernel_Q(p, 4, 1).k == 1);

  const AfsElement g = a.terms[0].grassmann();
  CHECK_FALSE(g.is_zero());
  for (const auto& [mono, c] : g.terms()) {
    CHECK(mono.m <= p - 1);
    CHECK(mono.n <= p - 1);
  }
}

TEST_CASE("polar coordinates") {
  const double e = std::numbers::e;
  const QuadrantPoint q1 = polar_map(0.5 * e, 0.5 / e);
  CHECK(q1.quadrant == 1);
  CHECK(q1.rho == doctest::Approx(1.0));
  CHECK(q1.beta == doctest::Approx(1.0));
  const QuadrantPoint q3 = polar_map(-0.5, -0.5);
  CHECK(q3.quadrant == 3);
  CHECK(q3.rho == doctest::Approx(1.0));
  CHECK(q3.beta == doctest::Approx(0.0));
  const QuadrantPoint q2 = polar_map(0.5, -0.5);
  CHECK(q2.quadrant == 2);
  CHECK(q2.rho == doctest::Approx(1.0));
  CHECK(polar_map(-0.5, 0.5).quadrant == 4);
  CHECK_THROWS_AS(polar_map(0.0, 1.0), OnAxis);
  const auto back = polar_inverse(polar_map(-3.25, 0.125));
  CHECK(std::abs(back[0] + 3.25) < 1e-14);
  CHECK(std::abs(back[1] - 0.125) < 1e-14);
}

TEST_CASE("K_s against half-order closed forms") {
  const int p = 3;
  const double pi = std::numbers::pi;
  const std::complex<double> i{0.0, 1.0};

  // Quad 1, order -1/2, r rho = 1
  KernelParams kp = half_order(p, 1, -0.5);
  kp.r = 2.0;
  const auto z1 = polar_inverse({1, 0.5, 0.3});
  const KsResult v1 = ks_quadrature(kp, z1[0], z1[1], 1e-12);
  const auto pref1 = 0.5 * std::exp(-0.5 * (0.3 + i * (pi / 2)) + kp.mu * kp.lambda_coord);
  CHECK(std::abs(v1.value - pref1 * hankel1_half(-0.5, 1.0)) < 1e-10);
  CHECK(v1.error < 1e-12);

  // Quad 4, K_{1/2}
  KernelParams kq = half_order(p, 2, 0.5);
  const auto z4 = polar_inverse({4, 2.0, -0.6});
  const auto pref4 = std::exp(0.5 * (-0.6 + i * (pi / 2)) + kq.mu * kq.lambda_coord) / (pi * i);
  CHECK(std::abs(ks_quadrature(kq, z4[0], z4[1], 1e-12).value - pref4 * macdonald_half(2.0)) < 1e-10);

  // Quad 3 is the H^(2) quadrant
  const auto z3 = polar_inverse({3, 1.0, 0.2});
  const auto pref3 = -0.5 * std::exp(-0.5 * (0.2 - i * (pi / 2)) + kp.mu * kp.lambda_coord);
  kp.r = 1.0;
  CHECK(std::abs(ks_quadrature(kp, z3[0], z3[1], 1e-12).value - pref3 * std::conj(hankel1_half(-0.5, 1.0))) < 1e-10);

  CHECK(ks_bessel_kind(1) == BesselKind::Hankel1);
  CHECK(ks_bessel_kind(3) == BesselKind::Hankel2);
  CHECK(ks_bessel_kind(2) == BesselKind::Macdonald);
}

TEST_CASE("printed quadrant assignment holds only in Quad 1") {
  const KernelParams kp = half_order(5, 1, 0.5);
  for (int quad = 1; quad <= 4; ++quad) {
    const auto z = polar_inverse({quad, 1.0, 0.4});
    const auto num = ks_quadrature(kp, z[0], z[1], 1e-12).value;
    CHECK(std::abs(num - ks_closed_form(kp, z[0], z[1])) < 1e-10);
    const double printed = std::abs(num - ks_closed_form_printed(kp, z[0], z[1]));
    if (quad == 1) CHECK(printed < 1e-10);
    else CHECK(printed > 1e-2);
  }
}

TEST_CASE("K_s preconditions and general orders") {
  KernelParams kp;
  kp.p = 3;
  kp.mu = 1.2;
  CHECK_THROWS_AS(ks_quadrature(kp, 1.0, 1.0, 1e-8), DomainError);
  kp.mu = 0.1;
  kp.r = 0.0;
  CHECK_THROWS_AS(ks_quadrature(kp, 1.0, 1.0, 1e-8), DomainError);
  kp.r = 1.0;
  CHECK_THROWS_AS(ks_quadrature(kp, 0.0, 1.0, 1e-8), OnAxis);
  CHECK_THROWS_AS(ks_quadrature(kp, 1.0, 1.0, 1e-8, 1), ConvergenceFailure);
  kp.mu = {0.1, 0.3};
  CHECK_THROWS_AS(ks_closed_form(kp, 1.0, 1.0), DomainError);

  // non-half real orders against Boost, Re(order) close to the convergence edge
  kp.mu = 0.9;
  kp.nu = 0.0;
  for (int quad = 1; quad <= 4; ++quad) {
    const auto z = polar_inverse({quad, 0.8, -0.3});
    CHECK(std::abs(ks_quadrature(kp, z[0], z[1], 1e-10).value - ks_closed_form(kp, z[0], z[1])) < 1e-8);
  }
}

TEST_CASE("kernel battery") {
  for (int p : {3, 5, 7}) {
    const KernelReport r = verify_kernels(p, 1e-10);
    for (const auto& c : r.checks) {
      CAPTURE(p);
      CAPTURE(c.name);
      CAPTURE(c.max_deviation);
      CHECK(c.passed);
    }
    CHECK(r.all_passed());
    CHECK(r.printed_deviation[0] < 1e-10);
  }
}
