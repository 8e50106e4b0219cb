#pragma once

#include <complex>
#include <random>

#include "qfs/cyclo.hpp"

namespace qfs::testing {

inline CycloScalar random_scalar(std::mt19937& rng, int p, int max_mag = 1000, int mu_span = 0) {
  std::uniform_int_distribution<int> coef(-max_mag, max_mag);
  std::uniform_int_distribution<int> den(1, 9);
  std::uniform_int_distribution<int> mu(-mu_span, mu_span);
  std::uniform_int_distribution<int> nterms(1, 3);
  CycloScalar acc = CycloScalar::zero(p);
  const int t = nterms(rng);
  for (int j = 0; j < t; ++j) {
    Rational re(coef(rng), den(rng));
    Rational im(coef(rng), den(rng));
    re.canonicalize();
    im.canonicalize();
    acc += CycloScalar::gauss(p, {re, im}) * CycloScalar::q_power(p, coef(rng)) * CycloScalar::mu_power(p, mu(rng));
  }
  return acc;
}

inline std::complex<double> q_numeric(int p) { return std::polar(1.0, 2.0 * 3.14159265358979323846 / p); }

}  // namespace qfs::testing
