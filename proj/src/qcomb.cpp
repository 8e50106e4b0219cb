#include "qfs/qcomb.hpp"

#include "qfs/errors.hpp"

namespace qfs {

CycloScalar q_number(int p, long long n) {
  if (n < 0) return -q_number(p, -n);
  CycloScalar acc = CycloScalar::zero(p);
  for (long long j = 0; j < n; ++j) acc += CycloScalar::q_power(p, n - 1 - 2 * j);
  return acc;
}

CycloScalar q_factorial(int p, long long n) {
  if (n < 0) throw DomainError("q-factorial of a negative integer");
  if (n >= p) return CycloScalar::zero(p);
  CycloScalar acc = CycloScalar::one(p);
  for (long long j = 2; j <= n; ++j) acc *= q_number(p, j);
  return acc;
}

CycloScalar inv_q_factorial(int p, long long n) {
  if (n < 0 || n >= p) return CycloScalar::zero(p);
  return q_factorial(p, n).inverse();
}

int q_half_exponent(int p, long long twice_e) {
  const long long r = (twice_e % p) * ((p + 1) / 2) % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

CycloScalar q_half_power(int p, long long twice_e) { return CycloScalar::q_power(p, q_half_exponent(p, twice_e)); }

CycloScalar factorial(int p, long long n) {
  mpz_class f = 1;
  for (long long j = 2; j <= n; ++j) f *= static_cast<unsigned long>(j);
  return CycloScalar::rational(p, Rational(f));
}

}  // namespace qfs
