#pragma once

// q-combinatorics at q^p = 1.

#include "qfs/cyclo.hpp"

namespace qfs {

/// Symmetric q-number [n] = (q^n - q^-n)/(q - q^-1), computed as q^(n-1) + q^(n-3) + ... + q^(1-n).
CycloScalar q_number(int p, long long n);

/// [n]! with [0]! = 1; vanishes for n >= p. Negative n is rejected.
CycloScalar q_factorial(int p, long long n);

/// 1/[n]! for 0 <= n < p, and 0 when n < 0 or n >= p.
CycloScalar inv_q_factorial(int p, long long n);

/// q^(twice_e / 2) where q^(1/2) := q^((p+1)/2), the square root of q inside <q>.
CycloScalar q_half_power(int p, long long twice_e);

/// Exponent j in 0..p-1 with q^j == q^(twice_e / 2).
int q_half_exponent(int p, long long twice_e);

/// n! as an exact scalar.
CycloScalar factorial(int p, long long n);

}  // namespace qfs
