#pragma once

#include <gmpxx.h>

namespace kwise {

/// n! for n >= 0.
mpz_class factorial(int n);

/// n!! = n (n-2) (n-4) ..., with 0!! = (-1)!! = 1. Rejects n < -1.
mpz_class double_factorial(int n);

/// C(a, b), zero when b < 0 or b > a. Rejects a < 0.
mpz_class binomial(int a, int b);

/// base^e for e >= 0 (0^0 = 1).
mpz_class int_pow(long base, int e);

}  // namespace kwise
