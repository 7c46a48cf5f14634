#include "kwise/combinatorics.hpp"

#include <string>

#include "kwise/error.hpp"

namespace kwise {

mpz_class factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class double_factorial(int n) {
  if (n < -1) throw DomainError("double factorial undefined for " + std::to_string(n));
  if (n <= 0) return 1;
  mpz_class r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class binomial(int a, int b) {
  if (a < 0) throw DomainError("binomial with negative top " + std::to_string(a));
  if (b < 0 || b > a) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

mpz_class int_pow(long base, int e) {
  if (e < 0) throw DomainError("negative exponent " + std::to_string(e));
  mpz_class r;
  mpz_class b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace kwise
