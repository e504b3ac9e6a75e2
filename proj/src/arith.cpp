#include "gnepdeg/arith.hpp"

#include <stdexcept>

namespace gnepdeg {

Int binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  // r stays integral after each division: r is C(n-k+i, i).
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Int multinomial(const std::vector<int>& parts) {
  long long total = 0;
  Int r = 1;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    total += p;
    r *= binomial(total, p);
  }
  return r;
}

Int int_pow(const Int& base, int exp) {
  if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
  Int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace gnepdeg
