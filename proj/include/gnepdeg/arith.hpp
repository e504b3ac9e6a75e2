#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace gnepdeg {

// All counts in this library are exact; cpp_int never overflows.
using Int = boost::multiprecision::cpp_int;

// C(n, k); zero for k < 0 or k > n.
Int binomial(long long n, long long k);

// (sum parts)! / prod parts[i]!  All parts must be >= 0.
Int multinomial(const std::vector<int>& parts);

// base^exp for small nonnegative exponents.
Int int_pow(const Int& base, int exp);

}  // namespace gnepdeg
