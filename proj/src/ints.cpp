#include "rook/ints.hpp"

#include <stdexcept>

namespace rook {

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int out = 1;
  for (long i = 2; i <= n; ++i) out *= i;
  return out;
}

Int binomial(long n, long k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (n < 0 || n < k) return 0;
  Int out = 1;
  for (long i = 1; i <= k; ++i) {
    out *= (n - k + i);
    out /= i;
  }
  return out;
}

Int multinomial(long top, std::span<const long> parts) {
  long sum = 0;
  for (long p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    sum += p;
  }
  if (sum != top) throw std::invalid_argument("multinomial: parts must sum to top");
  Int out = 1;
  long remaining = top;
  for (long p : parts) {
    out *= binomial(remaining, p);
    remaining -= p;
  }
  return out;
}

Int int_pow(const Int& base, long exp) {
  if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
  Int out = 1, b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

Int falling_factorial_value(long x, long n, long m) {
  if (n < 0) throw std::invalid_argument("falling_factorial_value: negative length");
  Int out = 1;
  for (long i = 0; i < n; ++i) out *= (Int(x) - Int(i) * m);
  return out;
}

}  // namespace rook
