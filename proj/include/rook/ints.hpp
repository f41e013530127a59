#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>

namespace rook {

/// Exact arbitrary-precision integer used for every count and coefficient.
using Int = boost::multiprecision::cpp_int;

Int factorial(long n);

/// Binomial coefficient with the combinatorial conventions used throughout:
/// k < 0 gives 0, k == 0 gives 1 for any n (including negative n), and
/// 0 <= n < k gives 0.
Int binomial(long n, long k);

/// top! / (parts[0]! parts[1]! ...).  Requires nonnegative parts summing to top.
Int multinomial(long top, std::span<const long> parts);

Int int_pow(const Int& base, long exp);

/// The m-falling factorial x(x-m)(x-2m)...(x-(n-1)m) evaluated at the integer x.
Int falling_factorial_value(long x, long n, long m);

}  // namespace rook
