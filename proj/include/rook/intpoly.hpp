#pragma once

#include <map>
#include <string>
#include <vector>

#include "rook/ints.hpp"

namespace rook {

/// Exact sparse univariate polynomial over the integers.  No zero
/// coefficients are stored; the zero polynomial has degree() == -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero

  static IntPolynomial constant(Int c);
  static IntPolynomial monomial(long degree, Int coeff);
  static IntPolynomial variable() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  Int coefficient(long degree) const;
  const std::map<long, Int>& terms() const { return coeffs_; }

  Int evaluate(const Int& x) const;

  /// Canonical rendering in ascending degree with explicit signs,
  /// e.g. "1 + 7*x + 6*x^2".
  std::string to_string() const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);
  IntPolynomial& operator*=(const Int& scalar);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const Int& s) { return a *= s; }
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void set(long degree, Int value);
  std::map<long, Int> coeffs_;
};

/// x(x-m)(x-2m)...(x-(n-1)m); the empty product for n = 0.
IntPolynomial falling_factorial_poly(long n, long m);

/// Coefficients c_k with P = sum_k c_k * x|_{depth-k,m}; round-trips to
/// IntPolynomial and back as the identity.
struct FallingFactorialExpansion {
  long m = 1;
  std::vector<Int> coefficients;  // index k = 0..depth

  long depth() const { return static_cast<long>(coefficients.size()) - 1; }
  IntPolynomial reconstruct() const;
};

/// Expands P in the m-falling-factorial basis of the given depth by peeling
/// exact leading coefficients.  Throws if deg P exceeds the depth.
FallingFactorialExpansion to_falling_basis(const IntPolynomial& poly, long m, long depth);

}  // namespace rook
