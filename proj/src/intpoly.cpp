#include "rook/intpoly.hpp"

#include <stdexcept>

namespace rook {

IntPolynomial IntPolynomial::constant(Int c) { return monomial(0, std::move(c)); }

IntPolynomial IntPolynomial::monomial(long degree, Int coeff) {
  if (degree < 0) throw std::invalid_argument("IntPolynomial: negative degree");
  IntPolynomial p;
  if (coeff != 0) p.coeffs_[degree] = std::move(coeff);
  return p;
}

Int IntPolynomial::coefficient(long degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? Int(0) : it->second;
}

Int IntPolynomial::evaluate(const Int& x) const {
  // Horner over the sparse support, highest degree first.
  Int acc = 0;
  long prev_degree = -1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (prev_degree >= 0)
      for (long i = it->first; i < prev_degree; ++i) acc *= x;
    acc += it->second;
    prev_degree = it->first;
  }
  if (prev_degree > 0)
    for (long i = 0; i < prev_degree; ++i) acc *= x;
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [deg, c] : coeffs_) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (deg == 0) {
      out += mag.str();
    } else {
      if (mag != 1) {
        out += mag.str();
        out += "*";
      }
      out += "x";
      if (deg != 1) out += "^" + std::to_string(deg);
    }
  }
  return out;
}

void IntPolynomial::set(long degree, Int value) {
  if (value == 0)
    coeffs_.erase(degree);
  else
    coeffs_[degree] = std::move(value);
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  for (const auto& [deg, c] : other.coeffs_) set(deg, coefficient(deg) + c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  for (const auto& [deg, c] : other.coeffs_) set(deg, coefficient(deg) - c);
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial out;
  for (const auto& [da, ca] : a.coeffs_)
    for (const auto& [db, cb] : b.coeffs_) out.set(da + db, out.coefficient(da + db) + ca * cb);
  return out;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  *this = *this * other;
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Int& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [deg, c] : coeffs_) c *= scalar;
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& [deg, c] : out.coeffs_) c = -c;
  return out;
}

IntPolynomial falling_factorial_poly(long n, long m) {
  if (n < 0) throw std::invalid_argument("falling_factorial_poly: negative length");
  IntPolynomial out = IntPolynomial::constant(1);
  for (long i = 0; i < n; ++i) {
    IntPolynomial factor = IntPolynomial::variable();
    factor -= IntPolynomial::constant(Int(i) * m);
    out *= factor;
  }
  return out;
}

IntPolynomial FallingFactorialExpansion::reconstruct() const {
  IntPolynomial out;
  long d = depth();
  for (long k = 0; k <= d; ++k) {
    IntPolynomial basis = falling_factorial_poly(d - k, m);
    basis *= coefficients[static_cast<std::size_t>(k)];
    out += basis;
  }
  return out;
}

FallingFactorialExpansion to_falling_basis(const IntPolynomial& poly, long m, long depth) {
  if (depth < 0) throw std::invalid_argument("to_falling_basis: negative depth");
  if (poly.degree() > depth)
    throw std::invalid_argument("to_falling_basis: basis too shallow for polynomial degree");
  FallingFactorialExpansion out;
  out.m = m;
  out.coefficients.assign(static_cast<std::size_t>(depth) + 1, 0);
  IntPolynomial remainder = poly;
  for (long k = 0; k <= depth; ++k) {
    Int c = remainder.coefficient(depth - k);
    out.coefficients[static_cast<std::size_t>(k)] = c;
    if (c != 0) {
      IntPolynomial basis = falling_factorial_poly(depth - k, m);
      basis *= c;
      remainder -= basis;
    }
  }
  if (!remainder.is_zero())
    throw std::logic_error("to_falling_basis: nonzero remainder after peeling");
  return out;
}

}  // namespace rook
