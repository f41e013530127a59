#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rook/ints.hpp"

namespace rook {

/// Ordered set of variable names.  Every LaurentPoly carries one; mixing
/// polynomials over different variable sets is a hard error.
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::vector<std::string> names);

  static const VarSet& pq();    // {p, q}
  static const VarSet& q();     // {q}
  static const VarSet& qt();    // {q, t}
  static const VarSet& pqPQ();  // {p, q, P, Q} with P = p^x, Q = q^x formal
  static const VarSet& pqx();   // {p, q, x}

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t index_of(std::string_view name) const;
  VarSet without(std::size_t index) const;

  friend bool operator==(const VarSet&, const VarSet&) = default;

 private:
  std::vector<std::string> names_;
};

/// Exact sparse multivariate Laurent polynomial with integer coefficients.
/// Exponents may be negative.  Terms are keyed by exponent vectors in the
/// declared variable order; no zero coefficients are stored.
class LaurentPoly {
 public:
  LaurentPoly() : vars_(VarSet::pq()) {}
  explicit LaurentPoly(VarSet vars) : vars_(std::move(vars)) {}

  static LaurentPoly constant(const VarSet& vars, Int c);
  static LaurentPoly monomial(const VarSet& vars, std::vector<int> exps, Int coeff);
  static LaurentPoly variable(const VarSet& vars, std::size_t index);

  const VarSet& vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Int coefficient(const std::vector<int>& exps) const;
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }

  /// Value at every variable = 1, i.e. the sum of all coefficients.
  Int evaluate_all_ones() const;

  /// First term (in canonical order) with a negative coefficient, if any.
  std::optional<std::pair<std::vector<int>, Int>> first_negative_term() const;

  /// Substitutes a monomial for every variable: source variable v maps to
  /// the monomial with exponent vector images[v] over `target`.  An all-zero
  /// image sets the variable to 1.
  LaurentPoly map_vars(const VarSet& target, const std::vector<std::vector<int>>& images) const;

  /// Reinterprets over a superset of the variables (missing ones get
  /// exponent zero).
  LaurentPoly embed(const VarSet& superset) const;

  /// Coefficient of var^k as a polynomial over the remaining variables.
  LaurentPoly coefficient_in(std::size_t var_index, int k) const;

  /// Canonical rendering: terms ascending in exponent-vector order, explicit
  /// signs, '*' separators, e.g. "p^-6*q^2 + p^-4*q + p^-2".
  std::string to_string() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Int& scalar);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Int& s) { return a *= s; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void set(const std::vector<int>& exps, Int value);
  void check_same_vars(const LaurentPoly& other) const;

  VarSet vars_;
  std::map<std::vector<int>, Int> terms_;
};

/// [n]_{p,q} = p^{n-1} + p^{n-2} q + ... + q^{n-1} over {p,q}; n must be >= 0.
LaurentPoly pq_integer(long n);

/// (p^n - q^n)/(p - q) for any integer n; for n < 0 this is the Laurent
/// polynomial -p^n q^n [(-n)]_{p,q}.
LaurentPoly pq_integer_laurent(long n);

/// [n]! = [1][2]...[n] over {p,q}.
LaurentPoly pq_factorial(long n);

/// [x][x-m][x-2m]...[x-(n-1)m] for a concrete integer x.
LaurentPoly pq_falling(long x, long n, long m);

/// Gaussian binomial over {q}, computed by the Pascal recurrence
/// [n,k] = [n-1,k-1] + q^k [n-1,k] with memoization.
LaurentPoly q_binomial(long n, long k);

/// [n]_q = 1 + q + ... + q^{n-1} and [n]_q! over {q}.
LaurentPoly q_integer(long n);
LaurentPoly q_factorial(long n);

}  // namespace rook
