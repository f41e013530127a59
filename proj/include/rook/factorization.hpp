#pragma once

#include <span>
#include <string>
#include <vector>

#include "rook/board.hpp"
#include "rook/intpoly.hpp"
#include "rook/laurent.hpp"
#include "rook/placement.hpp"

namespace rook {

/// Two-sided comparison of a factorization identity: the product side is
/// expanded in the m-falling basis and compared against brute-force
/// coefficients.  A mismatch is reported, never asserted, so the same
/// machinery can probe malformed inputs.
struct FactorizationReport {
  FerrersBoard board;
  long m = 1;
  std::vector<Int> sum_side;      // brute-force coefficients, k = 0..n
  std::vector<Int> product_side;  // basis-expansion coefficients, k = 0..n
  bool match = false;
  std::vector<std::string> factors;  // one description per product factor
};

/// Product of (x + floor_m(b_j) - (j-1)m [+ rho_m(z) when j closes its zone]).
IntPolynomial mft_product(const FerrersBoard& board, long m);

/// Expands mft_product in the m-falling basis of depth n and compares the
/// coefficients with the brute-force r_{k,m} vector.
FactorizationReport verify_mft(const FerrersBoard& board, long m);

/// Product of (x + b_j - (j-1)m), no zone correction.
IntPolynomial mwft_product(const FerrersBoard& board, long m);

/// Same comparison against the signed file-placement sums f_{k,m}.
FactorizationReport verify_mwft(const FerrersBoard& board, long m);

struct PqFactorizationCheck {
  long x = 0;
  LaurentPoly lhs, rhs;  // over {p,q}
  bool match = false;
};

struct PqFactorizationReport {
  FerrersBoard board;
  long m = 1;
  bool symbolic = true;
  bool match = false;
  LaurentPoly lhs, rhs;                      // symbolic sides over {p,q,P,Q}, cleared by (p-q)^n
  std::vector<PqFactorizationCheck> checks;  // numeric mode, one per x value
};

/// Symbolic verification with formal P = p^x, Q = q^x: every bracket [x + a]
/// becomes (P p^a - Q q^a)/(p - q) and both sides are multiplied by (p-q)^n
/// to clear denominators.  Equality in Z[p^{\pm},q^{\pm},P,Q] implies the
/// identity for all x.
PqFactorizationReport verify_pqmft_symbolic(const FerrersBoard& board, long m);

/// Evaluates both sides at concrete x values, which must be nonnegative
/// multiples of m.
PqFactorizationReport verify_pqmft_numeric(const FerrersBoard& board, long m,
                                           std::span<const long> x_values);

// The individual sides, exposed so tests can cross-check the numeric and
// symbolic routes against each other.
LaurentPoly pqmft_sum_side_symbolic(const FerrersBoard& board, long m);
LaurentPoly pqmft_product_side_symbolic(const FerrersBoard& board, long m);
LaurentPoly pqmft_sum_side_numeric(const FerrersBoard& board, long m, long x);
LaurentPoly pqmft_product_side_numeric(const FerrersBoard& board, long m, long x);

}  // namespace rook
