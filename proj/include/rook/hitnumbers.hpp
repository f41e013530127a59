#pragma once

#include <span>
#include <string>
#include <vector>

#include "rook/board.hpp"
#include "rook/ints.hpp"
#include "rook/laurent.hpp"

namespace rook {

/// Classical hit numbers h_{k,n}(B) for a board inside the n x n square:
/// coefficients of x^k in sum_k r_k(B) (n-k)! (x-1)^k.
/// The entries sum to n!.
std::vector<Int> hit_numbers(const FerrersBoard& board, std::size_t n);

/// m-level hit numbers for a board inside the mn x n board: coefficients of
/// x^k in sum_k r_{k,m}(B) (m(n-k))|_{n-k,m} (x-1)^k.  Entries sum to m^n n!.
std::vector<Int> m_level_hit_numbers(const FerrersBoard& board, std::size_t n, long m);

/// p,q-analogue: coefficients of x^k (as Laurent polynomials over {p,q}) in
/// sum_k r_{k,m}[B] [m(n-k)]|_{n-k,m} p^{m(C(k+1,2)+k(n-k))}
///       prod_{l=n-k+1}^{n} (x - q^{ml} p^{m(n-l)}).
/// Negative coefficients are a valid outcome.
std::vector<LaurentPoly> pq_hit_numbers(const FerrersBoard& board, std::size_t n, long m);

/// Oracle: direct enumeration over S_n of placements meeting B in k cells.
std::vector<Int> hit_numbers_direct(const FerrersBoard& board, std::size_t n);

/// Oracle: direct enumeration of m-level placements of n rooks on the full
/// mn x n board (the wreath-product model).
std::vector<Int> m_level_hit_numbers_direct(const FerrersBoard& board, std::size_t n, long m);

struct ScanRecord {
  FerrersBoard board;
  bool negative_found = false;
  long entry_index = -1;      // k of the first offending hit entry
  std::string witness;        // offending monomial with coefficient
};

/// Evaluates pq_hit_numbers per board and records which boards produce any
/// negative coefficient, optionally after setting p = 1.  Purely
/// experimental; no claim is made.
std::vector<ScanRecord> positivity_scan(std::span<const FerrersBoard> boards, std::size_t n,
                                        long m, bool specialize_p1);

}  // namespace rook
