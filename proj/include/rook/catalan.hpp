#pragma once

#include <span>
#include <utility>
#include <vector>

#include "rook/board.hpp"
#include "rook/equivalence.hpp"
#include "rook/ints.hpp"
#include "rook/laurent.hpp"

namespace rook {

/// A board inside Delta_{n,m}: stored padded to n columns (0-indexed,
/// b_0 = 0), with b_j <= j m for all j.
struct BoundedBoard {
  FerrersBoard board;  // exactly n columns
  std::size_t n = 0;
  long m = 1;
};

/// Validates containment and pads to n columns.  Throws when the board does
/// not fit.
BoundedBoard make_bounded(const FerrersBoard& board, std::size_t n, long m);

/// omega_m entries of the bounded board (length n).
std::vector<long> omega_entries(const BoundedBoard& bb);

/// area_m(Delta \ B) = sum of (j m - b_j) = |Delta_{n,m}| - |B|.
long area_complement(const BoundedBoard& bb);

/// dinv per the defining double sum over shift values k = 0..m-1.
long dinv(std::span<const long> entries, long m);

/// dinv via the pairwise weight f_m(a_i - a_j); must agree with dinv().
long dinv_weight_form(std::span<const long> entries, long m);

long dinv_board(const BoundedBoard& bb);

/// Bounce path of a board in Delta_{n,m}.  h stores horizontal run lengths
/// with trailing zeros truncated after the last positive entry; v stores
/// every vertical run taken (v_i = h_i + ... + h_{i-m+1}).
struct BouncePath {
  std::vector<long> h;
  std::vector<long> v;
  long bounce() const;  // sum of i * h_i
};

/// Ball-bounce construction: horizontal runs stop just short of the first
/// lattice point strictly southeast of the board's boundary.  Terminates at
/// (n, nm) or throws after n + nm + m iterations.
BouncePath bounce_path(const BoundedBoard& bb);

/// The bijection exchanging (dinv, area) with (area, bounce): the image has
/// bounce path h_i = n_i(omega) and its boundary is read off the subwords
/// omega^i (value i -> E step, values i-m..i-1 -> N steps).
BoundedBoard phi(const BoundedBoard& bb);

/// Higher q,t-Catalan polynomial over {q,t}: sum over boards in B_{n,m} of
/// q^{dinv} t^{area of complement}.
LaurentPoly qt_catalan(std::size_t n, long m);

/// The same polynomial computed from the bounce statistic:
/// sum of q^{area of complement} t^{bounce}.
LaurentPoly qt_catalan_bounce(std::size_t n, long m);

/// Generating function sum_{B ~ B0} q^{dinv B} over the m-weight class, all
/// boards read with N columns: q^{c(n_0,n_1,...)} times a product of
/// q-binomials.
LaurentPoly class_dinv_generating_function(const FerrersBoard& b0, std::size_t N, long m);

/// The boards of minimum and maximum dinv in the m-weight class: B1 from the
/// weakly increasing rearrangement of omega, B2 from leftmost-feasible
/// insertion of each value class.  Results are padded to the input's column
/// count when they fit there.
std::pair<FerrersBoard, FerrersBoard> extremal_dinv_boards(const FerrersBoard& b0, long m);

/// (m+1)^{n-1}: the number of m-weight equivalence classes partitioning
/// B_{n,m}.
Int count_weight_classes_in_triangle(std::size_t n, long m);

namespace detail {
template <typename Fn>
void bounded_rec(std::size_t n, long m, std::size_t j, std::vector<long>& cols, Fn&& fn) {
  if (j == n) {
    fn(static_cast<const std::vector<long>&>(cols));
    return;
  }
  long low = j == 0 ? 0 : cols[j - 1];
  for (long b = low; b <= static_cast<long>(j) * m; ++b) {
    cols.push_back(b);
    bounded_rec(n, m, j + 1, cols, fn);
    cols.pop_back();
  }
}
}  // namespace detail

/// Visits every board in B_{n,m} (as a height vector of length n) in
/// lexicographic order.
template <typename Fn>
void for_each_bounded_board(std::size_t n, long m, Fn&& fn) {
  std::vector<long> cols;
  cols.reserve(n);
  detail::bounded_rec(n, m, 0, cols, fn);
}

}  // namespace rook
