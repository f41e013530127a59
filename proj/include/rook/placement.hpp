#pragma once

#include <compare>
#include <functional>
#include <vector>

#include "rook/board.hpp"
#include "rook/ints.hpp"
#include "rook/laurent.hpp"

namespace rook {

/// Cell addressed by the coordinates of its northeast corner: (column, row),
/// both 1-based.
struct Cell {
  long col = 0;
  long row = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Arbitrary finite board given as a set of cells.  Ferrers boards convert by
/// filling rows 1..b_j of column j; zero-height columns are kept so that
/// column indices (and hence the c_i statistics) match the board as given.
class CellSetBoard {
 public:
  CellSetBoard() = default;
  explicit CellSetBoard(std::vector<Cell> cells);
  explicit CellSetBoard(const FerrersBoard& board);

  std::size_t column_count() const { return col_rows_.size(); }
  /// Sorted rows occupied in the given 1-based column.
  const std::vector<long>& rows_in_column(long col) const;
  bool contains(Cell c) const;
  long cell_count() const;
  long max_row() const { return max_row_; }

 private:
  std::vector<std::vector<long>> col_rows_;  // index j holds column j+1
  long max_row_ = 0;
};

enum class PlacementKind { rook, file };  // rook = m-level rook placement

struct Placement {
  std::vector<Cell> rooks;  // sorted column-major
  PlacementKind kind = PlacementKind::rook;

  friend bool operator==(const Placement&, const Placement&) = default;
};

/// Cell classification of a placement: alpha/beta/epsilon count the cells of
/// the board outside every m-coleg that lie above a rook, below a rook, or in
/// a rookless column.  inv = alpha + epsilon, coinv = beta + epsilon.
struct PlacementStats {
  long alpha = 0;
  long beta = 0;
  long epsilon = 0;
  long inv = 0;
  long coinv = 0;
  std::vector<long> column_indices;  // c_1 < ... < c_k
};

namespace detail {

bool level_free(const std::vector<char>& used, long level);

template <typename Fn>
void placement_rec(const CellSetBoard& board, long k, PlacementKind kind, long m,
                   std::size_t col_index, std::vector<Cell>& chosen,
                   std::vector<char>& levels_used, Fn&& fn) {
  long placed = static_cast<long>(chosen.size());
  if (placed == k) {
    Placement p;
    p.rooks = chosen;
    p.kind = kind;
    fn(static_cast<const Placement&>(p));
    return;
  }
  std::size_t n = board.column_count();
  if (col_index >= n) return;
  // prune: not enough columns left for the remaining rooks
  if (placed + static_cast<long>(n - col_index) < k) return;

  long col = static_cast<long>(col_index) + 1;
  for (long row : board.rows_in_column(col)) {
    long level = level_of_row(row, m);
    if (kind == PlacementKind::rook) {
      if (!level_free(levels_used, level)) continue;
      levels_used[static_cast<std::size_t>(level)] = 1;
    }
    chosen.push_back({col, row});
    placement_rec(board, k, kind, m, col_index + 1, chosen, levels_used, fn);
    chosen.pop_back();
    if (kind == PlacementKind::rook) levels_used[static_cast<std::size_t>(level)] = 0;
  }
  placement_rec(board, k, kind, m, col_index + 1, chosen, levels_used, fn);
}

}  // namespace detail

/// Visits every placement of exactly k rooks of the given kind exactly once,
/// in column-major DFS order.  Lazy: nothing is materialized.
template <typename Fn>
void for_each_placement(const CellSetBoard& board, long k, PlacementKind kind, long m, Fn&& fn) {
  if (k < 0) throw std::invalid_argument("for_each_placement: negative rook count");
  if (m <= 0) throw std::invalid_argument("for_each_placement: m must be positive");
  std::vector<Cell> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  std::vector<char> levels_used(static_cast<std::size_t>(level_of_row(std::max(board.max_row(), 1L), m)) + 1, 0);
  detail::placement_rec(board, k, kind, m, 0, chosen, levels_used, fn);
}

std::vector<Placement> enumerate_placements(const CellSetBoard& board, long k, PlacementKind kind,
                                            long m);

/// Number of m-level rook placements with k rooks (brute force).
Int r_km(const FerrersBoard& board, long k, long m);

/// r_{k,m} for k = 0..column_count.
std::vector<Int> r_vector(const FerrersBoard& board, long m);

/// Product over occupied rows of 1|_{y,m} where y counts the rooks of the
/// file placement in that row.  May be zero or negative.
Int m_weight(const Placement& placement, long m);

/// Signed sum of m-weights over all k-rook file placements.
Int f_km(const FerrersBoard& board, long k, long m);

/// f_{k,m} for k = 0..column_count.
std::vector<Int> f_vector(const FerrersBoard& board, long m);

PlacementStats placement_stats(const Placement& placement, const CellSetBoard& board, long m);

/// |D_m(P)|: cells left after removing every m-cohook.  Computed directly
/// from the cohook definition, independently of placement_stats.
long m_diagram_size(const Placement& placement, const CellSetBoard& board, long m);

/// r_{k,m}[B] = sum over k-rook m-level placements of
/// p^{beta - (c_1+...+c_k) m} q^{alpha + epsilon}.
LaurentPoly pq_rook_poly(const FerrersBoard& board, long k, long m);

/// Placement of pi in Cartesian coordinates: rook i at (i, n - pi_i + 1).
Placement permutation_to_placement(const std::vector<long>& pi);

long inv_count(const std::vector<long>& pi);
long coinv_count(const std::vector<long>& pi);

}  // namespace rook
