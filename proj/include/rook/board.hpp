#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rook {

/// A Ferrers board: weakly increasing column heights, listed left to right.
/// Column j (1-based) holds the height(j-1) lowest cells of that column.
/// Values are immutable after construction; every operation on boards is a
/// pure function, so boards can be shared freely across threads.
///
/// Boards are stored exactly as given.  Operations that need the 0-indexed
/// convention with a leading zero column (omega, Delta containment) pad
/// internally and say so in their contract.
class FerrersBoard {
 public:
  FerrersBoard() = default;
  explicit FerrersBoard(std::vector<long> columns);

  /// Parses the text form "h1,h2,...", e.g. "1,3,3".  Empty string is the
  /// empty board.
  static FerrersBoard parse(std::string_view text);

  const std::vector<long>& columns() const { return columns_; }
  std::size_t column_count() const { return columns_.size(); }
  long height(std::size_t j) const { return columns_[j]; }  // 0-based index
  long cell_count() const;
  bool is_empty() const { return columns_.empty(); }

  std::string to_string() const;

  friend bool operator==(const FerrersBoard&, const FerrersBoard&) = default;
  friend bool operator<(const FerrersBoard& a, const FerrersBoard& b) {
    return a.columns_ < b.columns_;
  }

 private:
  std::vector<long> columns_;
};

/// Maximal run of columns sharing the same m-floor of their heights.
/// Column indices are 1-based, matching the zone-by-zone product factors.
struct Zone {
  std::size_t start = 0;
  std::size_t end = 0;
  long floor_value = 0;  // common floor, a multiple of m
  long remainder = 0;    // rho_m(z), sum of residues over the zone
  /// Partial remainders rho_{i,m}(z) for i in [start-1, end]; the first
  /// entry is 0 and the last equals `remainder`.
  std::vector<long> partial_remainders;
};

/// Level i covers the m consecutive rows (i-1)m+1 ... im.
struct Level {
  long index = 1;
  long first_row(long m) const { return (index - 1) * m + 1; }
  long last_row(long m) const { return index * m; }
};

/// 1-based level index of a 1-based row.
inline long level_of_row(long row, long m) { return (row - 1) / m + 1; }

/// Largest multiple of m that is <= n.  Floor semantics, valid for negative n.
long m_floor(long n, long m);

/// Residue n - m_floor(n, m), always in [0, m).
long m_residue(long n, long m);

std::vector<Zone> zones(const FerrersBoard& board, long m);

/// True iff every zone contains at most one column whose height is not a
/// multiple of m; equivalently floor(b_i) != b_i implies
/// floor(b_{i+1}) > floor(b_i).
bool is_singleton(const FerrersBoard& board, long m);

/// True iff b_1 > 0 and b_{j+1} >= b_j + m for all j.  Leading zero columns
/// make a nonempty board fail.
bool is_m_increasing(const FerrersBoard& board, long m);

/// True iff b_{j+1} <= b_j + m for all j >= 0 where the board is read with a
/// leading zero column b_0 = 0 (padded internally when absent).
bool is_m_restricted(const FerrersBoard& board, long m);

/// Reversed vector of per-level cell counts (l_t, ..., l_1); always a
/// singleton board equivalent to the input.
FerrersBoard l_operator(const FerrersBoard& board, long m);

/// Delta_{n,m} = (0, m, 2m, ..., (n-1)m).
FerrersBoard triangular_board(std::size_t n, long m);

/// True iff the board, zero-padded on the left to N columns, satisfies
/// b_j <= j*m with 0-based j.  False when the trimmed board has more than N
/// columns.
bool fits_in(const FerrersBoard& board, std::size_t N, long m);

/// Smallest N with fits_in(board, N, m).
std::size_t minimal_bounding_N(const FerrersBoard& board, long m);

/// Prepends zero columns to reach N columns total.  N must be >= the current
/// column count.
FerrersBoard pad(const FerrersBoard& board, std::size_t N);

/// Removes leading zero columns.
FerrersBoard trim(const FerrersBoard& board);

}  // namespace rook
