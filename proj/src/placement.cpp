#include "rook/placement.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rook {

CellSetBoard::CellSetBoard(std::vector<Cell> cells) {
  long max_col = 0;
  for (const Cell& c : cells) {
    if (c.col < 1 || c.row < 1) throw std::invalid_argument("CellSetBoard: coordinates are 1-based");
    max_col = std::max(max_col, c.col);
    max_row_ = std::max(max_row_, c.row);
  }
  col_rows_.assign(static_cast<std::size_t>(max_col), {});
  for (const Cell& c : cells) col_rows_[static_cast<std::size_t>(c.col - 1)].push_back(c.row);
  for (auto& rows : col_rows_) {
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  }
}

CellSetBoard::CellSetBoard(const FerrersBoard& board) {
  col_rows_.assign(board.column_count(), {});
  for (std::size_t j = 0; j < board.column_count(); ++j) {
    long h = board.height(j);
    max_row_ = std::max(max_row_, h);
    auto& rows = col_rows_[j];
    rows.reserve(static_cast<std::size_t>(h));
    for (long r = 1; r <= h; ++r) rows.push_back(r);
  }
}

const std::vector<long>& CellSetBoard::rows_in_column(long col) const {
  static const std::vector<long> none;
  if (col < 1 || static_cast<std::size_t>(col) > col_rows_.size()) return none;
  return col_rows_[static_cast<std::size_t>(col - 1)];
}

bool CellSetBoard::contains(Cell c) const {
  const auto& rows = rows_in_column(c.col);
  return std::binary_search(rows.begin(), rows.end(), c.row);
}

long CellSetBoard::cell_count() const {
  long total = 0;
  for (const auto& rows : col_rows_) total += static_cast<long>(rows.size());
  return total;
}

namespace detail {
bool level_free(const std::vector<char>& used, long level) {
  return !used[static_cast<std::size_t>(level)];
}
}  // namespace detail

std::vector<Placement> enumerate_placements(const CellSetBoard& board, long k, PlacementKind kind,
                                            long m) {
  std::vector<Placement> out;
  for_each_placement(board, k, kind, m, [&](const Placement& p) { out.push_back(p); });
  return out;
}

Int r_km(const FerrersBoard& board, long k, long m) {
  CellSetBoard cells(board);
  Int count = 0;
  for_each_placement(cells, k, PlacementKind::rook, m, [&](const Placement&) { ++count; });
  return count;
}

std::vector<Int> r_vector(const FerrersBoard& board, long m) {
  CellSetBoard cells(board);
  std::vector<Int> out;
  for (long k = 0; k <= static_cast<long>(board.column_count()); ++k) {
    Int count = 0;
    for_each_placement(cells, k, PlacementKind::rook, m, [&](const Placement&) { ++count; });
    out.push_back(count);
  }
  return out;
}

Int m_weight(const Placement& placement, long m) {
  if (placement.kind != PlacementKind::file)
    throw std::invalid_argument("m_weight: defined for file placements");
  std::map<long, long> per_row;
  for (const Cell& c : placement.rooks) ++per_row[c.row];
  Int out = 1;
  for (const auto& [row, y] : per_row) out *= falling_factorial_value(1, y, m);
  return out;
}

Int f_km(const FerrersBoard& board, long k, long m) {
  CellSetBoard cells(board);
  Int sum = 0;
  for_each_placement(cells, k, PlacementKind::file, m,
                     [&](const Placement& p) { sum += m_weight(p, m); });
  return sum;
}

std::vector<Int> f_vector(const FerrersBoard& board, long m) {
  std::vector<Int> out;
  for (long k = 0; k <= static_cast<long>(board.column_count()); ++k)
    out.push_back(f_km(board, k, m));
  return out;
}

PlacementStats placement_stats(const Placement& placement, const CellSetBoard& board, long m) {
  if (m <= 0) throw std::invalid_argument("placement_stats: m must be positive");
  for (const Cell& c : placement.rooks)
    if (!board.contains(c)) throw std::invalid_argument("placement_stats: rook not on board");

  // rook row per column, and the levels blocked to the right of each rook
  std::map<long, long> rook_row;
  for (const Cell& c : placement.rooks) {
    if (rook_row.count(c.col))
      throw std::invalid_argument("placement_stats: two rooks share a column");
    rook_row[c.col] = c.row;
  }

  auto in_some_coleg = [&](long col, long row) {
    long level = level_of_row(row, m);
    for (const Cell& r : placement.rooks)
      if (r.col < col && level_of_row(r.row, m) == level) return true;
    return false;
  };

  PlacementStats stats;
  for (long col = 1; col <= static_cast<long>(board.column_count()); ++col) {
    auto rook_here = rook_row.find(col);
    for (long row : board.rows_in_column(col)) {
      if (rook_here != rook_row.end() && row == rook_here->second) continue;  // the rook itself
      if (in_some_coleg(col, row)) continue;
      if (rook_here == rook_row.end())
        ++stats.epsilon;
      else if (row > rook_here->second)
        ++stats.alpha;
      else
        ++stats.beta;
    }
  }
  stats.inv = stats.alpha + stats.epsilon;
  stats.coinv = stats.beta + stats.epsilon;
  for (const auto& [col, row] : rook_row) stats.column_indices.push_back(col);
  return stats;
}

long m_diagram_size(const Placement& placement, const CellSetBoard& board, long m) {
  long count = 0;
  for (long col = 1; col <= static_cast<long>(board.column_count()); ++col)
    for (long row : board.rows_in_column(col)) {
      bool in_cohook = false;
      for (const Cell& r : placement.rooks) {
        bool is_rook = (r.col == col && r.row == row);
        bool in_coarm = (r.col == col && row < r.row);
        bool in_coleg = (col > r.col && level_of_row(row, m) == level_of_row(r.row, m));
        if (is_rook || in_coarm || in_coleg) {
          in_cohook = true;
          break;
        }
      }
      if (!in_cohook) ++count;
    }
  return count;
}

LaurentPoly pq_rook_poly(const FerrersBoard& board, long k, long m) {
  CellSetBoard cells(board);
  LaurentPoly out(VarSet::pq());
  for_each_placement(cells, k, PlacementKind::rook, m, [&](const Placement& p) {
    PlacementStats s = placement_stats(p, cells, m);
    long col_sum = 0;
    for (long c : s.column_indices) col_sum += c;
    out += LaurentPoly::monomial(VarSet::pq(),
                                 {static_cast<int>(s.beta - col_sum * m),
                                  static_cast<int>(s.alpha + s.epsilon)},
                                 1);
  });
  return out;
}

Placement permutation_to_placement(const std::vector<long>& pi) {
  long n = static_cast<long>(pi.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (long v : pi) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation_to_placement: not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  Placement p;
  p.kind = PlacementKind::rook;
  for (long i = 1; i <= n; ++i)
    p.rooks.push_back({i, n - pi[static_cast<std::size_t>(i - 1)] + 1});
  return p;
}

long inv_count(const std::vector<long>& pi) {
  long count = 0;
  for (std::size_t i = 0; i < pi.size(); ++i)
    for (std::size_t j = i + 1; j < pi.size(); ++j)
      if (pi[i] > pi[j]) ++count;
  return count;
}

long coinv_count(const std::vector<long>& pi) {
  long count = 0;
  for (std::size_t i = 0; i < pi.size(); ++i)
    for (std::size_t j = i + 1; j < pi.size(); ++j)
      if (pi[i] < pi[j]) ++count;
  return count;
}

}  // namespace rook
