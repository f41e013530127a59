#include "rook/hitnumbers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rook/intpoly.hpp"
#include "rook/placement.hpp"

namespace rook {

namespace {

void check_inside_box(const FerrersBoard& board, std::size_t n, long max_height,
                      const char* where) {
  FerrersBoard t = trim(board);
  if (t.column_count() > n) throw std::invalid_argument(std::string(where) + ": too many columns");
  if (!t.is_empty() && t.columns().back() > max_height)
    throw std::invalid_argument(std::string(where) + ": column too tall for the box");
}

std::vector<Int> padded_r_vector(const FerrersBoard& board, long m, std::size_t n) {
  std::vector<Int> r = r_vector(board, m);
  r.resize(n + 1, 0);
  return r;
}

IntPolynomial x_minus_one_pow(long k) {
  IntPolynomial base = IntPolynomial::variable() - IntPolynomial::constant(1);
  IntPolynomial out = IntPolynomial::constant(1);
  for (long i = 0; i < k; ++i) out *= base;
  return out;
}

}  // namespace

std::vector<Int> hit_numbers(const FerrersBoard& board, std::size_t n) {
  return m_level_hit_numbers(board, n, 1);
}

std::vector<Int> m_level_hit_numbers(const FerrersBoard& board, std::size_t n, long m) {
  if (m <= 0) throw std::invalid_argument("m_level_hit_numbers: m must be positive");
  check_inside_box(board, n, m * static_cast<long>(n), "m_level_hit_numbers");
  std::vector<Int> r = padded_r_vector(board, m, n);
  IntPolynomial total;
  for (std::size_t k = 0; k <= n; ++k) {
    if (r[k] == 0) continue;
    long rooks_left = static_cast<long>(n - k);
    IntPolynomial term = x_minus_one_pow(static_cast<long>(k));
    term *= r[k] * falling_factorial_value(m * rooks_left, rooks_left, m);
    total += term;
  }
  std::vector<Int> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = total.coefficient(static_cast<long>(k));
  return out;
}

std::vector<LaurentPoly> pq_hit_numbers(const FerrersBoard& board, std::size_t n, long m) {
  if (m <= 0) throw std::invalid_argument("pq_hit_numbers: m must be positive");
  check_inside_box(board, n, m * static_cast<long>(n), "pq_hit_numbers");
  const VarSet& vars = VarSet::pqx();
  const std::size_t x_index = 2;
  LaurentPoly total(vars);
  for (std::size_t k = 0; k <= std::min(n, board.column_count()); ++k) {
    LaurentPoly rk = pq_rook_poly(board, static_cast<long>(k), m);
    if (rk.is_zero()) continue;
    long lk = static_cast<long>(k);
    long rooks_left = static_cast<long>(n - k);
    long p_exp = m * (lk * (lk + 1) / 2 + lk * rooks_left);
    LaurentPoly term = rk.embed(vars);
    term *= pq_falling(m * rooks_left, rooks_left, m).embed(vars);
    term *= LaurentPoly::monomial(vars, {static_cast<int>(p_exp), 0, 0}, 1);
    for (long l = rooks_left + 1; l <= static_cast<long>(n); ++l) {
      LaurentPoly factor = LaurentPoly::monomial(vars, {0, 0, 1}, 1);
      factor -= LaurentPoly::monomial(
          vars, {static_cast<int>(m * (static_cast<long>(n) - l)), static_cast<int>(m * l), 0}, 1);
      term *= factor;
    }
    total += term;
  }
  std::vector<LaurentPoly> out;
  out.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    out.push_back(total.coefficient_in(x_index, static_cast<int>(k)));
  return out;
}

std::vector<Int> hit_numbers_direct(const FerrersBoard& board, std::size_t n) {
  check_inside_box(board, n, static_cast<long>(n), "hit_numbers_direct");
  FerrersBoard t = trim(board);
  auto on_board = [&](long col, long row) {
    return col >= 1 && static_cast<std::size_t>(col) <= t.column_count() &&
           row <= t.height(static_cast<std::size_t>(col - 1));
  };
  std::vector<Int> out(n + 1, 0);
  std::vector<long> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  do {
    long hits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      long col = static_cast<long>(i) + 1;
      long row = static_cast<long>(n) - pi[i] + 1;
      if (on_board(col, row)) ++hits;
    }
    ++out[static_cast<std::size_t>(hits)];
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

std::vector<Int> m_level_hit_numbers_direct(const FerrersBoard& board, std::size_t n, long m) {
  check_inside_box(board, n, m * static_cast<long>(n), "m_level_hit_numbers_direct");
  FerrersBoard t = trim(board);
  auto on_board = [&](long col, long row) {
    return col >= 1 && static_cast<std::size_t>(col) <= t.column_count() &&
           row <= t.height(static_cast<std::size_t>(col - 1));
  };
  FerrersBoard box(std::vector<long>(n, m * static_cast<long>(n)));
  CellSetBoard cells(box);
  std::vector<Int> out(n + 1, 0);
  for_each_placement(cells, static_cast<long>(n), PlacementKind::rook, m,
                     [&](const Placement& p) {
                       long hits = 0;
                       for (const Cell& c : p.rooks)
                         if (on_board(c.col, c.row)) ++hits;
                       ++out[static_cast<std::size_t>(hits)];
                     });
  return out;
}

std::vector<ScanRecord> positivity_scan(std::span<const FerrersBoard> boards, std::size_t n,
                                        long m, bool specialize_p1) {
  std::vector<ScanRecord> out;
  for (const FerrersBoard& board : boards) {
    ScanRecord record;
    record.board = board;
    std::vector<LaurentPoly> hits = pq_hit_numbers(board, n, m);
    for (std::size_t k = 0; k < hits.size() && !record.negative_found; ++k) {
      LaurentPoly entry = hits[k];
      if (specialize_p1) entry = entry.map_vars(VarSet::q(), {{0}, {1}});
      if (auto neg = entry.first_negative_term()) {
        record.negative_found = true;
        record.entry_index = static_cast<long>(k);
        record.witness =
            LaurentPoly::monomial(entry.vars(), neg->first, neg->second).to_string();
      }
    }
    out.push_back(std::move(record));
  }
  return out;
}

}  // namespace rook
