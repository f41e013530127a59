#include "rook/factorization.hpp"

#include <stdexcept>

namespace rook {

namespace {

std::string linear_factor_text(long c, bool zone_end, long remainder) {
  std::string out = "x";
  if (c >= 0)
    out += " + " + std::to_string(c);
  else
    out += " - " + std::to_string(-c);
  if (zone_end && remainder != 0) out += " (zone remainder +" + std::to_string(remainder) + ")";
  return out;
}

}  // namespace

IntPolynomial mft_product(const FerrersBoard& board, long m) {
  IntPolynomial out = IntPolynomial::constant(1);
  for (const Zone& z : zones(board, m)) {
    for (std::size_t j = z.start; j <= z.end; ++j) {
      long c = z.floor_value - static_cast<long>(j - 1) * m;
      if (j == z.end) c += z.remainder;
      out *= IntPolynomial::variable() + IntPolynomial::constant(c);
    }
  }
  return out;
}

FactorizationReport verify_mft(const FerrersBoard& board, long m) {
  FactorizationReport report;
  report.board = board;
  report.m = m;
  long n = static_cast<long>(board.column_count());
  IntPolynomial product = mft_product(board, m);
  report.product_side = to_falling_basis(product, m, n).coefficients;
  report.sum_side = r_vector(board, m);
  report.match = report.sum_side == report.product_side;
  for (const Zone& z : zones(board, m))
    for (std::size_t j = z.start; j <= z.end; ++j) {
      long c = z.floor_value - static_cast<long>(j - 1) * m;
      bool last = j == z.end;
      if (last) c += z.remainder;
      report.factors.push_back(linear_factor_text(c, last, z.remainder));
    }
  return report;
}

IntPolynomial mwft_product(const FerrersBoard& board, long m) {
  IntPolynomial out = IntPolynomial::constant(1);
  const auto& cols = board.columns();
  for (std::size_t j = 0; j < cols.size(); ++j) {
    long c = cols[j] - static_cast<long>(j) * m;
    out *= IntPolynomial::variable() + IntPolynomial::constant(c);
  }
  return out;
}

FactorizationReport verify_mwft(const FerrersBoard& board, long m) {
  FactorizationReport report;
  report.board = board;
  report.m = m;
  long n = static_cast<long>(board.column_count());
  IntPolynomial product = mwft_product(board, m);
  report.product_side = to_falling_basis(product, m, n).coefficients;
  report.sum_side = f_vector(board, m);
  report.match = report.sum_side == report.product_side;
  const auto& cols = board.columns();
  for (std::size_t j = 0; j < cols.size(); ++j)
    report.factors.push_back(linear_factor_text(cols[j] - static_cast<long>(j) * m, false, 0));
  return report;
}

namespace {

// (P p^a - Q q^a), i.e. [x + a] (p - q) after substituting P = p^x, Q = q^x.
LaurentPoly cleared_bracket(long a) {
  const VarSet& vars = VarSet::pqPQ();
  LaurentPoly out = LaurentPoly::monomial(vars, {static_cast<int>(a), 0, 1, 0}, 1);
  out -= LaurentPoly::monomial(vars, {0, static_cast<int>(a), 0, 1}, 1);
  return out;
}

LaurentPoly p_minus_q_pqPQ() {
  const VarSet& vars = VarSet::pqPQ();
  LaurentPoly out = LaurentPoly::monomial(vars, {1, 0, 0, 0}, 1);
  out -= LaurentPoly::monomial(vars, {0, 1, 0, 0}, 1);
  return out;
}

long column_offset(std::size_t j, long floor_value, long m) {
  return floor_value - static_cast<long>(j - 1) * m;
}

}  // namespace

LaurentPoly pqmft_sum_side_symbolic(const FerrersBoard& board, long m) {
  const VarSet& vars = VarSet::pqPQ();
  long n = static_cast<long>(board.column_count());
  LaurentPoly total(vars);
  LaurentPoly pq_diff = p_minus_q_pqPQ();
  for (long k = 0; k <= n; ++k) {
    LaurentPoly rk = pq_rook_poly(board, k, m).embed(vars);
    if (rk.is_zero()) continue;
    long p_exp = m * k * (k + 1) / 2;
    LaurentPoly term = LaurentPoly::monomial(vars, {static_cast<int>(p_exp), 0, static_cast<int>(k), 0}, 1);
    term *= rk;
    for (long i = 0; i < k; ++i) term *= pq_diff;
    for (long i = 0; i < n - k; ++i) term *= cleared_bracket(-i * m);
    total += term;
  }
  return total;
}

LaurentPoly pqmft_product_side_symbolic(const FerrersBoard& board, long m) {
  const VarSet& vars = VarSet::pqPQ();
  LaurentPoly total = LaurentPoly::constant(vars, 1);
  for (const Zone& z : zones(board, m)) {
    for (std::size_t j = z.start; j <= z.end; ++j) {
      long a = column_offset(j, z.floor_value, m);
      if (j != z.end) {
        total *= cleared_bracket(a);
        continue;
      }
      // q^{rho(z)} [x + a](p-q) + sum_i P p^{x-part} q^{partial} (p^{rho_i} - q^{rho_i})
      LaurentPoly factor = cleared_bracket(a);
      factor *= LaurentPoly::monomial(vars, {0, static_cast<int>(z.remainder), 0, 0}, 1);
      for (std::size_t i = z.start; i <= z.end; ++i) {
        long rho_i = z.partial_remainders[i - z.start + 1] - z.partial_remainders[i - z.start];
        if (rho_i == 0) continue;
        long ai = column_offset(i, z.floor_value, m);
        long partial_before = z.partial_remainders[i - z.start];
        LaurentPoly piece =
            LaurentPoly::monomial(vars, {static_cast<int>(ai + rho_i), static_cast<int>(partial_before), 1, 0}, 1);
        piece -= LaurentPoly::monomial(vars,
                                       {static_cast<int>(ai), static_cast<int>(partial_before + rho_i), 1, 0}, 1);
        factor += piece;
      }
      total *= factor;
    }
  }
  return total;
}

PqFactorizationReport verify_pqmft_symbolic(const FerrersBoard& board, long m) {
  PqFactorizationReport report;
  report.board = board;
  report.m = m;
  report.symbolic = true;
  report.lhs = pqmft_sum_side_symbolic(board, m);
  report.rhs = pqmft_product_side_symbolic(board, m);
  report.match = report.lhs == report.rhs;
  return report;
}

LaurentPoly pqmft_sum_side_numeric(const FerrersBoard& board, long m, long x) {
  const VarSet& vars = VarSet::pq();
  long n = static_cast<long>(board.column_count());
  LaurentPoly total(vars);
  for (long k = 0; k <= n; ++k) {
    LaurentPoly rk = pq_rook_poly(board, k, m);
    if (rk.is_zero()) continue;
    long p_exp = x * k + m * k * (k + 1) / 2;
    LaurentPoly term = LaurentPoly::monomial(vars, {static_cast<int>(p_exp), 0}, 1);
    term *= rk;
    term *= pq_falling(x, n - k, m);
    total += term;
  }
  return total;
}

LaurentPoly pqmft_product_side_numeric(const FerrersBoard& board, long m, long x) {
  const VarSet& vars = VarSet::pq();
  LaurentPoly total = LaurentPoly::constant(vars, 1);
  for (const Zone& z : zones(board, m)) {
    for (std::size_t j = z.start; j <= z.end; ++j) {
      long a = column_offset(j, z.floor_value, m);
      if (j != z.end) {
        total *= pq_integer_laurent(x + a);
        continue;
      }
      LaurentPoly factor = pq_integer_laurent(x + a);
      factor *= LaurentPoly::monomial(vars, {0, static_cast<int>(z.remainder)}, 1);
      for (std::size_t i = z.start; i <= z.end; ++i) {
        long rho_i = z.partial_remainders[i - z.start + 1] - z.partial_remainders[i - z.start];
        if (rho_i == 0) continue;
        long ai = column_offset(i, z.floor_value, m);
        long partial_before = z.partial_remainders[i - z.start];
        LaurentPoly piece =
            LaurentPoly::monomial(vars, {static_cast<int>(x + ai), static_cast<int>(partial_before)}, 1);
        piece *= pq_integer(rho_i);
        factor += piece;
      }
      total *= factor;
    }
  }
  return total;
}

PqFactorizationReport verify_pqmft_numeric(const FerrersBoard& board, long m,
                                           std::span<const long> x_values) {
  PqFactorizationReport report;
  report.board = board;
  report.m = m;
  report.symbolic = false;
  report.match = true;
  for (long x : x_values) {
    if (x < 0 || x % m != 0)
      throw std::invalid_argument("verify_pqmft_numeric: x must be a nonnegative multiple of m");
    PqFactorizationCheck check;
    check.x = x;
    check.lhs = pqmft_sum_side_numeric(board, m, x);
    check.rhs = pqmft_product_side_numeric(board, m, x);
    check.match = check.lhs == check.rhs;
    report.match = report.match && check.match;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace rook
