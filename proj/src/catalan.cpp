#include "rook/catalan.hpp"

#include <algorithm>
#include <stdexcept>

namespace rook {

BoundedBoard make_bounded(const FerrersBoard& board, std::size_t n, long m) {
  if (n == 0) throw std::invalid_argument("make_bounded: n must be positive");
  if (m <= 0) throw std::invalid_argument("make_bounded: m must be positive");
  if (!fits_in(board, n, m))
    throw std::invalid_argument("make_bounded: board does not fit in Delta_{n,m}");
  BoundedBoard bb;
  bb.board = pad(trim(board), n);
  bb.n = n;
  bb.m = m;
  return bb;
}

std::vector<long> omega_entries(const BoundedBoard& bb) {
  return omega(bb.board, bb.m, bb.n).entries;
}

long area_complement(const BoundedBoard& bb) {
  long total = 0;
  for (long e : omega_entries(bb)) total += e;
  return total;
}

long dinv(std::span<const long> entries, long m) {
  if (m <= 0) throw std::invalid_argument("dinv: m must be positive");
  long count = 0;
  for (long k = 0; k < m; ++k)
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (std::size_t j = i + 1; j < entries.size(); ++j) {
        long d = entries[i] - entries[j] + k;
        if (0 <= d && d <= m) ++count;
      }
  return count;
}

long dinv_weight_form(std::span<const long> entries, long m) {
  if (m <= 0) throw std::invalid_argument("dinv_weight_form: m must be positive");
  auto f = [m](long d) -> long {
    if (0 < d && d <= m) return m - d + 1;
    if (-m <= d && d <= 0) return m + d;
    return 0;
  };
  long count = 0;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j) count += f(entries[i] - entries[j]);
  return count;
}

long dinv_board(const BoundedBoard& bb) {
  std::vector<long> entries = omega_entries(bb);
  return dinv(entries, bb.m);
}

long BouncePath::bounce() const {
  long total = 0;
  for (std::size_t i = 0; i < h.size(); ++i) total += static_cast<long>(i) * h[i];
  return total;
}

BouncePath bounce_path(const BoundedBoard& bb) {
  long n = static_cast<long>(bb.n);
  long m = bb.m;
  const auto& cols = bb.board.columns();
  // (x, y) with 1 <= x <= n is strictly southeast of the boundary iff
  // y < b_{x-1}.
  auto interior = [&](long x, long y) {
    return x >= 1 && x <= n && y < cols[static_cast<std::size_t>(x - 1)];
  };

  BouncePath path;
  long x = 0, y = 0;
  long guard = n + n * m + m + 2;
  for (long i = 0;; ++i) {
    if (i > guard) throw std::logic_error("bounce_path: failed to terminate");
    long h = 0;
    while (x < n && !interior(x + 1, y)) {
      ++x;
      ++h;
    }
    path.h.push_back(h);
    long v = 0;
    for (long j = std::max(0L, i - m + 1); j <= i; ++j) v += path.h[static_cast<std::size_t>(j)];
    path.v.push_back(v);
    y += v;
    if (x == n && y == n * m) break;
    if (h == 0 && v == 0) throw std::logic_error("bounce_path: stalled before reaching (n, nm)");
  }
  while (!path.h.empty() && path.h.back() == 0) path.h.pop_back();

  // composition rule: h_0 > 0 and at most m-1 consecutive zeros
  if (!path.h.empty() && path.h.front() == 0)
    throw std::logic_error("bounce_path: leading zero horizontal run");
  long zero_run = 0;
  for (long h : path.h) {
    zero_run = h == 0 ? zero_run + 1 : 0;
    if (zero_run > m - 1) throw std::logic_error("bounce_path: too many consecutive zero runs");
  }
  return path;
}

BoundedBoard phi(const BoundedBoard& bb) {
  std::vector<long> w = omega_entries(bb);
  long t = 0;
  for (long e : w) t = std::max(t, e);

  std::vector<long> heights;
  heights.reserve(bb.n);
  long north_steps = 0;
  for (long i = 0; i <= t + bb.m; ++i)
    for (long a : w) {
      if (a > i || a < i - bb.m) continue;
      if (a == i)
        heights.push_back(north_steps);
      else
        ++north_steps;
    }
  if (heights.size() != bb.n) throw std::logic_error("phi: wrong number of east steps");
  return make_bounded(FerrersBoard(std::move(heights)), bb.n, bb.m);
}

LaurentPoly qt_catalan(std::size_t n, long m) {
  LaurentPoly out(VarSet::qt());
  for_each_bounded_board(n, m, [&](const std::vector<long>& cols) {
    BoundedBoard bb;
    bb.board = FerrersBoard(std::vector<long>(cols));
    bb.n = n;
    bb.m = m;
    out += LaurentPoly::monomial(VarSet::qt(),
                                 {static_cast<int>(dinv_board(bb)),
                                  static_cast<int>(area_complement(bb))},
                                 1);
  });
  return out;
}

LaurentPoly qt_catalan_bounce(std::size_t n, long m) {
  LaurentPoly out(VarSet::qt());
  for_each_bounded_board(n, m, [&](const std::vector<long>& cols) {
    BoundedBoard bb;
    bb.board = FerrersBoard(std::vector<long>(cols));
    bb.n = n;
    bb.m = m;
    out += LaurentPoly::monomial(VarSet::qt(),
                                 {static_cast<int>(area_complement(bb)),
                                  static_cast<int>(bounce_path(bb).bounce())},
                                 1);
  });
  return out;
}

LaurentPoly class_dinv_generating_function(const FerrersBoard& b0, std::size_t N, long m) {
  BoundedBoard bb = make_bounded(b0, N, m);
  std::vector<long> profile = multiplicity_profile(omega_entries(bb));
  auto n_at = [&](long i) -> long {
    if (i < 0 || static_cast<std::size_t>(i) >= profile.size()) return 0;
    return profile[static_cast<std::size_t>(i)];
  };
  long max_value = static_cast<long>(profile.size()) - 1;

  long c = 0;
  for (long i = 0; i <= max_value; ++i) c += m * (n_at(i) * (n_at(i) - 1) / 2);
  for (long i = 1; i <= max_value; ++i) {
    long inner = 0;
    for (long j = 1; j <= m; ++j) inner += (m - j) * n_at(i - j);
    c += n_at(i) * inner;
  }

  LaurentPoly out = LaurentPoly::monomial(VarSet::q(), {static_cast<int>(c)}, 1);
  for (long i = 1; i <= max_value; ++i) {
    long window_sum = 0;
    for (long d = 0; d <= m; ++d) window_sum += n_at(i - d);
    out *= q_binomial(window_sum - 1, n_at(i));
  }
  return out;
}

namespace {

// Leftmost-feasible block insertion of the value classes of omega, in
// increasing value order; produces the omega-check vector of the class.
std::vector<long> omega_check(const std::vector<long>& profile, long m) {
  std::vector<long> out;
  long max_value = static_cast<long>(profile.size()) - 1;
  for (long v = 0; v <= max_value; ++v) {
    long copies = profile[static_cast<std::size_t>(v)];
    if (copies == 0) continue;
    if (out.empty()) {
      if (v != 0) throw std::logic_error("omega_check: profile must start at value 0");
      out.assign(static_cast<std::size_t>(copies), 0);
      continue;
    }
    std::size_t pos = 1;
    while (pos <= out.size() && out[pos - 1] < v - m) ++pos;
    if (pos > out.size()) throw std::logic_error("omega_check: no feasible insertion point");
    out.insert(out.begin() + static_cast<long>(pos), static_cast<std::size_t>(copies), v);
  }
  return out;
}

FerrersBoard board_of_omega(std::span<const long> entries, long m) {
  std::vector<long> cols(entries.size());
  for (std::size_t j = 0; j < entries.size(); ++j)
    cols[j] = static_cast<long>(j) * m - entries[j];
  return FerrersBoard(std::move(cols));
}

FerrersBoard repad_to(const FerrersBoard& board, std::size_t columns) {
  FerrersBoard t = trim(board);
  if (t.column_count() <= columns) return pad(t, columns);
  return t;
}

}  // namespace

std::pair<FerrersBoard, FerrersBoard> extremal_dinv_boards(const FerrersBoard& b0, long m) {
  FerrersBoard t = trim(b0);
  std::size_t N = static_cast<std::size_t>(t.cell_count()) + 1;
  std::vector<long> w = omega(t, m, N).entries;

  std::vector<long> sorted = w;
  std::sort(sorted.begin(), sorted.end());
  FerrersBoard b1 = board_of_omega(sorted, m);

  std::vector<long> checked = omega_check(multiplicity_profile(w), m);
  FerrersBoard b2 = board_of_omega(checked, m);

  return {repad_to(b1, b0.column_count()), repad_to(b2, b0.column_count())};
}

Int count_weight_classes_in_triangle(std::size_t n, long m) {
  if (n == 0) throw std::invalid_argument("count_weight_classes_in_triangle: n must be positive");
  return int_pow(Int(m + 1), static_cast<long>(n) - 1);
}

}  // namespace rook
