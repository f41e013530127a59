#include "rook/sweep.hpp"

#include <algorithm>
#include <numeric>

#include "rook/catalan.hpp"
#include "rook/equivalence.hpp"
#include "rook/factorization.hpp"
#include "rook/hitnumbers.hpp"
#include "rook/intpoly.hpp"
#include "rook/placement.hpp"

namespace rook::sweep {

std::vector<std::string> run_tasks(const std::vector<Task>& tasks, bool parallel) {
  std::vector<std::optional<std::string>> results(tasks.size());
  auto run_one = [&](std::size_t i) {
    try {
      results[i] = tasks[i]();
    } catch (const std::exception& e) {
      results[i] = std::string("exception: ") + e.what();
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(tasks.size()); ++i)
      run_one(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
  }
  std::vector<std::string> failures;
  for (auto& r : results)
    if (r) failures.push_back(std::move(*r));
  return failures;
}

std::vector<FerrersBoard> boards_up_to(long max_cells) {
  std::vector<FerrersBoard> out;
  for (long cells = 0; cells <= max_cells; ++cells) {
    std::vector<FerrersBoard> boards = partitions_of(cells);
    out.insert(out.end(), boards.begin(), boards.end());
  }
  return out;
}

namespace {

// Deterministic pseudo-random stream for property inputs.
struct Lcg {
  unsigned long long state;
  explicit Lcg(unsigned long long seed) : state(seed) {}
  long next(long lo, long hi) {  // inclusive bounds
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    long span = hi - lo + 1;
    return lo + static_cast<long>((state >> 33) % static_cast<unsigned long long>(span));
  }
};

std::string board_tag(const FerrersBoard& b, long m) {
  return "board=(" + b.to_string() + ") m=" + std::to_string(m);
}

bool padded_equal(std::vector<Int> x, std::vector<Int> y) {
  std::size_t len = std::max(x.size(), y.size());
  x.resize(len, 0);
  y.resize(len, 0);
  return x == y;
}

using BoardCheck = std::function<std::optional<std::string>(const FerrersBoard&, long)>;

SuiteResult run_board_suite(std::string name, long max_cells, long m_max, bool parallel,
                            BoardCheck fn) {
  SuiteResult result;
  result.name = std::move(name);
  std::vector<Task> tasks;
  for (const FerrersBoard& b : boards_up_to(max_cells))
    for (long m = 1; m <= m_max; ++m)
      tasks.push_back([b, m, fn]() { return fn(b, m); });
  result.cases = static_cast<long>(tasks.size());
  result.messages = run_tasks(tasks, parallel);
  return result;
}

}  // namespace

SuiteResult suite_falling_basis_roundtrip(long max_degree) {
  SuiteResult result;
  result.name = "falling-basis-roundtrip";
  Lcg rng(20240913);
  for (long m = 1; m <= 4; ++m)
    for (long trial = 0; trial < 60; ++trial) {
      long degree = rng.next(0, max_degree);
      IntPolynomial poly;
      for (long d = 0; d <= degree; ++d)
        if (rng.next(0, 2) != 0) poly += IntPolynomial::monomial(d, rng.next(-9, 9));
      long depth = degree + rng.next(0, 2);
      ++result.cases;
      FallingFactorialExpansion exp = to_falling_basis(poly, m, depth);
      if (exp.reconstruct() != poly)
        result.messages.push_back("round-trip failed for m=" + std::to_string(m) + " poly " +
                                  poly.to_string());
    }
  return result;
}

SuiteResult suite_l_involution(long max_cells, long m_max, bool parallel) {
  return run_board_suite(
      "l-involution-on-singletons", max_cells, m_max, parallel,
      [](const FerrersBoard& b, long m) -> std::optional<std::string> {
        FerrersBoard lb = l_operator(b, m);
        if (!is_singleton(lb, m)) return "l(B) not singleton for " + board_tag(b, m);
        if (lb.cell_count() != b.cell_count())
          return "l(B) changed cell count for " + board_tag(b, m);
        if (is_singleton(b, m) && trim(l_operator(lb, m)) != trim(b))
          return "l(l(B)) != B for singleton " + board_tag(b, m);
        return std::nullopt;
      });
}

SuiteResult suite_l_exchange(long max_cells, long m_max, bool parallel) {
  return run_board_suite(
      "l-exchanges-restricted-increasing", max_cells, m_max, parallel,
      [](const FerrersBoard& b, long m) -> std::optional<std::string> {
        FerrersBoard lb = l_operator(b, m);
        if (is_m_restricted(b, m) && !is_m_increasing(lb, m))
          return "restricted board with non-increasing l(B): " + board_tag(b, m);
        if (is_m_increasing(b, m) && !is_m_restricted(lb, m))
          return "increasing board with non-restricted l(B): " + board_tag(b, m);
        return std::nullopt;
      });
}

SuiteResult suite_root_vector_oracles(long max_cells, long m_max, bool parallel) {
  SuiteResult result;
  result.name = "root-vector-oracles";
  std::vector<Task> tasks;
  for (long cells = 0; cells <= max_cells; ++cells) {
    std::vector<FerrersBoard> boards = partitions_of(cells);
    for (std::size_t i = 0; i < boards.size(); ++i)
      for (std::size_t j = i; j < boards.size(); ++j)
        for (long m = 1; m <= m_max; ++m)
          tasks.push_back([a = boards[i], b = boards[j], m]() -> std::optional<std::string> {
            bool by_zeta = equivalent_level(a, b, m);
            bool by_r = padded_equal(r_vector(a, m), r_vector(b, m));
            if (by_zeta != by_r)
              return "zeta multiset disagrees with r-vector for (" + a.to_string() + ") vs (" +
                     b.to_string() + ") m=" + std::to_string(m);
            bool by_omega = equivalent_weight(a, b, m);
            bool by_f = padded_equal(f_vector(a, m), f_vector(b, m));
            if (by_omega != by_f)
              return "omega multiset disagrees with f-vector for (" + a.to_string() + ") vs (" +
                     b.to_string() + ") m=" + std::to_string(m);
            return std::nullopt;
          });
  }
  result.cases = static_cast<long>(tasks.size());
  result.messages = run_tasks(tasks, parallel);
  return result;
}

SuiteResult suite_dinv_agreement(long m_max) {
  SuiteResult result;
  result.name = "dinv-two-formula-agreement";
  auto check = [&](const std::vector<long>& v, long m) {
    ++result.cases;
    if (dinv(v, m) != dinv_weight_form(v, m)) {
      std::string entries;
      for (long e : v) entries += std::to_string(e) + ",";
      result.messages.push_back("dinv forms disagree on (" + entries + ") m=" + std::to_string(m));
    }
  };
  for (long m = 1; m <= m_max; ++m) {
    // exhaustive short vectors
    long span = m + 2;
    for (long len = 0; len <= 4; ++len) {
      std::vector<long> v(static_cast<std::size_t>(len), 0);
      while (true) {
        check(v, m);
        std::size_t pos = 0;
        while (pos < v.size() && v[pos] == span) v[pos++] = 0;
        if (pos == v.size()) break;
        ++v[pos];
      }
    }
    // seeded longer vectors
    Lcg rng(777 + static_cast<unsigned long long>(m));
    for (long trial = 0; trial < 200; ++trial) {
      std::vector<long> v(static_cast<std::size_t>(rng.next(1, 10)));
      for (long& e : v) e = rng.next(-5, 15);
      check(v, m);
    }
  }
  return result;
}

SuiteResult suite_dinv_monotonicity(long m_max) {
  SuiteResult result;
  result.name = "dinv-adjacent-swap-monotonicity";
  auto check = [&](const std::vector<long>& v, long m) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] <= v[i + 1]) continue;
      ++result.cases;
      long d = v[i] - v[i + 1];
      long before = dinv(v, m);
      std::vector<long> swapped = v;
      std::swap(swapped[i], swapped[i + 1]);
      long after = dinv(swapped, m);
      if (d <= m && before - after != 1)
        result.messages.push_back("swap of an inversion with 0 < d <= m must drop dinv by 1, m=" +
                                  std::to_string(m));
      if (d > m && before != after)
        result.messages.push_back("swap of an inversion with d > m must keep dinv, m=" +
                                  std::to_string(m));
    }
  };
  for (long m = 1; m <= m_max; ++m) {
    long span = m + 2;
    for (long len = 2; len <= 4; ++len) {
      std::vector<long> v(static_cast<std::size_t>(len), 0);
      while (true) {
        check(v, m);
        std::size_t pos = 0;
        while (pos < v.size() && v[pos] == span) v[pos++] = 0;
        if (pos == v.size()) break;
        ++v[pos];
      }
    }
    Lcg rng(4242 + static_cast<unsigned long long>(m));
    for (long trial = 0; trial < 200; ++trial) {
      std::vector<long> v(static_cast<std::size_t>(rng.next(2, 10)));
      for (long& e : v) e = rng.next(-5, 15);
      check(v, m);
    }
  }
  return result;
}

SuiteResult suite_mft(long max_cells, long m_max, bool parallel) {
  return run_board_suite("m-factorization-theorem", max_cells, m_max, parallel,
                         [](const FerrersBoard& b, long m) -> std::optional<std::string> {
                           if (!verify_mft(b, m).match)
                             return "mft mismatch for " + board_tag(b, m);
                           return std::nullopt;
                         });
}

SuiteResult suite_mwft(long max_cells, long m_max, bool parallel) {
  return run_board_suite("m-weight-factorization-theorem", max_cells, m_max, parallel,
                         [](const FerrersBoard& b, long m) -> std::optional<std::string> {
                           if (!verify_mwft(b, m).match)
                             return "mwft mismatch for " + board_tag(b, m);
                           return std::nullopt;
                         });
}

SuiteResult suite_pqmft_symbolic(long max_cells, long m_max, bool parallel) {
  return run_board_suite("pq-m-factorization-symbolic", max_cells, m_max, parallel,
                         [](const FerrersBoard& b, long m) -> std::optional<std::string> {
                           if (!verify_pqmft_symbolic(b, m).match)
                             return "pqmft mismatch for " + board_tag(b, m);
                           return std::nullopt;
                         });
}

SuiteResult suite_singleton_class_counts(long max_cells, long m_max, bool parallel) {
  return run_board_suite(
      "singleton-class-count-vs-enumeration", max_cells, m_max, parallel,
      [](const FerrersBoard& b, long m) -> std::optional<std::string> {
        if (!is_singleton(b, m)) return std::nullopt;
        Int formula = count_singleton_class(b, m);
        long found = 0;
        for (const FerrersBoard& member : enumerate_class(b, m, EquivalenceRelation::level))
          if (is_singleton(member, m)) ++found;
        if (formula != found)
          return "singleton class size formula " + formula.str() + " != enumeration " +
                 std::to_string(found) + " for " + board_tag(b, m);
        return std::nullopt;
      });
}

SuiteResult suite_weight_class_counts(long max_cells, long m_max, bool parallel) {
  return run_board_suite(
      "weight-class-count-vs-enumeration", max_cells, m_max, parallel,
      [](const FerrersBoard& b, long m) -> std::optional<std::string> {
        Int formula = count_weight_class(b, m);
        std::size_t found = enumerate_class(b, m, EquivalenceRelation::weight).size();
        if (formula != static_cast<long>(found))
          return "weight class size formula " + formula.str() + " != enumeration " +
                 std::to_string(found) + " for " + board_tag(b, m);
        return std::nullopt;
      });
}

SuiteResult suite_class_dinv_generating(long max_cells, long m_max, bool parallel) {
  return run_board_suite(
      "class-dinv-generating-function", max_cells, m_max, parallel,
      [](const FerrersBoard& b, long m) -> std::optional<std::string> {
        std::size_t N = static_cast<std::size_t>(b.cell_count()) + 1;
        LaurentPoly formula = class_dinv_generating_function(b, N, m);
        LaurentPoly brute(VarSet::q());
        for (const FerrersBoard& member : enumerate_class(b, m, EquivalenceRelation::weight)) {
          BoundedBoard bb = make_bounded(member, N, m);
          brute += LaurentPoly::monomial(VarSet::q(), {static_cast<int>(dinv_board(bb))}, 1);
        }
        if (!(formula == brute))
          return "dinv generating function mismatch for " + board_tag(b, m);
        if (formula.evaluate_all_ones() != count_weight_class(b, m))
          return "dinv generating function at q=1 differs from class size for " + board_tag(b, m);
        return std::nullopt;
      });
}

SuiteResult suite_representatives(long max_cells, long m_max, bool parallel) {
  return run_board_suite(
      "canonical-representatives", max_cells, m_max, parallel,
      [](const FerrersBoard& b, long m) -> std::optional<std::string> {
        FerrersBoard inc = m_increasing_representative(b, m);
        if (!is_m_increasing(inc, m)) return "level representative not m-increasing " + board_tag(b, m);
        if (!padded_equal(r_vector(b, m), r_vector(inc, m)))
          return "level representative not equivalent " + board_tag(b, m);
        long increasing_members = 0;
        for (const FerrersBoard& member : enumerate_class(b, m, EquivalenceRelation::level))
          if (is_m_increasing(member, m)) ++increasing_members;
        if (increasing_members != 1)
          return "class does not contain exactly one m-increasing board " + board_tag(b, m);

        FerrersBoard res = m_restricted_representative(b, m);
        if (!is_m_restricted(res, m)) return "weight representative not m-restricted " + board_tag(b, m);
        if (!padded_equal(f_vector(b, m), f_vector(res, m)))
          return "weight representative not equivalent " + board_tag(b, m);
        long restricted_members = 0;
        for (const FerrersBoard& member : enumerate_class(b, m, EquivalenceRelation::weight))
          if (is_m_restricted(member, m)) ++restricted_members;
        if (restricted_members != 1)
          return "class does not contain exactly one m-restricted board " + board_tag(b, m);

        FerrersBoard rs = m_restricted_singleton_representative(b, m);
        if (!is_m_restricted(rs, m) || !is_singleton(rs, m))
          return "restricted-singleton representative malformed " + board_tag(b, m);
        if (!padded_equal(r_vector(b, m), r_vector(rs, m)))
          return "restricted-singleton representative not equivalent " + board_tag(b, m);
        return std::nullopt;
      });
}

SuiteResult suite_phi(long n_max, long m_max, bool parallel) {
  SuiteResult result;
  result.name = "phi-statistic-exchange-and-bijectivity";
  std::vector<Task> tasks;
  for (long n = 1; n <= n_max; ++n)
    for (long m = 1; m <= m_max; ++m)
      tasks.push_back([n, m]() -> std::optional<std::string> {
        std::vector<FerrersBoard> images;
        std::optional<std::string> failure;
        for_each_bounded_board(static_cast<std::size_t>(n), m, [&](const std::vector<long>& cols) {
          if (failure) return;
          BoundedBoard bb;
          bb.board = FerrersBoard(std::vector<long>(cols));
          bb.n = static_cast<std::size_t>(n);
          bb.m = m;
          BoundedBoard image = phi(bb);
          images.push_back(image.board);
          if (area_complement(bb) != bounce_path(image).bounce())
            failure = "phi does not send area to bounce, n=" + std::to_string(n) +
                      " m=" + std::to_string(m) + " board=(" + bb.board.to_string() + ")";
          else if (dinv_board(bb) != area_complement(image))
            failure = "phi does not send dinv to area, n=" + std::to_string(n) +
                      " m=" + std::to_string(m) + " board=(" + bb.board.to_string() + ")";
          else {
            // h-sequence of the image's bounce path is the multiplicity profile
            std::vector<long> profile = multiplicity_profile(omega_entries(bb));
            while (!profile.empty() && profile.back() == 0) profile.pop_back();
            if (bounce_path(image).h != profile)
              failure = "phi image bounce path differs from omega profile, board=(" +
                        bb.board.to_string() + ")";
          }
        });
        if (failure) return failure;
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end())
          return "phi not injective for n=" + std::to_string(n) + " m=" + std::to_string(m);
        return std::nullopt;
      });
  result.cases = static_cast<long>(tasks.size());
  result.messages = run_tasks(tasks, parallel);
  return result;
}

SuiteResult suite_qt_forms(long n_max, long m_max) {
  SuiteResult result;
  result.name = "qt-catalan-two-forms";
  for (long n = 1; n <= n_max; ++n)
    for (long m = 1; m <= m_max; ++m) {
      ++result.cases;
      if (!(qt_catalan(static_cast<std::size_t>(n), m) ==
            qt_catalan_bounce(static_cast<std::size_t>(n), m)))
        result.messages.push_back("dinv/area and area/bounce forms differ for n=" +
                                  std::to_string(n) + " m=" + std::to_string(m));
    }
  return result;
}

SuiteResult suite_triangle_class_count(long n_max, long m_max) {
  SuiteResult result;
  result.name = "weight-classes-in-triangle";
  for (long n = 1; n <= n_max; ++n)
    for (long m = 1; m <= m_max; ++m) {
      ++result.cases;
      std::vector<std::vector<Int>> signatures;
      for_each_bounded_board(static_cast<std::size_t>(n), m, [&](const std::vector<long>& cols) {
        FerrersBoard b{std::vector<long>(cols)};
        std::vector<Int> f = f_vector(b, m);
        f.resize(static_cast<std::size_t>(n) + 1, 0);
        signatures.push_back(std::move(f));
      });
      std::sort(signatures.begin(), signatures.end());
      signatures.erase(std::unique(signatures.begin(), signatures.end()), signatures.end());
      if (count_weight_classes_in_triangle(static_cast<std::size_t>(n), m) !=
          static_cast<long>(signatures.size()))
        result.messages.push_back("(m+1)^(n-1) formula mismatch for n=" + std::to_string(n) +
                                  " m=" + std::to_string(m));
    }
  return result;
}

SuiteResult suite_hit_sums(long max_level_product) {
  SuiteResult result;
  result.name = "hit-number-sums-and-specializations";
  for (long m = 1; m <= max_level_product; ++m)
    for (long n = 1; m * n <= max_level_product; ++n) {
      Int order = int_pow(Int(m), n) * factorial(n);
      for (const FerrersBoard& b : boards_up_to(std::min(8L, m * n * n))) {
        FerrersBoard t = trim(b);
        if (t.column_count() > static_cast<std::size_t>(n)) continue;
        if (!t.is_empty() && t.columns().back() > m * n) continue;
        ++result.cases;
        std::vector<Int> hits = m_level_hit_numbers(t, static_cast<std::size_t>(n), m);
        Int sum = 0;
        for (const Int& h : hits) sum += h;
        if (sum != order) {
          result.messages.push_back("hit numbers do not sum to the group order for " +
                                    board_tag(t, m) + " n=" + std::to_string(n));
          continue;
        }
        std::vector<LaurentPoly> pq_hits = pq_hit_numbers(t, static_cast<std::size_t>(n), m);
        for (std::size_t k = 0; k < pq_hits.size(); ++k)
          if (pq_hits[k].evaluate_all_ones() != hits[k]) {
            result.messages.push_back("pq hit numbers at p=q=1 differ from m-level for " +
                                      board_tag(t, m) + " n=" + std::to_string(n));
            break;
          }
        if (order <= 1000) {
          std::vector<Int> direct = m_level_hit_numbers_direct(t, static_cast<std::size_t>(n), m);
          if (direct != hits)
            result.messages.push_back("formula differs from wreath enumeration for " +
                                      board_tag(t, m) + " n=" + std::to_string(n));
        }
      }
    }
  return result;
}

SuiteResult suite_rodrigues(long n_max) {
  SuiteResult result;
  result.name = "rodrigues-pq-factorial";
  for (long n = 0; n <= n_max; ++n) {
    ++result.cases;
    FerrersBoard square(std::vector<long>(static_cast<std::size_t>(n), n));
    CellSetBoard cells(square);
    LaurentPoly sum(VarSet::pq());
    std::vector<long> pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 1);
    bool stats_ok = true;
    do {
      Placement p = permutation_to_placement(pi);
      PlacementStats stats = placement_stats(p, cells, 1);
      if (stats.inv != inv_count(pi) || stats.coinv != coinv_count(pi)) stats_ok = false;
      sum += LaurentPoly::monomial(VarSet::pq(),
                                   {static_cast<int>(stats.coinv), static_cast<int>(stats.inv)}, 1);
    } while (std::next_permutation(pi.begin(), pi.end()));
    if (!stats_ok)
      result.messages.push_back("cell-classification inv/coinv differ from direct counts, n=" +
                                std::to_string(n));
    if (!(sum == pq_factorial(n)))
      result.messages.push_back("sum over S_n differs from [n]_{p,q}!, n=" + std::to_string(n));
  }
  return result;
}

std::vector<SuiteResult> run_all(long max_cells, long m_max, bool parallel) {
  std::vector<SuiteResult> out;
  out.push_back(suite_falling_basis_roundtrip(12));
  out.push_back(suite_l_involution(max_cells, m_max, parallel));
  out.push_back(suite_l_exchange(max_cells, m_max, parallel));
  out.push_back(suite_root_vector_oracles(std::min(max_cells, 8L), m_max, parallel));
  out.push_back(suite_dinv_agreement(m_max));
  out.push_back(suite_dinv_monotonicity(m_max));
  out.push_back(suite_mft(max_cells, m_max, parallel));
  out.push_back(suite_mwft(max_cells, m_max, parallel));
  out.push_back(suite_pqmft_symbolic(std::min(max_cells, 7L), std::min(m_max, 3L), parallel));
  out.push_back(suite_singleton_class_counts(std::min(max_cells, 10L), std::min(m_max, 3L), parallel));
  out.push_back(suite_weight_class_counts(std::min(max_cells, 10L), std::min(m_max, 3L), parallel));
  out.push_back(suite_class_dinv_generating(std::min(max_cells, 10L), std::min(m_max, 3L), parallel));
  out.push_back(suite_representatives(std::min(max_cells, 8L), m_max, parallel));
  out.push_back(suite_phi(5, std::min(m_max, 3L), parallel));
  out.push_back(suite_qt_forms(5, std::min(m_max, 3L)));
  out.push_back(suite_triangle_class_count(4, std::min(m_max, 3L)));
  out.push_back(suite_hit_sums(8));
  out.push_back(suite_rodrigues(6));
  return out;
}

}  // namespace rook::sweep
