#pragma once

#include <span>
#include <vector>

#include "rook/board.hpp"
#include "rook/ints.hpp"

namespace rook {

enum class RootKind { level, weight };

/// zeta_m(B) (level kind, 1-indexed entries) or omega_m(B) (weight kind,
/// 0-indexed entries).  Entries depend on the padding, so the padding used is
/// carried along.
struct RootVector {
  std::vector<long> entries;
  RootKind kind = RootKind::level;
  std::size_t padding = 0;  // column count used
};

/// Level root vector at padding N columns:
/// a_j = (j-1)m - floor_m(b_j) - [j last in zone] rho_m(z).
/// For singleton boards this reduces to a_j = (j-1)m - b_j.
RootVector zeta(const FerrersBoard& board, long m, std::size_t N);

/// Weight root vector at N columns (0-indexed, requires the padded board to
/// start with a zero column): a_j = j m - b_j.
RootVector omega(const FerrersBoard& board, long m, std::size_t N);

/// Multiplicity profile n(v): n_i = number of copies of i.  Entries must be
/// nonnegative; the result is indexed 0..max(v).
std::vector<long> multiplicity_profile(std::span<const long> entries);

/// B and B' have equal r_{k,m} (resp. f_{k,m}) for all k.  Decided by
/// comparing root-vector multisets at a common padding.
bool equivalent_level(const FerrersBoard& a, const FerrersBoard& b, long m);
bool equivalent_weight(const FerrersBoard& a, const FerrersBoard& b, long m);

/// Whether the vector is zeta_m of a singleton board: first entry 0,
/// a_{j+1} <= a_j + m, and floors weakly decrease across consecutive
/// non-multiples of m.
bool validate_zeta_singleton(std::span<const long> entries, long m);

/// Whether the vector is omega_m of a Ferrers board: first entry 0 and
/// a_{j+1} <= a_j + m.
bool validate_omega(std::span<const long> entries, long m);

/// Intermediate data of the m-increasing construction, kept for inspection.
struct MIncreasingTrace {
  FerrersBoard singleton_base;       // l(B)
  std::vector<long> zeta_padded;     // zeta at |B|+1 columns
  long largest_multiple = 0;         // cm
  std::vector<long> zeta_rearranged; // (0, m, ..., cm) then weakly decreasing
  FerrersBoard representative;
};

/// The unique m-increasing board m-level rook equivalent to B.
FerrersBoard m_increasing_representative(const FerrersBoard& board, long m);
MIncreasingTrace m_increasing_representative_trace(const FerrersBoard& board, long m);

struct MRestrictedTrace {
  std::vector<long> omega_padded;  // omega at |B|+1 entries
  std::vector<long> omega_sorted;  // weakly increasing rearrangement
  FerrersBoard representative;
};

/// The unique m-restricted board m-weight file equivalent to B.
FerrersBoard m_restricted_representative(const FerrersBoard& board, long m);
MRestrictedTrace m_restricted_representative_trace(const FerrersBoard& board, long m);

/// l applied to the m-increasing representative: the unique m-restricted
/// singleton board in the m-level class.
FerrersBoard m_restricted_singleton_representative(const FerrersBoard& board, long m);

/// Number of singleton boards m-level rook equivalent to the given singleton
/// board.  Throws on non-singleton input.
Int count_singleton_class(const FerrersBoard& board, long m);

/// Number of Ferrers boards in the m-weight equivalence class.
Int count_weight_class(const FerrersBoard& board, long m);

enum class EquivalenceRelation { level, weight };

/// All Ferrers boards (as trimmed partitions, sorted) with the same cell
/// count and matching r- or f-vector.  Brute-force oracle for the counting
/// theorems.
std::vector<FerrersBoard> enumerate_class(const FerrersBoard& board, long m,
                                          EquivalenceRelation relation);

namespace detail {
template <typename Fn>
void partition_rec(long remaining, long min_part, std::vector<long>& parts, Fn&& fn) {
  if (remaining == 0) {
    fn(static_cast<const std::vector<long>&>(parts));
    return;
  }
  for (long p = min_part; p <= remaining; ++p) {
    parts.push_back(p);
    partition_rec(remaining - p, p, parts, fn);
    parts.pop_back();
  }
}
}  // namespace detail

/// Visits every partition of `cells` as a weakly increasing vector of
/// positive parts, in lexicographic order.  cells = 0 yields the empty
/// partition.
template <typename Fn>
void for_each_partition(long cells, Fn&& fn) {
  if (cells < 0) throw std::invalid_argument("for_each_partition: negative cell count");
  std::vector<long> parts;
  detail::partition_rec(cells, 1, parts, fn);
}

std::vector<FerrersBoard> partitions_of(long cells);

}  // namespace rook
