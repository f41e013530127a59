#include "rook/equivalence.hpp"

#include <algorithm>
#include <stdexcept>

#include "rook/placement.hpp"

namespace rook {

RootVector zeta(const FerrersBoard& board, long m, std::size_t N) {
  if (m <= 0) throw std::invalid_argument("zeta: m must be positive");
  FerrersBoard padded = pad(board, N);
  RootVector out;
  out.kind = RootKind::level;
  out.padding = N;
  out.entries.resize(N);
  if (is_singleton(padded, m)) {
    for (std::size_t j = 1; j <= N; ++j)
      out.entries[j - 1] = static_cast<long>(j - 1) * m - padded.height(j - 1);
    return out;
  }
  for (const Zone& z : zones(padded, m))
    for (std::size_t j = z.start; j <= z.end; ++j) {
      long a = static_cast<long>(j - 1) * m - z.floor_value;
      if (j == z.end) a -= z.remainder;
      out.entries[j - 1] = a;
    }
  return out;
}

RootVector omega(const FerrersBoard& board, long m, std::size_t N) {
  if (m <= 0) throw std::invalid_argument("omega: m must be positive");
  FerrersBoard padded = pad(board, N);
  if (N == 0 || padded.height(0) != 0)
    throw std::invalid_argument("omega: padded board must start with a zero column");
  RootVector out;
  out.kind = RootKind::weight;
  out.padding = N;
  out.entries.resize(N);
  for (std::size_t j = 0; j < N; ++j)
    out.entries[j] = static_cast<long>(j) * m - padded.height(j);
  return out;
}

std::vector<long> multiplicity_profile(std::span<const long> entries) {
  long max_value = 0;
  for (long v : entries) {
    if (v < 0) throw std::invalid_argument("multiplicity_profile: negative entry");
    max_value = std::max(max_value, v);
  }
  std::vector<long> out(static_cast<std::size_t>(max_value) + 1, 0);
  for (long v : entries) ++out[static_cast<std::size_t>(v)];
  return out;
}

namespace {

bool multiset_equal(std::vector<long> a, std::vector<long> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

bool equivalent_level(const FerrersBoard& a, const FerrersBoard& b, long m) {
  if (a.cell_count() != b.cell_count()) return false;
  std::size_t N = std::max(a.column_count(), b.column_count());
  return multiset_equal(zeta(a, m, N).entries, zeta(b, m, N).entries);
}

bool equivalent_weight(const FerrersBoard& a, const FerrersBoard& b, long m) {
  if (a.cell_count() != b.cell_count()) return false;
  std::size_t N = std::max(a.column_count(), b.column_count()) + 1;
  return multiset_equal(omega(a, m, N).entries, omega(b, m, N).entries);
}

bool validate_zeta_singleton(std::span<const long> entries, long m) {
  if (m <= 0) throw std::invalid_argument("validate_zeta_singleton: m must be positive");
  if (entries.empty()) return true;
  if (entries[0] != 0) return false;
  for (std::size_t j = 0; j + 1 < entries.size(); ++j) {
    if (entries[j + 1] > entries[j] + m) return false;
    bool j_mult = m_residue(entries[j], m) == 0;
    bool j1_mult = m_residue(entries[j + 1], m) == 0;
    if (!j_mult && !j1_mult && m_floor(entries[j + 1], m) > m_floor(entries[j], m)) return false;
  }
  return true;
}

bool validate_omega(std::span<const long> entries, long m) {
  if (m <= 0) throw std::invalid_argument("validate_omega: m must be positive");
  if (entries.empty()) return true;
  if (entries[0] != 0) return false;
  for (std::size_t j = 0; j + 1 < entries.size(); ++j)
    if (entries[j + 1] > entries[j] + m) return false;
  return true;
}

namespace {

FerrersBoard board_from_zeta(std::span<const long> entries, long m) {
  std::vector<long> cols(entries.size());
  for (std::size_t j = 0; j < entries.size(); ++j)
    cols[j] = static_cast<long>(j) * m - entries[j];
  return FerrersBoard(std::move(cols));  // throws if not weakly increasing
}

FerrersBoard board_from_omega(std::span<const long> entries, long m) {
  std::vector<long> cols(entries.size());
  for (std::size_t j = 0; j < entries.size(); ++j)
    cols[j] = static_cast<long>(j) * m - entries[j];
  return FerrersBoard(std::move(cols));
}

}  // namespace

MIncreasingTrace m_increasing_representative_trace(const FerrersBoard& board, long m) {
  MIncreasingTrace trace;
  trace.singleton_base = l_operator(board, m);
  std::size_t N = static_cast<std::size_t>(board.cell_count()) + 1;
  trace.zeta_padded = zeta(trace.singleton_base, m, N).entries;

  long cm = 0;
  for (long a : trace.zeta_padded)
    if (m_residue(a, m) == 0) cm = std::max(cm, a);
  trace.largest_multiple = cm;

  std::vector<long> rest = trace.zeta_padded;
  for (long v = 0; v <= cm; v += m) {
    auto it = std::find(rest.begin(), rest.end(), v);
    if (it == rest.end())
      throw std::logic_error("m_increasing_representative: missing multiple in root vector");
    rest.erase(it);
  }
  std::sort(rest.begin(), rest.end(), std::greater<long>());

  trace.zeta_rearranged.clear();
  for (long v = 0; v <= cm; v += m) trace.zeta_rearranged.push_back(v);
  trace.zeta_rearranged.insert(trace.zeta_rearranged.end(), rest.begin(), rest.end());

  trace.representative = trim(board_from_zeta(trace.zeta_rearranged, m));
  if (!is_m_increasing(trace.representative, m))
    throw std::logic_error("m_increasing_representative: result not m-increasing");
  return trace;
}

FerrersBoard m_increasing_representative(const FerrersBoard& board, long m) {
  return m_increasing_representative_trace(board, m).representative;
}

MRestrictedTrace m_restricted_representative_trace(const FerrersBoard& board, long m) {
  MRestrictedTrace trace;
  FerrersBoard t = trim(board);
  std::size_t N = static_cast<std::size_t>(t.cell_count()) + 1;
  trace.omega_padded = omega(t, m, N).entries;
  trace.omega_sorted = trace.omega_padded;
  std::sort(trace.omega_sorted.begin(), trace.omega_sorted.end());
  trace.representative = trim(board_from_omega(trace.omega_sorted, m));
  if (!is_m_restricted(trace.representative, m))
    throw std::logic_error("m_restricted_representative: result not m-restricted");
  return trace;
}

FerrersBoard m_restricted_representative(const FerrersBoard& board, long m) {
  return m_restricted_representative_trace(board, m).representative;
}

FerrersBoard m_restricted_singleton_representative(const FerrersBoard& board, long m) {
  return l_operator(m_increasing_representative(board, m), m);
}

Int count_singleton_class(const FerrersBoard& board, long m) {
  if (!is_singleton(board, m))
    throw std::invalid_argument("count_singleton_class: board is not singleton");
  FerrersBoard t = trim(board);
  std::size_t N = static_cast<std::size_t>(t.cell_count()) + 1;
  std::vector<long> entries = zeta(t, m, N).entries;
  std::vector<long> profile = multiplicity_profile(entries);
  auto n_at = [&](long i) -> long {
    if (i < 0 || static_cast<std::size_t>(i) >= profile.size()) return 0;
    return profile[static_cast<std::size_t>(i)];
  };

  Int out = 1;
  long max_value = static_cast<long>(profile.size()) - 1;
  for (long im = 0; im <= max_value; im += m) {
    long window_sum = 0;
    for (long d = 0; d <= m; ++d) window_sum += n_at(im + d);
    if (window_sum == 0) continue;
    if (n_at(im) == 0)
      throw std::logic_error("count_singleton_class: profile window without its multiple");
    std::vector<long> parts;
    parts.push_back(n_at(im) - 1);
    for (long d = 1; d <= m; ++d) parts.push_back(n_at(im + d));
    out *= multinomial(window_sum - 1, parts);
  }
  return out;
}

Int count_weight_class(const FerrersBoard& board, long m) {
  FerrersBoard t = trim(board);
  std::size_t N = static_cast<std::size_t>(t.cell_count()) + 1;
  std::vector<long> entries = omega(t, m, N).entries;
  std::vector<long> profile = multiplicity_profile(entries);
  auto n_at = [&](long i) -> long {
    if (i < 0 || static_cast<std::size_t>(i) >= profile.size()) return 0;
    return profile[static_cast<std::size_t>(i)];
  };

  Int out = 1;
  long max_value = static_cast<long>(profile.size()) - 1;
  for (long i = 1; i <= max_value; ++i) {
    long window_sum = 0;
    for (long d = 0; d <= m; ++d) window_sum += n_at(i - d);
    out *= binomial(window_sum - 1, n_at(i));
  }
  return out;
}

namespace {

std::vector<Int> padded_count_vector(std::vector<Int> v, std::size_t len) {
  v.resize(len, 0);
  return v;
}

}  // namespace

std::vector<FerrersBoard> enumerate_class(const FerrersBoard& board, long m,
                                          EquivalenceRelation relation) {
  FerrersBoard t = trim(board);
  long cells = t.cell_count();
  std::size_t vector_len = static_cast<std::size_t>(cells) + 1;
  std::vector<Int> target =
      relation == EquivalenceRelation::level
          ? padded_count_vector(r_vector(t, m), vector_len)
          : padded_count_vector(f_vector(t, m), vector_len);

  std::vector<FerrersBoard> out;
  for_each_partition(cells, [&](const std::vector<long>& parts) {
    FerrersBoard candidate{std::vector<long>(parts)};
    std::vector<Int> vec = relation == EquivalenceRelation::level
                               ? padded_count_vector(r_vector(candidate, m), vector_len)
                               : padded_count_vector(f_vector(candidate, m), vector_len);
    if (vec == target) out.push_back(std::move(candidate));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FerrersBoard> partitions_of(long cells) {
  std::vector<FerrersBoard> out;
  for_each_partition(cells, [&](const std::vector<long>& parts) {
    out.emplace_back(std::vector<long>(parts));
  });
  return out;
}

}  // namespace rook
