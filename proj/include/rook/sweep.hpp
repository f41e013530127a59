#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rook/board.hpp"

namespace rook::sweep {

/// Outcome of one invariant suite: number of cases checked and the failure
/// messages (empty when green).  Message order is deterministic regardless
/// of how the tasks were scheduled.
struct SuiteResult {
  std::string name;
  long cases = 0;
  std::vector<std::string> messages;

  long failures() const { return static_cast<long>(messages.size()); }
  bool passed() const { return messages.empty(); }
};

using Task = std::function<std::optional<std::string>()>;

/// Runs independent tasks and collects failure messages in task order.
/// With parallel = true the tasks are dispatched across OpenMP threads;
/// the serial path is kept as the reference and both produce identical
/// results.
std::vector<std::string> run_tasks(const std::vector<Task>& tasks, bool parallel);

/// All Ferrers boards (trimmed partitions) with 0..max_cells cells.
std::vector<FerrersBoard> boards_up_to(long max_cells);

SuiteResult suite_falling_basis_roundtrip(long max_degree);
SuiteResult suite_l_involution(long max_cells, long m_max, bool parallel);
SuiteResult suite_l_exchange(long max_cells, long m_max, bool parallel);
SuiteResult suite_root_vector_oracles(long max_cells, long m_max, bool parallel);
SuiteResult suite_dinv_agreement(long m_max);
SuiteResult suite_dinv_monotonicity(long m_max);
SuiteResult suite_mft(long max_cells, long m_max, bool parallel);
SuiteResult suite_mwft(long max_cells, long m_max, bool parallel);
SuiteResult suite_pqmft_symbolic(long max_cells, long m_max, bool parallel);
SuiteResult suite_singleton_class_counts(long max_cells, long m_max, bool parallel);
SuiteResult suite_weight_class_counts(long max_cells, long m_max, bool parallel);
SuiteResult suite_class_dinv_generating(long max_cells, long m_max, bool parallel);
SuiteResult suite_representatives(long max_cells, long m_max, bool parallel);
SuiteResult suite_phi(long n_max, long m_max, bool parallel);
SuiteResult suite_qt_forms(long n_max, long m_max);
SuiteResult suite_triangle_class_count(long n_max, long m_max);
SuiteResult suite_hit_sums(long max_level_product);
SuiteResult suite_rodrigues(long n_max);

/// Every suite at bounds derived from max_cells / m_max (the expensive
/// symbolic and bijection sweeps are clamped to their documented ranges).
std::vector<SuiteResult> run_all(long max_cells, long m_max, bool parallel);

}  // namespace rook::sweep
