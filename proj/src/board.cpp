#include "rook/board.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace rook {

FerrersBoard::FerrersBoard(std::vector<long> columns) : columns_(std::move(columns)) {
  long prev = 0;
  for (long h : columns_) {
    if (h < 0) throw std::invalid_argument("FerrersBoard: negative column height");
    if (h < prev) throw std::invalid_argument("FerrersBoard: columns must be weakly increasing");
    prev = h;
  }
}

FerrersBoard FerrersBoard::parse(std::string_view text) {
  std::vector<long> cols;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw std::invalid_argument("board text: empty entry");
    long value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw std::invalid_argument("board text: bad entry '" + std::string(item) + "'");
    cols.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    if (pos == text.size()) throw std::invalid_argument("board text: trailing comma");
  }
  return FerrersBoard(std::move(cols));
}

long FerrersBoard::cell_count() const {
  long total = 0;
  for (long h : columns_) total += h;
  return total;
}

std::string FerrersBoard::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(columns_[j]);
  }
  return out;
}

long m_floor(long n, long m) {
  if (m <= 0) throw std::invalid_argument("m_floor: m must be positive");
  long r = n % m;
  if (r < 0) r += m;
  return n - r;
}

long m_residue(long n, long m) { return n - m_floor(n, m); }

std::vector<Zone> zones(const FerrersBoard& board, long m) {
  if (m <= 0) throw std::invalid_argument("zones: m must be positive");
  std::vector<Zone> out;
  const auto& cols = board.columns();
  std::size_t j = 0;
  while (j < cols.size()) {
    Zone z;
    z.start = j + 1;
    z.floor_value = m_floor(cols[j], m);
    z.partial_remainders.push_back(0);
    long running = 0;
    while (j < cols.size() && m_floor(cols[j], m) == z.floor_value) {
      running += m_residue(cols[j], m);
      z.partial_remainders.push_back(running);
      ++j;
    }
    z.end = j;
    z.remainder = running;
    out.push_back(std::move(z));
  }
  return out;
}

bool is_singleton(const FerrersBoard& board, long m) {
  if (m <= 0) throw std::invalid_argument("is_singleton: m must be positive");
  const auto& cols = board.columns();
  for (std::size_t i = 0; i + 1 < cols.size(); ++i) {
    if (m_floor(cols[i], m) != cols[i] && m_floor(cols[i + 1], m) <= m_floor(cols[i], m))
      return false;
  }
  return true;
}

bool is_m_increasing(const FerrersBoard& board, long m) {
  if (m <= 0) throw std::invalid_argument("is_m_increasing: m must be positive");
  const auto& cols = board.columns();
  if (cols.empty()) return true;
  if (cols.front() <= 0) return false;
  for (std::size_t j = 0; j + 1 < cols.size(); ++j)
    if (cols[j + 1] < cols[j] + m) return false;
  return true;
}

bool is_m_restricted(const FerrersBoard& board, long m) {
  if (m <= 0) throw std::invalid_argument("is_m_restricted: m must be positive");
  const auto& cols = board.columns();
  long prev = 0;  // implicit b_0 = 0
  for (long h : cols) {
    if (h > prev + m) return false;
    prev = h;
  }
  return true;
}

FerrersBoard l_operator(const FerrersBoard& board, long m) {
  if (m <= 0) throw std::invalid_argument("l_operator: m must be positive");
  const auto& cols = board.columns();
  if (cols.empty()) return FerrersBoard();
  long max_height = cols.back();
  long levels = (max_height + m - 1) / m;
  std::vector<long> per_level(static_cast<std::size_t>(levels), 0);
  for (long h : cols)
    for (long i = 0; i < levels; ++i) {
      long in_level = std::clamp(h - i * m, 0L, m);
      per_level[static_cast<std::size_t>(i)] += in_level;
    }
  while (!per_level.empty() && per_level.back() == 0) per_level.pop_back();
  std::reverse(per_level.begin(), per_level.end());
  return FerrersBoard(std::move(per_level));
}

FerrersBoard triangular_board(std::size_t n, long m) {
  if (m <= 0) throw std::invalid_argument("triangular_board: m must be positive");
  std::vector<long> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = static_cast<long>(j) * m;
  return FerrersBoard(std::move(cols));
}

bool fits_in(const FerrersBoard& board, std::size_t N, long m) {
  if (m <= 0) throw std::invalid_argument("fits_in: m must be positive");
  FerrersBoard t = trim(board);
  if (t.column_count() > N) return false;
  std::size_t offset = N - t.column_count();
  for (std::size_t j = 0; j < t.column_count(); ++j)
    if (t.height(j) > static_cast<long>(offset + j) * m) return false;
  return true;
}

std::size_t minimal_bounding_N(const FerrersBoard& board, long m) {
  if (m <= 0) throw std::invalid_argument("minimal_bounding_N: m must be positive");
  FerrersBoard t = trim(board);
  if (t.is_empty()) return 1;
  long cells = t.cell_count();
  // Pad to |B|+1 columns, split omega at the last leading zero of the board,
  // and read the minimum off the final part.
  std::size_t total = static_cast<std::size_t>(cells) + 1;
  std::size_t lead = total - t.column_count();  // indices 0..lead-1 are zero columns
  long min_final = 0;
  bool first = true;
  for (std::size_t j = 0; j < t.column_count(); ++j) {
    long entry = static_cast<long>(lead + j) * m - t.height(j);
    if (first || entry < min_final) {
      min_final = entry;
      first = false;
    }
  }
  long n = static_cast<long>(total) - min_final / m;  // min_final >= 0 here
  return static_cast<std::size_t>(n);
}

FerrersBoard pad(const FerrersBoard& board, std::size_t N) {
  if (N < board.column_count()) throw std::invalid_argument("pad: N smaller than board");
  std::vector<long> cols(N - board.column_count(), 0);
  cols.insert(cols.end(), board.columns().begin(), board.columns().end());
  return FerrersBoard(std::move(cols));
}

FerrersBoard trim(const FerrersBoard& board) {
  const auto& cols = board.columns();
  std::size_t first = 0;
  while (first < cols.size() && cols[first] == 0) ++first;
  return FerrersBoard(std::vector<long>(cols.begin() + static_cast<long>(first), cols.end()));
}

}  // namespace rook
