#pragma once

// Path polyominoes: interval-length sequence, stairs and the combinatorial
// classification (pseudo-Gorenstein, level, level initial ideal).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polylevel/grid.hpp"
#include "polylevel/rook.hpp"

namespace polylevel {

/// Path positions are 0-based: position k holds cell C_{k+1}.
struct PathStructure {
  Polyomino polyomino;
  std::vector<std::size_t> cells;  // position -> index into polyomino.cells()
  std::vector<std::size_t> interval_lengths;  // l_1 .. l_s
  // Interval k covers positions spans[k].first .. spans[k].second.
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  std::vector<std::vector<std::size_t>> cell_to_intervals;  // position -> interval indices

  std::size_t length() const noexcept { return cells.size(); }
  std::size_t interval_count() const noexcept { return interval_lengths.size(); }
};

/// Throws NotAPath (also for the single cell).
PathStructure path_structure(const Polyomino& p);

/// Rook polynomial by dynamic programming along the intervals.
std::vector<std::uint64_t> path_rook_polynomial(const PathStructure& ps);
std::size_t path_rook_number(const PathStructure& ps);

enum class StairKind { S, S_tilde };

/// Intervals first..last (0-based, inclusive).
struct Stair {
  std::size_t first = 0;
  std::size_t last = 0;
  StairKind kind = StairKind::S;

  std::size_t length() const noexcept { return last - first + 1; }
  friend bool operator==(const Stair&, const Stair&) = default;
};

std::string to_string(StairKind k);

/// Each maximal run of length-2 intervals, extended by its neighbouring
/// intervals where they exist.
std::vector<Stair> stairs(const PathStructure& ps);

inline bool is_bad_stair_length(std::size_t len) { return len == 4 || len == 6 || len >= 8; }

struct PseudoGorensteinVerdict {
  bool value = false;
  std::optional<RookConfig> facet;  // {C_1, C_3, ..., C_l} as cell indices
};
PseudoGorensteinVerdict is_pseudo_gorenstein_path(const PathStructure& ps);

struct LevelVerdict {
  bool value = false;
  std::optional<Stair> bad_stair;
};
LevelVerdict is_level_path(const PathStructure& ps);

bool is_initial_level_path(const PathStructure& ps);

struct PathClassification {
  bool gorenstein = false;
  bool level = false;
  bool pseudo_gorenstein = false;
  bool initial_level = false;
  std::size_t rook_number = 0;
  std::vector<Stair> stairs;
  std::optional<RookConfig> unique_max_facet;
  std::optional<Stair> bad_stair;
};

/// Throws InconsistentClassification when the flag invariants fail.
PathClassification classify_path(const PathStructure& ps);

/// The single cell is Gorenstein; other shapes go through path_structure.
/// nullopt when P is not a path.
std::optional<PathClassification> classify_if_path(const Polyomino& p);

}  // namespace polylevel
