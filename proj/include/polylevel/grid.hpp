#pragma once

// Grid-level model of polyominoes: cells, maximal cell intervals, thinness,
// simplicity, path recognition and canonical forms under the symmetries of
// the square.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polylevel {

/// A unit cell, identified by its lower-left lattice corner.
struct Cell {
  int x = 0;
  int y = 0;

  friend constexpr bool operator==(Cell, Cell) = default;
  // Row-major order: by y, then by x.
  friend constexpr std::strong_ordering operator<=>(Cell a, Cell b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

/// A lattice point (vertex of a cell). Same (y, x) order as Cell.
struct Point {
  int x = 0;
  int y = 0;

  friend constexpr bool operator==(Point, Point) = default;
  friend constexpr std::strong_ordering operator<=>(Point a, Point b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

std::string to_string(Cell c);
std::string to_string(Point p);

/// Normalized, edge-connected, non-empty set of cells.
///
/// Cells are stored deduplicated and sorted in (y, x) order; the minimum x
/// and minimum y are both 0. A cell's position in cells() is its index
/// everywhere else in the library.
class Polyomino {
 public:
  /// Normalizes and validates. Throws ParseError (EmptyInput, NotConnected).
  static Polyomino from_cells(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const noexcept { return cells_; }
  std::size_t rank() const noexcept { return cells_.size(); }
  const Cell& operator[](std::size_t i) const { return cells_[i]; }

  std::optional<std::size_t> index_of(Cell c) const;
  bool contains(Cell c) const { return index_of(c).has_value(); }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  /// V(P): the union of the corners of all cells, sorted.
  std::vector<Point> vertices() const;

  /// '#' for a cell, '.' for empty; rows top to bottom, '\n'-separated.
  std::string to_ascii() const;

  friend bool operator==(const Polyomino& a, const Polyomino& b) { return a.cells_ == b.cells_; }
  friend auto operator<=>(const Polyomino& a, const Polyomino& b) { return a.cells_ <=> b.cells_; }

 private:
  explicit Polyomino(std::vector<Cell> sorted_cells);

  std::vector<Cell> cells_;
  int width_ = 0;
  int height_ = 0;
};

// --- parsing -----------------------------------------------------------------

/// ASCII grid: '#' = cell, '.' = empty, rows listed top to bottom.
Polyomino parse_ascii(std::string_view text);

/// Coordinate JSON: {"cells": [[x, y], ...]}.
Polyomino parse_json(std::string_view text);

/// Coordinate list: "(x,y) (x,y) ..." (any separators between pairs).
Polyomino parse_coordinates(std::string_view text);

/// Dispatches on the form of the text: JSON object, coordinate list or grid.
Polyomino parse_polyomino(std::string_view text);

// --- intervals ---------------------------------------------------------------

enum class Orientation { horizontal, vertical };

/// A maximal run of cells. `cells` holds indices into Polyomino::cells(),
/// consecutive along the orientation (left to right, or bottom to top).
struct CellInterval {
  Orientation orientation = Orientation::horizontal;
  std::vector<std::size_t> cells;

  std::size_t length() const noexcept { return cells.size(); }
  friend bool operator==(const CellInterval&, const CellInterval&) = default;
};

/// Every maximal run of length >= 2 in either direction; the monomino yields
/// its single length-1 interval. Sorted by lowest cell, horizontal first on
/// ties.
std::vector<CellInterval> maximal_intervals(const Polyomino& p);

/// Length of the maximal horizontal / vertical run through each cell
/// (length-1 runs included).
struct RunLengths {
  std::vector<std::size_t> horizontal;
  std::vector<std::size_t> vertical;
};
RunLengths run_lengths(const Polyomino& p);

bool is_thin(const Polyomino& p);
bool is_simple(const Polyomino& p);

/// Single cells of each maximal interval (aligned with maximal_intervals).
/// A cell is single when it belongs to exactly one maximal interval.
/// Throws NotThin.
std::vector<std::vector<std::size_t>> single_cells(const Polyomino& p);

/// Every maximal interval has exactly one single cell. Throws NotThin.
bool has_s_property(const Polyomino& p);

/// Every maximal interval has at least one single cell. Throws NotThin.
bool every_interval_has_single_cell(const Polyomino& p);

/// Cell ordering C_1..C_l when P is a path polyomino (l >= 2), else nullopt.
/// Of the two orientations, the one starting at the (y, x)-smaller end is
/// returned.
std::optional<std::vector<std::size_t>> as_path(const Polyomino& p);

// --- symmetry ----------------------------------------------------------------

inline constexpr int kSymmetryCount = 8;

/// Image of P under symmetry g in [0, 8) of the square, renormalized.
/// g = 0 is the identity.
Polyomino transformed(const Polyomino& p, int g);

/// Orbit representative: the transform with the lexicographically smallest
/// sorted cell list.
Polyomino canonical_free_form(const Polyomino& p);

}  // namespace polylevel
