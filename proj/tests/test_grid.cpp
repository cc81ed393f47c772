#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "polylevel/error.hpp"
#include "polylevel/grid.hpp"

using namespace polylevel;

namespace {

const char* kS4 = "..#\n.##\n##.";

std::vector<Cell> cells_of(std::initializer_list<Cell> c) { return c; }

}  // namespace

TEST(Parse, AsciiDomino) {
  const auto p = parse_ascii("##");
  EXPECT_EQ(p.cells(), cells_of({{0, 0}, {1, 0}}));
  EXPECT_EQ(p.width(), 2);
  EXPECT_EQ(p.height(), 1);
}

TEST(Parse, AsciiStaircaseRowsTopToBottom) {
  const auto p = parse_ascii(kS4);
  EXPECT_EQ(p.rank(), 5u);
  EXPECT_EQ(p.cells(), cells_of({{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}}));
  EXPECT_EQ(p.to_ascii(), kS4);
}

TEST(Parse, Errors) {
  try {
    parse_ascii("#.#");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::NotConnected);
  }
  try {
    parse_ascii("...\n...");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::EmptyInput);
  }
  EXPECT_THROW(parse_ascii("#x"), ParseError);
  EXPECT_THROW(parse_ascii("##\n#"), ParseError);
  EXPECT_THROW(parse_json("{\"cells\": 3}"), ParseError);
  EXPECT_THROW(parse_json("not json"), ParseError);
}

TEST(Parse, FormatsAgree) {
  const auto a = parse_polyomino(kS4);
  const auto b = parse_polyomino("{\"cells\": [[0,0],[1,0],[1,1],[2,1],[2,2]]}");
  const auto c = parse_polyomino("(5,5) (6,5) (6,6) (7,6) (7,7)");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_EQ(parse_polyomino("\n\n##\n\n"), parse_ascii("##"));
}

TEST(Parse, DuplicatesAndTranslationNormalized) {
  const auto p = Polyomino::from_cells({{3, -2}, {4, -2}, {3, -2}});
  EXPECT_EQ(p.cells(), cells_of({{0, 0}, {1, 0}}));
}

TEST(Intervals, Examples) {
  const auto domino = maximal_intervals(parse_ascii("##"));
  ASSERT_EQ(domino.size(), 1u);
  EXPECT_EQ(domino[0].orientation, Orientation::horizontal);
  EXPECT_EQ(domino[0].length(), 2u);

  const auto s4 = maximal_intervals(parse_ascii(kS4));
  ASSERT_EQ(s4.size(), 4u);
  for (const auto& iv : s4) EXPECT_EQ(iv.length(), 2u);

  const auto tromino = maximal_intervals(parse_ascii("###"));
  ASSERT_EQ(tromino.size(), 1u);
  EXPECT_EQ(tromino[0].length(), 3u);

  const auto mono = maximal_intervals(parse_ascii("#"));
  ASSERT_EQ(mono.size(), 1u);
  EXPECT_EQ(mono[0].length(), 1u);
}

TEST(Intervals, CellsAreConsecutive) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& s : oracle::free_polyominoes(n)) {
      const auto p = oracle::to_polyomino(s);
      for (const auto& iv : maximal_intervals(p)) {
        for (std::size_t k = 1; k < iv.cells.size(); ++k) {
          const Cell a = p[iv.cells[k - 1]];
          const Cell b = p[iv.cells[k]];
          if (iv.orientation == Orientation::horizontal) {
            EXPECT_EQ(b, (Cell{a.x + 1, a.y}));
          } else {
            EXPECT_EQ(b, (Cell{a.x, a.y + 1}));
          }
        }
      }
    }
  }
}

TEST(Thin, Examples) {
  EXPECT_FALSE(is_thin(Polyomino::from_cells({{0, 0}, {1, 0}, {0, 1}, {1, 1}})));
  EXPECT_TRUE(is_thin(parse_ascii(kS4)));
  EXPECT_FALSE(is_thin(Polyomino::from_cells({{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 2}})));
}

TEST(Simple, Examples) {
  EXPECT_FALSE(is_simple(parse_ascii("###\n#.#\n###")));
  EXPECT_TRUE(is_simple(parse_ascii("##")));
  EXPECT_TRUE(is_simple(parse_ascii(kS4)));
}

TEST(ThinSimple, AgreeWithOracleThroughRank9) {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& s : oracle::free_polyominoes(n)) {
      const auto p = oracle::to_polyomino(s);
      EXPECT_EQ(is_thin(p), oracle::thin(s)) << p.to_ascii();
      EXPECT_EQ(is_simple(p), oracle::simple(s)) << p.to_ascii();
    }
  }
}

TEST(SingleCells, Examples) {
  const auto l = Polyomino::from_cells({{0, 0}, {1, 0}, {1, 1}});
  const auto singles = single_cells(l);
  ASSERT_EQ(singles.size(), 2u);
  EXPECT_EQ(singles[0], std::vector<std::size_t>{*l.index_of({0, 0})});
  EXPECT_EQ(singles[1], std::vector<std::size_t>{*l.index_of({1, 1})});
  EXPECT_TRUE(has_s_property(l));
  EXPECT_TRUE(every_interval_has_single_cell(l));

  const auto s4 = parse_ascii(kS4);
  EXPECT_FALSE(has_s_property(s4));
  EXPECT_FALSE(every_interval_has_single_cell(s4));

  const auto tromino = parse_ascii("###");
  EXPECT_EQ(single_cells(tromino)[0].size(), 3u);
  EXPECT_FALSE(has_s_property(tromino));
  EXPECT_TRUE(every_interval_has_single_cell(tromino));

  EXPECT_THROW(has_s_property(parse_ascii("##\n##")), NotThin);
}

TEST(Path, Examples) {
  const auto s4 = parse_ascii(kS4);
  const auto order = as_path(s4);
  ASSERT_TRUE(order);
  EXPECT_EQ(order->size(), 5u);
  EXPECT_EQ(s4[order->front()], (Cell{0, 0}));

  EXPECT_FALSE(as_path(Polyomino::from_cells({{0, 0}, {1, 0}, {2, 0}, {1, 1}})));
  EXPECT_FALSE(as_path(parse_ascii("#")));
  // Adjacency graph is a path, but the ends touch at a corner around a hole.
  EXPECT_FALSE(as_path(Polyomino::from_cells({{2, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}, {0, 0}, {1, 0}})));
}

TEST(Path, AgreesWithOracleThroughRank9) {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& s : oracle::free_polyominoes(n)) {
      if (!oracle::thin(s)) continue;
      const auto p = oracle::to_polyomino(s);
      EXPECT_EQ(as_path(p).has_value(), oracle::is_path(s)) << p.to_ascii();
    }
  }
}

TEST(Path, OrderWalksAdjacentCells) {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& s : oracle::free_polyominoes(n)) {
      const auto p = oracle::to_polyomino(s);
      const auto order = as_path(p);
      if (!order) continue;
      std::set<std::size_t> seen(order->begin(), order->end());
      EXPECT_EQ(seen.size(), p.rank());
      for (std::size_t k = 1; k < order->size(); ++k) {
        const Cell a = p[(*order)[k - 1]];
        const Cell b = p[(*order)[k]];
        EXPECT_EQ(std::abs(a.x - b.x) + std::abs(a.y - b.y), 1);
      }
      EXPECT_LT(p[order->front()], p[order->back()]);
    }
  }
}

TEST(Vertices, Counts) {
  EXPECT_EQ(parse_ascii("##").vertices().size(), 6u);
  EXPECT_EQ(parse_ascii("#").vertices().size(), 4u);
  EXPECT_EQ(Polyomino::from_cells({{0, 0}, {1, 0}, {1, 1}}).vertices().size(), 8u);
  // Paths of l cells have 2l + 2 vertices.
  for (int n = 2; n <= 8; ++n) {
    for (const auto& s : oracle::free_polyominoes(n)) {
      if (!oracle::is_path(s)) continue;
      EXPECT_EQ(oracle::to_polyomino(s).vertices().size(), static_cast<std::size_t>(2 * n + 2));
    }
  }
}

TEST(Symmetry, Examples) {
  const auto vertical = Polyomino::from_cells({{0, 0}, {0, 1}});
  EXPECT_EQ(canonical_free_form(vertical), parse_ascii("##"));
  const auto s4 = parse_ascii(kS4);
  EXPECT_EQ(canonical_free_form(s4), canonical_free_form(transformed(s4, 1)));
  EXPECT_EQ(transformed(s4, 0), s4);

  std::set<std::vector<Cell>> tetrominoes;
  for (const auto& s : oracle::free_polyominoes(4)) {
    const auto p = oracle::to_polyomino(s);
    if (is_thin(p)) tetrominoes.insert(canonical_free_form(p).cells());
  }
  EXPECT_EQ(tetrominoes.size(), 4u);
}

TEST(Symmetry, GroupActionOnRandomShapes) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 500; ++trial) {
    std::set<std::pair<int, int>> cells{{0, 0}};
    const int n = 1 + static_cast<int>(rng() % 12);
    while (static_cast<int>(cells.size()) < n) {
      auto it = cells.begin();
      std::advance(it, static_cast<long>(rng() % cells.size()));
      const int d = static_cast<int>(rng() % 4);
      cells.insert({it->first + (d == 0) - (d == 1), it->second + (d == 2) - (d == 3)});
    }
    std::vector<Cell> v;
    for (auto [x, y] : cells) v.push_back({x, y});
    const auto p = Polyomino::from_cells(v);
    const auto canon = canonical_free_form(p);
    // Representative: least row-major cell list over the orbit.
    std::vector<Cell> expected;
    for (int g = 0; g < 8; ++g) {
      std::vector<oracle::XY> t;
      for (auto c : oracle::from_polyomino(p)) t.push_back(oracle::apply(g, c));
      std::vector<Cell> img;
      for (auto [x, y] : oracle::normalize(t)) img.push_back({x, y});
      std::sort(img.begin(), img.end());
      if (expected.empty() || img < expected) expected = img;
    }
    EXPECT_EQ(canon.cells(), expected);
    std::set<std::vector<Cell>> orbit;
    for (int g = 0; g < kSymmetryCount; ++g) {
      const auto t = transformed(p, g);
      EXPECT_EQ(t.rank(), p.rank());
      EXPECT_EQ(canonical_free_form(t), canon);
      orbit.insert(t.cells());
    }
    EXPECT_EQ(8 % orbit.size(), 0u);
  }
}
