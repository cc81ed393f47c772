#include "polylevel/grid.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <queue>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "polylevel/error.hpp"

namespace polylevel {

namespace {

// Dense lookup table over a grid with a one-cell empty border.
class Occupancy {
 public:
  explicit Occupancy(const Polyomino& p)
      : w_(p.width() + 2), h_(p.height() + 2), idx_(static_cast<std::size_t>(w_ * h_), -1) {
    for (std::size_t i = 0; i < p.rank(); ++i) {
      idx_[slot(p[i].x, p[i].y)] = static_cast<int>(i);
    }
  }

  // -1 when (x, y) is empty or outside the bordered box.
  int at(int x, int y) const {
    if (x < -1 || y < -1 || x >= w_ - 1 || y >= h_ - 1) return -1;
    return idx_[slot(x, y)];
  }
  bool filled(int x, int y) const { return at(x, y) >= 0; }

  int width() const { return w_; }
  int height() const { return h_; }

 private:
  std::size_t slot(int x, int y) const { return static_cast<std::size_t>((y + 1) * w_ + (x + 1)); }

  int w_;
  int h_;
  std::vector<int> idx_;
};

constexpr std::array<std::array<int, 2>, 4> kSteps{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};

bool is_connected(const std::vector<Cell>& sorted) {
  std::vector<char> seen(sorted.size(), 0);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!todo.empty()) {
    Cell c = sorted[todo.front()];
    todo.pop();
    for (auto [dx, dy] : kSteps) {
      Cell n{c.x + dx, c.y + dy};
      auto it = std::lower_bound(sorted.begin(), sorted.end(), n);
      if (it == sorted.end() || *it != n) continue;
      auto k = static_cast<std::size_t>(it - sorted.begin());
      if (!seen[k]) {
        seen[k] = 1;
        ++reached;
        todo.push(k);
      }
    }
  }
  return reached == sorted.size();
}

std::vector<std::array<Point, 4>> corners_of(const Polyomino& p) {
  std::vector<std::array<Point, 4>> out;
  out.reserve(p.rank());
  for (const Cell& c : p.cells()) {
    out.push_back({Point{c.x, c.y}, Point{c.x + 1, c.y}, Point{c.x, c.y + 1}, Point{c.x + 1, c.y + 1}});
  }
  return out;
}

bool share_vertex(Cell a, Cell b) { return std::abs(a.x - b.x) <= 1 && std::abs(a.y - b.y) <= 1; }

}  // namespace

std::string to_string(Cell c) { return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")"; }
std::string to_string(Point p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

// --- Polyomino ------------------------------------------------------------------

Polyomino::Polyomino(std::vector<Cell> sorted_cells) : cells_(std::move(sorted_cells)) {
  for (const Cell& c : cells_) {
    width_ = std::max(width_, c.x + 1);
    height_ = std::max(height_, c.y + 1);
  }
}

Polyomino Polyomino::from_cells(std::vector<Cell> cells) {
  if (cells.empty()) throw ParseError(ParseError::Kind::EmptyInput, "EmptyInput: no cells");
  int min_x = cells.front().x;
  int min_y = cells.front().y;
  for (const Cell& c : cells) {
    min_x = std::min(min_x, c.x);
    min_y = std::min(min_y, c.y);
  }
  for (Cell& c : cells) {
    c.x -= min_x;
    c.y -= min_y;
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  if (!is_connected(cells)) {
    throw ParseError(ParseError::Kind::NotConnected, "NotConnected: cells are not edge-connected");
  }
  return Polyomino(std::move(cells));
}

std::optional<std::size_t> Polyomino::index_of(Cell c) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
  if (it == cells_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - cells_.begin());
}

std::vector<Point> Polyomino::vertices() const {
  std::vector<Point> out;
  out.reserve(4 * cells_.size());
  for (const auto& corners : corners_of(*this)) out.insert(out.end(), corners.begin(), corners.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string Polyomino::to_ascii() const {
  std::string out;
  for (int y = height_ - 1; y >= 0; --y) {
    for (int x = 0; x < width_; ++x) out += contains(Cell{x, y}) ? '#' : '.';
    if (y > 0) out += '\n';
  }
  return out;
}

// --- parsing -----------------------------------------------------------------------

Polyomino parse_ascii(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(current);
      current.clear();
    } else if (ch != '\r') {
      current += ch;
    }
  }
  lines.push_back(current);
  auto blank = [](const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
  };
  while (!lines.empty() && blank(lines.back())) lines.pop_back();
  while (!lines.empty() && blank(lines.front())) lines.erase(lines.begin());
  if (lines.empty()) throw ParseError(ParseError::Kind::EmptyInput, "EmptyInput: empty grid");

  const std::size_t width = lines.front().size();
  std::vector<Cell> cells;
  const int h = static_cast<int>(lines.size());
  for (int r = 0; r < h; ++r) {
    const std::string& line = lines[static_cast<std::size_t>(r)];
    if (line.size() != width) {
      throw ParseError(ParseError::Kind::MalformedGrid,
                       "MalformedGrid: ragged line " + std::to_string(r + 1));
    }
    for (std::size_t col = 0; col < line.size(); ++col) {
      if (line[col] == '#') {
        cells.push_back(Cell{static_cast<int>(col), h - 1 - r});
      } else if (line[col] != '.') {
        throw ParseError(ParseError::Kind::MalformedGrid,
                         std::string("MalformedGrid: unexpected character '") + line[col] + "' on line " +
                             std::to_string(r + 1));
      }
    }
  }
  if (cells.empty()) throw ParseError(ParseError::Kind::EmptyInput, "EmptyInput: grid has no '#' cells");
  return Polyomino::from_cells(std::move(cells));
}

Polyomino parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(ParseError::Kind::MalformedGrid, std::string("MalformedGrid: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_array()) {
    throw ParseError(ParseError::Kind::MalformedGrid, "MalformedGrid: expected {\"cells\": [[x,y], ...]}");
  }
  std::vector<Cell> cells;
  for (const auto& entry : doc["cells"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer()) {
      throw ParseError(ParseError::Kind::MalformedGrid, "MalformedGrid: cell entries must be [x, y] integers");
    }
    cells.push_back(Cell{entry[0].get<int>(), entry[1].get<int>()});
  }
  if (cells.empty()) throw ParseError(ParseError::Kind::EmptyInput, "EmptyInput: no cells");
  return Polyomino::from_cells(std::move(cells));
}

Polyomino parse_coordinates(std::string_view text) {
  static const std::regex pair(R"(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
  std::string s(text);
  std::vector<Cell> cells;
  std::string rest;
  auto begin = std::sregex_iterator(s.begin(), s.end(), pair);
  std::size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    rest += s.substr(last, static_cast<std::size_t>(it->position()) - last);
    last = static_cast<std::size_t>(it->position() + it->length());
    cells.push_back(Cell{std::stoi((*it)[1]), std::stoi((*it)[2])});
  }
  rest += s.substr(last);
  for (char ch : rest) {
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != ',' && ch != ';') {
      throw ParseError(ParseError::Kind::MalformedGrid, "MalformedGrid: unexpected text in coordinate list");
    }
  }
  if (cells.empty()) throw ParseError(ParseError::Kind::EmptyInput, "EmptyInput: no coordinates");
  return Polyomino::from_cells(std::move(cells));
}

Polyomino parse_polyomino(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first == text.size()) throw ParseError(ParseError::Kind::EmptyInput, "EmptyInput: empty input");
  if (text[first] == '{') return parse_json(text);
  if (text[first] == '(') return parse_coordinates(text);
  return parse_ascii(text);
}

// --- intervals -----------------------------------------------------------------------

RunLengths run_lengths(const Polyomino& p) {
  const Occupancy occ(p);
  RunLengths out{std::vector<std::size_t>(p.rank()), std::vector<std::size_t>(p.rank())};
  for (std::size_t i = 0; i < p.rank(); ++i) {
    const Cell c = p[i];
    if (!occ.filled(c.x - 1, c.y)) {
      int len = 1;
      while (occ.filled(c.x + len, c.y)) ++len;
      for (int k = 0; k < len; ++k) out.horizontal[static_cast<std::size_t>(occ.at(c.x + k, c.y))] = len;
    }
    if (!occ.filled(c.x, c.y - 1)) {
      int len = 1;
      while (occ.filled(c.x, c.y + len)) ++len;
      for (int k = 0; k < len; ++k) out.vertical[static_cast<std::size_t>(occ.at(c.x, c.y + k))] = len;
    }
  }
  return out;
}

std::vector<CellInterval> maximal_intervals(const Polyomino& p) {
  if (p.rank() == 1) return {CellInterval{Orientation::horizontal, {0}}};
  const Occupancy occ(p);
  std::vector<CellInterval> out;
  for (std::size_t i = 0; i < p.rank(); ++i) {
    const Cell c = p[i];
    if (!occ.filled(c.x - 1, c.y) && occ.filled(c.x + 1, c.y)) {
      CellInterval run{Orientation::horizontal, {}};
      for (int k = 0; occ.filled(c.x + k, c.y); ++k) {
        run.cells.push_back(static_cast<std::size_t>(occ.at(c.x + k, c.y)));
      }
      out.push_back(std::move(run));
    }
    if (!occ.filled(c.x, c.y - 1) && occ.filled(c.x, c.y + 1)) {
      CellInterval run{Orientation::vertical, {}};
      for (int k = 0; occ.filled(c.x, c.y + k); ++k) {
        run.cells.push_back(static_cast<std::size_t>(occ.at(c.x, c.y + k)));
      }
      out.push_back(std::move(run));
    }
  }
  // Cells are visited in (y, x) order, so runs are already sorted by their
  // lowest cell with horizontal first.
  return out;
}

bool is_thin(const Polyomino& p) {
  const Occupancy occ(p);
  for (const Cell& c : p.cells()) {
    if (occ.filled(c.x + 1, c.y) && occ.filled(c.x, c.y + 1) && occ.filled(c.x + 1, c.y + 1)) return false;
  }
  return true;
}

bool is_simple(const Polyomino& p) {
  const Occupancy occ(p);
  const int w = occ.width();
  const int h = occ.height();
  std::vector<char> seen(static_cast<std::size_t>(w * h), 0);
  auto slot = [w](int x, int y) { return static_cast<std::size_t>((y + 1) * w + (x + 1)); };
  std::queue<Cell> todo;
  todo.push(Cell{-1, -1});
  seen[slot(-1, -1)] = 1;
  std::size_t outside = 1;
  while (!todo.empty()) {
    Cell c = todo.front();
    todo.pop();
    for (auto [dx, dy] : kSteps) {
      int nx = c.x + dx;
      int ny = c.y + dy;
      if (nx < -1 || ny < -1 || nx >= w - 1 || ny >= h - 1) continue;
      if (seen[slot(nx, ny)] || occ.filled(nx, ny)) continue;
      seen[slot(nx, ny)] = 1;
      ++outside;
      todo.push(Cell{nx, ny});
    }
  }
  return outside + p.rank() == static_cast<std::size_t>(w * h);
}

std::vector<std::vector<std::size_t>> single_cells(const Polyomino& p) {
  if (!is_thin(p)) throw NotThin();
  const auto intervals = maximal_intervals(p);
  std::vector<int> membership(p.rank(), 0);
  for (const auto& iv : intervals) {
    for (std::size_t c : iv.cells) ++membership[c];
  }
  std::vector<std::vector<std::size_t>> out;
  out.reserve(intervals.size());
  for (const auto& iv : intervals) {
    std::vector<std::size_t> singles;
    for (std::size_t c : iv.cells) {
      if (membership[c] == 1) singles.push_back(c);
    }
    out.push_back(std::move(singles));
  }
  return out;
}

bool has_s_property(const Polyomino& p) {
  const auto singles = single_cells(p);
  return std::all_of(singles.begin(), singles.end(), [](const auto& s) { return s.size() == 1; });
}

bool every_interval_has_single_cell(const Polyomino& p) {
  const auto singles = single_cells(p);
  return std::all_of(singles.begin(), singles.end(), [](const auto& s) { return !s.empty(); });
}

std::optional<std::vector<std::size_t>> as_path(const Polyomino& p) {
  const std::size_t n = p.rank();
  if (n < 2) return std::nullopt;
  const Occupancy occ(p);
  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (auto [dx, dy] : kSteps) {
      int j = occ.at(p[i].x + dx, p[i].y + dy);
      if (j >= 0) adj[i].push_back(static_cast<std::size_t>(j));
    }
    if (adj[i].size() > 2) return std::nullopt;
    edges += adj[i].size();
  }
  // A connected graph with n - 1 edges and maximum degree 2 is a simple path.
  if (edges / 2 != n - 1) return std::nullopt;

  std::vector<std::size_t> ends;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() == 1) ends.push_back(i);
  }
  if (ends.size() != 2) return std::nullopt;

  std::vector<std::size_t> order{std::min(ends[0], ends[1])};
  std::size_t prev = order.front();
  std::size_t cur = adj[prev].front();
  order.push_back(cur);
  while (order.size() < n) {
    std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
    order.push_back(cur);
  }

  // Condition (3) taken literally (1-based i in [3, l-2], j outside i-2..i+2).
  const auto l = static_cast<long>(n);
  for (long i = 3; i <= l - 2; ++i) {
    for (long j = 1; j <= l; ++j) {
      if (j >= i - 2 && j <= i + 2) continue;
      if (share_vertex(p[order[static_cast<std::size_t>(i - 1)]], p[order[static_cast<std::size_t>(j - 1)]])) {
        return std::nullopt;
      }
    }
  }
  if (!is_simple(p)) return std::nullopt;
  return order;
}

// --- symmetry ----------------------------------------------------------------------

Polyomino transformed(const Polyomino& p, int g) {
  std::vector<Cell> cells;
  cells.reserve(p.rank());
  for (Cell c : p.cells()) {
    int x = c.x;
    int y = c.y;
    if (g & 4) std::swap(x, y);
    if (g & 1) x = -x;
    if (g & 2) y = -y;
    cells.push_back(Cell{x, y});
  }
  return Polyomino::from_cells(std::move(cells));
}

Polyomino canonical_free_form(const Polyomino& p) {
  Polyomino best = p;
  for (int g = 1; g < kSymmetryCount; ++g) {
    Polyomino t = transformed(p, g);
    if (t.cells() < best.cells()) best = std::move(t);
  }
  return best;
}

}  // namespace polylevel
