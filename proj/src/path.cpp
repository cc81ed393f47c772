#include "polylevel/path.hpp"

#include <algorithm>

#include "polylevel/error.hpp"

namespace polylevel {

namespace {

std::vector<std::uint64_t> poly_add(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

// a * (c0 + c1 t)
std::vector<std::uint64_t> poly_mul_linear(const std::vector<std::uint64_t>& a, std::uint64_t c0, std::uint64_t c1) {
  std::vector<std::uint64_t> out(a.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] += a[i] * c0;
    out[i + 1] += a[i] * c1;
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

PathStructure path_structure(const Polyomino& p) {
  auto order = as_path(p);
  if (!order) throw NotAPath();
  PathStructure ps{p, *order, {}, {}, {}};
  const std::size_t n = ps.cells.size();
  auto step = [&](std::size_t k) {
    const Cell a = p[ps.cells[k]];
    const Cell b = p[ps.cells[k + 1]];
    return a.y == b.y ? Orientation::horizontal : Orientation::vertical;
  };
  std::size_t start = 0;
  for (std::size_t k = 1; k < n; ++k) {
    const bool turn = k + 1 < n && step(k) != step(k - 1);
    if (turn || k + 1 == n) {
      ps.spans.emplace_back(start, k);
      ps.interval_lengths.push_back(k - start + 1);
      start = k;
    }
  }
  ps.cell_to_intervals.assign(n, {});
  for (std::size_t i = 0; i < ps.spans.size(); ++i) {
    for (std::size_t k = ps.spans[i].first; k <= ps.spans[i].second; ++k) ps.cell_to_intervals[k].push_back(i);
  }
  return ps;
}

std::vector<std::uint64_t> path_rook_polynomial(const PathStructure& ps) {
  // g_shared: configurations whose rook sits on the cell shared with the
  // next interval; g_free: all others.
  std::vector<std::uint64_t> g_free{1};
  std::vector<std::uint64_t> g_shared{0};
  const std::size_t s = ps.interval_count();
  for (std::size_t k = 0; k < s; ++k) {
    const bool has_prev = k > 0;
    const bool has_next = k + 1 < s;
    const std::uint64_t own = ps.interval_lengths[k] - (has_prev ? 1 : 0) - (has_next ? 1 : 0);
    auto next_free = poly_add(g_shared, poly_mul_linear(g_free, 1, own));
    auto next_shared = has_next ? poly_mul_linear(g_free, 0, 1) : std::vector<std::uint64_t>{0};
    g_free = std::move(next_free);
    g_shared = std::move(next_shared);
  }
  auto out = poly_add(g_free, g_shared);
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::size_t path_rook_number(const PathStructure& ps) { return path_rook_polynomial(ps).size() - 1; }

std::string to_string(StairKind k) { return k == StairKind::S ? "S" : "S~"; }

std::vector<Stair> stairs(const PathStructure& ps) {
  const auto& l = ps.interval_lengths;
  const std::size_t s = l.size();
  std::vector<Stair> out;
  std::size_t k = 0;
  while (k < s) {
    if (l[k] != 2) {
      ++k;
      continue;
    }
    std::size_t end = k;
    while (end + 1 < s && l[end + 1] == 2) ++end;
    Stair st{k > 0 ? k - 1 : k, end + 1 < s ? end + 1 : end, StairKind::S};
    if (l[st.first] != 2 || l[st.last] != 2) st.kind = StairKind::S_tilde;
    out.push_back(st);
    k = end + 1;
  }
  return out;
}

PseudoGorensteinVerdict is_pseudo_gorenstein_path(const PathStructure& ps) {
  const auto& l = ps.interval_lengths;
  const std::size_t s = l.size();
  PseudoGorensteinVerdict v;
  if (l.front() != 2 || l.back() != 2) return v;
  for (std::size_t k = 1; k + 1 < s; ++k) {
    if (l[k] > 3) return v;
  }
  for (const Stair& st : stairs(ps)) {
    if (st.length() % 2 == 1) return v;
  }
  v.value = true;
  RookConfig facet;
  for (std::size_t k = 0; k < ps.length(); k += 2) facet.push_back(ps.cells[k]);
  std::sort(facet.begin(), facet.end());
  v.facet = std::move(facet);
  return v;
}

LevelVerdict is_level_path(const PathStructure& ps) {
  LevelVerdict v{true, std::nullopt};
  for (const Stair& st : stairs(ps)) {
    if (is_bad_stair_length(st.length())) {
      v.value = false;
      v.bad_stair = st;
      return v;
    }
  }
  return v;
}

bool is_initial_level_path(const PathStructure& ps) {
  const auto& l = ps.interval_lengths;
  const std::size_t s = l.size();
  const std::size_t d = path_rook_number(ps);
  if (s != 2 * d - 1) return false;
  // k is the 1-based interval number.
  for (std::size_t k = 2; k + 1 <= s; ++k) {
    const std::size_t len = l[k - 1];
    if (k % 2 == 1 ? len <= 2 : len != 2) return false;
  }
  return true;
}

PathClassification classify_path(const PathStructure& ps) {
  PathClassification c;
  c.gorenstein = has_s_property(ps.polyomino);
  const auto pg = is_pseudo_gorenstein_path(ps);
  c.pseudo_gorenstein = pg.value;
  c.unique_max_facet = pg.facet;
  const auto lv = is_level_path(ps);
  c.level = lv.value;
  c.bad_stair = lv.bad_stair;
  c.initial_level = is_initial_level_path(ps);
  c.rook_number = path_rook_number(ps);
  c.stairs = stairs(ps);

  if (c.gorenstein && !(c.pseudo_gorenstein && c.level)) {
    throw InconsistentClassification("InconsistentClassification: Gorenstein path not level and pseudo-Gorenstein");
  }
  if (c.level && c.pseudo_gorenstein && !c.gorenstein) {
    throw InconsistentClassification("InconsistentClassification: level pseudo-Gorenstein path without S-property");
  }
  if (c.pseudo_gorenstein && ps.length() != 2 * c.rook_number - 1) {
    throw InconsistentClassification("InconsistentClassification: pseudo-Gorenstein path with rank != 2r-1");
  }
  return c;
}

std::optional<PathClassification> classify_if_path(const Polyomino& p) {
  if (p.rank() == 1) {
    PathClassification c;
    c.gorenstein = c.level = c.pseudo_gorenstein = c.initial_level = true;
    c.rook_number = 1;
    c.unique_max_facet = RookConfig{0};
    return c;
  }
  if (!as_path(p)) return std::nullopt;
  return classify_path(path_structure(p));
}

}  // namespace polylevel
