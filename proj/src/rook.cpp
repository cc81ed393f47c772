#include "polylevel/rook.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "polylevel/error.hpp"

namespace polylevel {

namespace {

using Mask = std::uint64_t;

struct AttackTable {
  std::vector<Mask> intervals;  // one mask per maximal interval
  std::vector<Mask> attack;     // cells sharing an interval with i, i included
  Mask all = 0;
};

AttackTable attack_table(const Polyomino& p) {
  AttackTable t;
  t.attack.assign(p.rank(), 0);
  for (std::size_t i = 0; i < p.rank(); ++i) {
    t.attack[i] = Mask{1} << i;
    t.all |= Mask{1} << i;
  }
  for (const auto& iv : maximal_intervals(p)) {
    Mask m = 0;
    for (std::size_t c : iv.cells) m |= Mask{1} << c;
    for (std::size_t c : iv.cells) t.attack[c] |= m;
    t.intervals.push_back(m);
  }
  return t;
}

void check_rank(const Polyomino& p, std::size_t max_rank) {
  const std::size_t bound = std::min(max_rank, kRookRankHardLimit);
  if (p.rank() > bound) throw RankTooLarge(p.rank(), bound);
}

RookConfig to_config(Mask m) {
  RookConfig out;
  while (m) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

bool config_less(const RookConfig& a, const RookConfig& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Visits every face exactly once: an interval is either left empty (its cells
// become unavailable) or receives one available cell; intervals already
// holding a rook have no choice left.
template <class Visit>
void for_each_face(const AttackTable& t, Visit&& visit) {
  std::function<void(std::size_t, Mask, Mask, Mask)> rec = [&](std::size_t k, Mask placed, Mask attacked,
                                                               Mask blocked) {
    if (k == t.intervals.size()) {
      visit(placed, attacked);
      return;
    }
    const Mask iv = t.intervals[k];
    if (placed & iv) {
      rec(k + 1, placed, attacked, blocked);
      return;
    }
    rec(k + 1, placed, attacked, blocked | iv);
    Mask free = iv & ~attacked & ~blocked;
    while (free) {
      const auto c = static_cast<std::size_t>(std::countr_zero(free));
      free &= free - 1;
      rec(k + 1, placed | (Mask{1} << c), attacked | t.attack[c], blocked);
    }
  };
  rec(0, 0, 0, 0);
}

}  // namespace

bool attacking(const Polyomino& p, std::size_t i, std::size_t j) {
  if (i == j) return false;
  for (const auto& iv : maximal_intervals(p)) {
    bool has_i = std::find(iv.cells.begin(), iv.cells.end(), i) != iv.cells.end();
    bool has_j = std::find(iv.cells.begin(), iv.cells.end(), j) != iv.cells.end();
    if (has_i && has_j) return true;
  }
  return false;
}

RookComplexSummary rook_complex(const Polyomino& p, std::size_t max_rank) {
  check_rank(p, max_rank);
  const AttackTable t = attack_table(p);
  RookComplexSummary s;
  std::vector<Mask> facet_masks;
  for_each_face(t, [&](Mask placed, Mask attacked) {
    const auto k = static_cast<std::size_t>(std::popcount(placed));
    if (s.rook_poly.size() <= k) s.rook_poly.resize(k + 1, 0);
    ++s.rook_poly[k];
    if (attacked == t.all) facet_masks.push_back(placed);
  });
  s.rook_number = s.rook_poly.size() - 1;
  for (Mask m : facet_masks) s.facets.push_back(to_config(m));
  std::sort(s.facets.begin(), s.facets.end(), config_less);
  s.pure = std::all_of(s.facets.begin(), s.facets.end(),
                       [&](const RookConfig& f) { return f.size() == s.rook_number; });
  if (s.rook_poly.back() == 1) s.unique_max = s.facets.back();
  return s;
}

std::vector<RookConfig> rook_faces(const Polyomino& p, std::size_t max_rank) {
  check_rank(p, max_rank);
  const AttackTable t = attack_table(p);
  std::vector<RookConfig> out;
  for_each_face(t, [&](Mask placed, Mask) { out.push_back(to_config(placed)); });
  std::sort(out.begin(), out.end(), config_less);
  return out;
}

bool facet_gap_check(const RookComplexSummary& s) {
  std::vector<char> present(s.rook_number + 1, 0);
  for (const auto& f : s.facets) present[f.size()] = 1;
  for (const auto& f : s.facets) {
    if (f.size() < s.rook_number && !present[f.size() + 1]) return false;
  }
  return true;
}

bool facet_gap_check(const Polyomino& p, std::size_t max_rank) { return facet_gap_check(rook_complex(p, max_rank)); }

bool is_embedded(const Polyomino& p, const CellInterval& interval) {
  check_rank(p, kRookRankHardLimit);
  const AttackTable t = attack_table(p);
  const auto& cells = interval.cells;
  std::function<bool(std::size_t, Mask)> rec = [&](std::size_t k, Mask attacked) {
    if (k == cells.size()) return true;
    const std::size_t c = cells[k];
    Mask cand = t.attack[c] & ~(Mask{1} << c) & ~attacked;
    while (cand) {
      const auto d = static_cast<std::size_t>(std::countr_zero(cand));
      cand &= cand - 1;
      if (rec(k + 1, attacked | t.attack[d])) return true;
    }
    return false;
  };
  return rec(0, 0);
}

bool has_super_partition(const Polyomino& p) {
  check_rank(p, kRookRankHardLimit);
  const auto intervals = maximal_intervals(p);
  std::vector<Mask> usable;
  for (const auto& iv : intervals) {
    if (is_embedded(p, iv)) continue;
    Mask m = 0;
    for (std::size_t c : iv.cells) m |= Mask{1} << c;
    usable.push_back(m);
  }
  const Mask all = p.rank() == 64 ? ~Mask{0} : (Mask{1} << p.rank()) - 1;
  // Exact cover, always branching on the lowest uncovered cell.
  std::function<bool(Mask)> rec = [&](Mask covered) {
    if (covered == all) return true;
    const Mask low = ~covered & (covered + 1);
    for (Mask m : usable) {
      if ((m & low) && !(m & covered) && rec(covered | m)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace polylevel
