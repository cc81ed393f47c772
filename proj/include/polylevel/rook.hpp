#pragma once

// Rook complex: non-attacking rook configurations, facets, rook number and
// polynomial, purity, embedded intervals and super partitions.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "polylevel/grid.hpp"

namespace polylevel {

/// Sorted cell indices of pairwise non-attacking cells.
using RookConfig = std::vector<std::size_t>;

inline constexpr std::size_t kDefaultRookRankCap = 24;

/// Bitmask enumeration limits ranks to 64 regardless of the configured cap.
inline constexpr std::size_t kRookRankHardLimit = 64;

struct RookComplexSummary {
  std::vector<RookConfig> facets;  // sorted by size, then lexicographically
  std::size_t rook_number = 0;
  std::vector<std::uint64_t> rook_poly;  // r_0 .. r_{rook_number}
  bool pure = false;
  std::optional<RookConfig> unique_max;
};

/// Cells i != j lie in a common maximal cell interval.
bool attacking(const Polyomino& p, std::size_t i, std::size_t j);

/// Faces and facets by depth-first search over maximal intervals. Runs are
/// taken as maximal intervals, so any polyomino is accepted.
/// Throws RankTooLarge above max_rank (or above the hard limit).
RookComplexSummary rook_complex(const Polyomino& p, std::size_t max_rank = kDefaultRookRankCap);

/// Every face of the rook complex, including the empty one, sorted by size
/// then lexicographically.
std::vector<RookConfig> rook_faces(const Polyomino& p, std::size_t max_rank = kDefaultRookRankCap);

/// Facet sizes are contiguous up to the rook number.
bool facet_gap_check(const Polyomino& p, std::size_t max_rank = kDefaultRookRankCap);
bool facet_gap_check(const RookComplexSummary& summary);

/// Some face {D_1..D_m} has D_k != C_k and {C_k, D_k} attacking for every
/// cell C_k of the interval.
bool is_embedded(const Polyomino& p, const CellInterval& interval);

/// Some partition of the cells into maximal intervals uses no embedded
/// interval.
bool has_super_partition(const Polyomino& p);

}  // namespace polylevel
