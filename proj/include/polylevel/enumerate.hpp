#pragma once

// Generation of free polyominoes by rank, census classification and the
// experimental scans over the census.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polylevel/algebra.hpp"
#include "polylevel/grid.hpp"
#include "polylevel/path.hpp"

namespace polylevel {

inline constexpr std::size_t kDefaultGenerationCap = 14;

struct GenerateOptions {
  bool thin_only = true;
  bool simple_only = true;
  std::size_t max_rank = kDefaultGenerationCap;
};

/// One canonical representative per congruence class, sorted by canonical
/// cell list. Throws RankTooLarge above max_rank.
std::vector<Polyomino> generate_free(std::size_t n, const GenerateOptions& options = {});

inline std::vector<Polyomino> generate_free_simple_thin(std::size_t n, std::size_t max_rank = kDefaultGenerationCap) {
  return generate_free(n, GenerateOptions{true, true, max_rank});
}

enum class Mode { combinatorial, algebraic, both };
std::string to_string(Mode m);
std::optional<Mode> parse_mode(const std::string& s);

enum class Category { gorenstein, level, pseudo_gorenstein, none };
std::string to_string(Category c);

struct CensusOptions {
  Mode mode = Mode::both;
  AlgebraOptions algebra;
  unsigned jobs = 1;
};

struct ShapeRecord {
  Polyomino shape = Polyomino::from_cells({Cell{0, 0}});
  bool path = false;
  bool gorenstein = false;
  bool level = false;
  bool pseudo_gorenstein = false;
  std::optional<bool> initial_level;  // paths only
  std::size_t rook_number = 0;
  std::vector<std::uint64_t> rook_poly;
  std::vector<Stair> stairs;  // paths only
  bool s_property = false;
  bool single_cell_in_every_interval = false;
  std::string level_source;  // "combinatorial" or "algebraic"
  std::optional<ClassificationRecord> algebraic;
  std::uint64_t seed = 0;
  Category category = Category::none;
};

struct CensusRow {
  std::size_t rank = 0;
  std::size_t gorenstein = 0;
  std::size_t level_not_g = 0;
  std::size_t pg_not_g = 0;
  std::size_t none = 0;
  std::size_t total = 0;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct Census {
  CensusRow row;
  std::vector<ShapeRecord> shapes;
};

/// Per-shape seed derived from the global seed and the free shape, so
/// congruent inputs share a seed.
std::uint64_t shape_seed(std::uint64_t global_seed, const Polyomino& p);

/// Throws ModeInsufficient for non-paths in combinatorial mode and
/// InconsistentClassification when two oracles disagree.
ShapeRecord classify_shape(const Polyomino& p, const CensusOptions& options);

/// Classifies every free simple thin polyomino of rank n, fanning out over
/// options.jobs threads. The result does not depend on the thread count.
Census classify_census(std::size_t n, const CensusOptions& options);

/// Published counts for ranks 4..10.
inline constexpr std::size_t kTableFirstRank = 4;
inline constexpr std::size_t kTableLastRank = 10;
extern const std::array<CensusRow, 7> kPublishedCounts;
std::optional<CensusRow> published_row(std::size_t rank);

struct Violation {
  Polyomino shape = Polyomino::from_cells({Cell{0, 0}});
  std::string claim;
  std::string detail;
};

struct ScanReport {
  std::size_t min_rank = 1;
  std::size_t max_rank = 0;
  std::size_t examined = 0;
  std::size_t matched = 0;  // shapes the claim applies to
  std::vector<Violation> violations;
  double elapsed_seconds = 0;
};

/// Every pseudo-Gorenstein shape has odd rank 2r - 1 with rook number r.
ScanReport scan_pg_rank(std::size_t n_max, const CensusOptions& options);

/// Shapes where every maximal interval has a single cell but the algebraic
/// oracle reports non-level.
ScanReport scan_conjecture(std::size_t n_max, const CensusOptions& options);

/// The two scans above, applied to already classified censuses (one per rank,
/// consecutive). The conjecture check needs algebraic records.
ScanReport pg_rank_report(const std::vector<Census>& censuses);
ScanReport conjecture_report(const std::vector<Census>& censuses);

/// Facet-size contiguity over all free polyominoes of each rank up to n_max.
ScanReport scan_facet_gaps(std::size_t n_max, bool thin_simple_only);

/// Purity agrees with the existence of a super partition.
ScanReport scan_super_partition(std::size_t n_max);

}  // namespace polylevel
