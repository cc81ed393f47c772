#pragma once

// Algebraic oracle: inner 2-minor ideals, the path labelling, Artinian
// reductions, socles and the resulting Gorenstein / level /
// pseudo-Gorenstein classification.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polylevel/grid.hpp"
#include "polylevel/groebner.hpp"
#include "polylevel/path.hpp"
#include "polylevel/rook.hpp"

namespace polylevel {

struct AlgebraOptions {
  std::uint32_t characteristic = kDefaultPrime;
  std::uint64_t seed = 1;
  unsigned retries = 8;
  std::size_t max_rank = kDefaultRookRankCap;
  bool force_random = false;  // use a random lsop on paths as well
};

// --- labelling -----------------------------------------------------------------

/// Labels of V(P) for a path C_1..C_l; index i - 1 holds a_i and b_i.
struct VertexLabelling {
  Point a;
  Point b;
  std::vector<Point> a_labels;
  std::vector<Point> b_labels;

  std::size_t length() const noexcept { return a_labels.size(); }
  /// b_1, a_1, b_2, a_2, ..., b_l, a_l, b, a: variable 0 is the largest.
  std::vector<Point> variable_order() const;
  std::vector<std::string> variable_names() const;
};

/// Throws NotAPath when a labelling step is ambiguous or impossible.
VertexLabelling label_path(const PathStructure& ps);

// --- ideals ----------------------------------------------------------------------

/// All-cells-inside rectangle with lower-left corner `lower` and upper-right
/// corner `upper`.
struct InnerInterval {
  Point lower;
  Point upper;
};

std::vector<InnerInterval> inner_intervals(const Polyomino& p);

/// Generators x_lower * x_upper - x_upperleft * x_lowerright, in the ring
/// whose variable i is vars[i]. Throws Error beyond kMaxVars variables.
std::vector<Polynomial> inner_two_minors(const Polyomino& p, const std::vector<Point>& vars, const PrimeField& field);

/// Images of the inner 2-minors in K[y_1..y_l] under x_{a_i}, x_{b_i} -> y_i
/// and x_a, x_b -> 0, zero images dropped. y_i is variable i - 1.
std::vector<Polynomial> build_JP(const PathStructure& ps, const VertexLabelling& lab, const PrimeField& field);

/// The monomial ideal (y_i y_j : C_i and C_j share a maximal interval,
/// i = j included), minimally generated, sorted increasing.
std::vector<Monomial> same_interval_monomials(const PathStructure& ps);

// --- path Groebner checks -----------------------------------------------------------

struct PathGbReport {
  std::size_t generators = 0;
  std::size_t s_pairs = 0;
  bool reduced = false;    // inner 2-minors are already a reduced basis
  bool quadratic = false;  // every basis element has degree 2
};

/// Checks that the inner 2-minors form a reduced quadratic Groebner basis in
/// the labelling order, and the structural claims on their initial monomials.
/// `tamper` may alter the generators first (negative controls).
/// Throws ClaimViolated.
PathGbReport verify_path_gb(const PathStructure& ps, const PrimeField& field,
                            const std::function<void(std::vector<Polynomial>&)>& tamper = {});

struct PathAlgebraReport {
  PathGbReport gb;
  std::size_t jp_generators = 0;
  std::size_t standard_monomials = 0;
  std::size_t power_monomials = 0;  // degree r + 1 monomials checked
};

/// verify_path_gb plus: the images of the minors form a Groebner basis of
/// J_P, in(J_P) is the same-interval ideal, standard monomials are the rook
/// configurations degree by degree, and m^{r+1} lies in J_P.
/// Throws ClaimViolated.
PathAlgebraReport check_path_algebra(const PathStructure& ps, const PrimeField& field,
                                     const std::function<void(std::vector<Polynomial>&)>& tamper = {});

// --- Artinian reduction ---------------------------------------------------------

struct ArtinianAlgebra {
  std::size_t num_vars = 0;
  std::uint32_t characteristic = kDefaultPrime;
  std::vector<Polynomial> basis;                   // reduced Groebner basis
  std::vector<std::vector<Monomial>> standard;     // by degree, decreasing
  std::string lsop;                                // "path" or "random"
  std::optional<std::uint64_t> seed;               // seed of the accepted attempt
  unsigned attempts = 1;

  std::vector<std::uint64_t> hilbert_function() const;
  std::uint64_t dimension() const;
  unsigned top_degree() const { return static_cast<unsigned>(standard.size()) - 1; }
};

/// R / J_P with the explicit linear system of parameters of a path.
ArtinianAlgebra path_artinian(const PathStructure& ps, const PrimeField& field);

/// Explicit lsop for paths (unless force_random), otherwise seeded random
/// elimination of |V(P)| - rank variables; guarded by zero-dimensionality and
/// total dimension rook_poly(1). Throws LsopFailure, NotThin, RankTooLarge.
ArtinianAlgebra artinian_reduction(const Polyomino& p, const AlgebraOptions& options);

// --- socle ------------------------------------------------------------------------

struct SocleReport {
  std::vector<std::size_t> dims;             // socle dimension per degree
  std::vector<std::vector<Monomial>> initial;  // in(soc) per degree, when requested
  bool gorenstein = false;
  bool level = false;
  bool pseudo_gorenstein = false;
  unsigned max_degree = 0;
  std::size_t total() const;
};

SocleReport socle(const ArtinianAlgebra& a, bool with_initial = false);

/// Socle of R / in(J_P), checked against the facet monomials y_F.
/// Throws ClaimViolated.
SocleReport socle_of_initial(const PathStructure& ps, const PrimeField& field);

/// Every monomial of degree r(P) + 1 lies in J_P.
bool check_power_containment(const PathStructure& ps, const PrimeField& field);

// --- classification ----------------------------------------------------------------

struct ClassificationRecord {
  bool gorenstein = false;
  bool level = false;
  bool pseudo_gorenstein = false;
  std::size_t rook_number = 0;
  std::size_t regularity = 0;
  std::string method;
  std::optional<std::uint64_t> seed;
  std::vector<std::uint64_t> hilbert;
  std::vector<std::size_t> socle;
};

/// Artinian reduction plus socle. Throws ClaimViolated if the top socle
/// degree differs from the rook number.
ClassificationRecord classify_algebraic(const Polyomino& p, const AlgebraOptions& options);

/// splitmix64 finalizer, used to derive independent seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace polylevel
