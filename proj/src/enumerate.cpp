#include "polylevel/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "polylevel/error.hpp"
#include "polylevel/rook.hpp"

namespace polylevel {

namespace {

// Redelmeier's method on the half-plane y > 0 or (y = 0 and x >= 0), which
// yields each fixed polyomino exactly once, up to translation.
class FixedGenerator {
 public:
  FixedGenerator(std::size_t n, bool thin_only) : n_(static_cast<int>(n)), thin_(thin_only) {
    w_ = 2 * n_ + 3;
    h_ = n_ + 2;
    occupied_.assign(static_cast<std::size_t>(w_ * h_), 0);
    reached_.assign(static_cast<std::size_t>(w_ * h_), 0);
  }

  template <class Emit>
  void run(Emit&& emit) {
    const int origin = id(0, 0);
    reached_[static_cast<std::size_t>(origin)] = 1;
    std::vector<int> untried{origin};
    rec(untried, emit);
  }

 private:
  int id(int x, int y) const { return y * w_ + (x + n_ + 1); }
  int x_of(int i) const { return i % w_ - n_ - 1; }
  int y_of(int i) const { return i / w_; }
  bool occ(int x, int y) const {
    if (y < 0 || y >= h_ || x < -n_ - 1 || x > n_ + 1) return false;
    return occupied_[static_cast<std::size_t>(id(x, y))] != 0;
  }

  bool completes_block(int c) const {
    const int x = x_of(c);
    const int y = y_of(c);
    for (int dx = -1; dx <= 0; ++dx) {
      for (int dy = -1; dy <= 0; ++dy) {
        int filled = 0;
        for (int ox = 0; ox <= 1; ++ox) {
          for (int oy = 0; oy <= 1; ++oy) {
            const int cx = x + dx + ox;
            const int cy = y + dy + oy;
            if (cx == x && cy == y) continue;
            filled += occ(cx, cy);
          }
        }
        if (filled == 3) return true;
      }
    }
    return false;
  }

  template <class Emit>
  void rec(std::vector<int> untried, Emit& emit) {
    while (!untried.empty()) {
      const int c = untried.back();
      untried.pop_back();
      if (thin_ && completes_block(c)) continue;
      occupied_[static_cast<std::size_t>(c)] = 1;
      cells_.push_back(Cell{x_of(c), y_of(c)});
      if (static_cast<int>(cells_.size()) == n_) {
        emit(cells_);
      } else {
        std::vector<int> next = untried;
        std::vector<int> added;
        const int x = x_of(c);
        const int y = y_of(c);
        const int nbrs[4][2] = {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
        for (const auto& nb : nbrs) {
          const int nx = nb[0];
          const int ny = nb[1];
          if (!(ny > 0 || (ny == 0 && nx >= 0))) continue;
          const int k = id(nx, ny);
          if (reached_[static_cast<std::size_t>(k)]) continue;
          reached_[static_cast<std::size_t>(k)] = 1;
          next.push_back(k);
          added.push_back(k);
        }
        rec(std::move(next), emit);
        for (int k : added) reached_[static_cast<std::size_t>(k)] = 0;
      }
      occupied_[static_cast<std::size_t>(c)] = 0;
      cells_.pop_back();
    }
  }

  int n_;
  bool thin_;
  int w_ = 0;
  int h_ = 0;
  std::vector<char> occupied_;
  std::vector<char> reached_;
  std::vector<Cell> cells_;
};

std::string ascii_one_line(const Polyomino& p) {
  std::string s = p.to_ascii();
  std::replace(s.begin(), s.end(), '\n', '/');
  return s;
}

[[noreturn]] void disagree(const Polyomino& p, const std::string& what) {
  throw InconsistentClassification("InconsistentClassification: " + what + " for " + ascii_one_line(p));
}

Category category_of(bool g, bool l, bool pg) {
  if (g) return Category::gorenstein;
  if (l) return Category::level;
  if (pg) return Category::pseudo_gorenstein;
  return Category::none;
}

template <class Fn>
std::vector<ShapeRecord> parallel_map(const std::vector<Polyomino>& shapes, unsigned jobs, Fn&& fn) {
  std::vector<std::optional<ShapeRecord>> out(shapes.size());
  std::vector<std::exception_ptr> errors(shapes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < shapes.size(); i = next++) {
      try {
        out[i] = fn(shapes[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(shapes.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  // The first failure in shape order wins, whatever the scheduling.
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<ShapeRecord> records;
  records.reserve(out.size());
  for (auto& r : out) records.push_back(std::move(*r));
  return records;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<Polyomino> generate_free(std::size_t n, const GenerateOptions& options) {
  if (n > options.max_rank) throw RankTooLarge(n, options.max_rank);
  if (n == 0) return {};
  std::vector<Polyomino> out;
  FixedGenerator gen(n, options.thin_only);
  gen.run([&](const std::vector<Cell>& cells) {
    Polyomino p = Polyomino::from_cells(cells);
    if (options.simple_only && !is_simple(p)) return;
    if (canonical_free_form(p) == p) out.push_back(std::move(p));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::combinatorial:
      return "combinatorial";
    case Mode::algebraic:
      return "algebraic";
    case Mode::both:
      return "both";
  }
  return "both";
}

std::optional<Mode> parse_mode(const std::string& s) {
  if (s == "combinatorial") return Mode::combinatorial;
  if (s == "algebraic") return Mode::algebraic;
  if (s == "both") return Mode::both;
  return std::nullopt;
}

std::string to_string(Category c) {
  switch (c) {
    case Category::gorenstein:
      return "G";
    case Category::level:
      return "L";
    case Category::pseudo_gorenstein:
      return "PG";
    case Category::none:
      return "N";
  }
  return "N";
}

std::uint64_t shape_seed(std::uint64_t global_seed, const Polyomino& p) {
  const Polyomino canon = canonical_free_form(p);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const Cell& c : canon.cells()) {
    h = (h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x))) * 0x100000001b3ULL;
    h = (h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.y))) * 0x100000001b3ULL;
  }
  return mix_seed(global_seed, h);
}

ShapeRecord classify_shape(const Polyomino& p, const CensusOptions& options) {
  ShapeRecord r;
  r.shape = p;
  r.seed = shape_seed(options.algebra.seed, p);
  const auto summary = rook_complex(p, options.algebra.max_rank);
  r.rook_number = summary.rook_number;
  r.rook_poly = summary.rook_poly;
  r.s_property = has_s_property(p);
  r.single_cell_in_every_interval = every_interval_has_single_cell(p);
  r.gorenstein = r.s_property;

  const auto path = classify_if_path(p);
  r.path = path.has_value();
  if (path) {
    r.level = path->level;
    r.pseudo_gorenstein = path->pseudo_gorenstein;
    r.initial_level = path->initial_level;
    r.stairs = path->stairs;
    r.level_source = "combinatorial";
    if (path->gorenstein != r.s_property) disagree(p, "path Gorenstein flag");
    if (path->rook_number != summary.rook_number) disagree(p, "path rook number");
    if (path->pseudo_gorenstein != summary.unique_max.has_value()) disagree(p, "pseudo-Gorenstein vs unique maximal facet");
    if (path->initial_level != summary.pure) disagree(p, "initial-level vs purity");
    if (path->unique_max_facet && summary.unique_max && *path->unique_max_facet != *summary.unique_max) {
      disagree(p, "predicted unique maximal facet");
    }
  } else if (options.mode == Mode::combinatorial) {
    throw ModeInsufficient("ModeInsufficient: levelness of a non-path needs the algebraic oracle (" +
                           ascii_one_line(p) + ")");
  }

  if (options.mode != Mode::combinatorial) {
    AlgebraOptions algebra = options.algebra;
    algebra.seed = r.seed;
    ClassificationRecord a = classify_algebraic(p, algebra);
    if (a.gorenstein != r.s_property) disagree(p, "algebraic Gorenstein vs S-property");
    if (a.pseudo_gorenstein != summary.unique_max.has_value()) disagree(p, "algebraic pseudo-Gorenstein vs rook polynomial");
    if (a.hilbert != summary.rook_poly) disagree(p, "Hilbert function vs rook polynomial");
    if (path) {
      if (a.level != r.level) disagree(p, "path level flag");
      if (a.pseudo_gorenstein != r.pseudo_gorenstein) disagree(p, "path pseudo-Gorenstein flag");
    } else {
      r.level = a.level;
      r.pseudo_gorenstein = a.pseudo_gorenstein;
      r.level_source = "algebraic";
    }
    if (options.mode == Mode::algebraic) r.level_source = "algebraic";
    r.algebraic = std::move(a);
  }
  r.category = category_of(r.gorenstein, r.level, r.pseudo_gorenstein);
  return r;
}

Census classify_census(std::size_t n, const CensusOptions& options) {
  Census c;
  const auto shapes = generate_free_simple_thin(n);
  c.shapes = parallel_map(shapes, options.jobs, [&](const Polyomino& p) { return classify_shape(p, options); });
  c.row.rank = n;
  for (const auto& s : c.shapes) {
    switch (s.category) {
      case Category::gorenstein:
        ++c.row.gorenstein;
        break;
      case Category::level:
        ++c.row.level_not_g;
        break;
      case Category::pseudo_gorenstein:
        ++c.row.pg_not_g;
        break;
      case Category::none:
        ++c.row.none;
        break;
    }
  }
  c.row.total = c.shapes.size();
  return c;
}

const std::array<CensusRow, 7> kPublishedCounts{{
    {4, 0, 4, 0, 0, 4},
    {5, 3, 7, 1, 0, 11},
    {6, 0, 26, 0, 1, 27},
    {7, 10, 65, 5, 2, 82},
    {8, 0, 230, 0, 20, 250},
    {9, 47, 684, 36, 48, 815},
    {10, 0, 2383, 0, 302, 2685},
}};

std::optional<CensusRow> published_row(std::size_t rank) {
  if (rank < kTableFirstRank || rank > kTableLastRank) return std::nullopt;
  return kPublishedCounts[rank - kTableFirstRank];
}

namespace {

void tally_pg(ScanReport& rep, std::size_t n, const std::vector<ShapeRecord>& records) {
  for (const auto& r : records) {
    ++rep.examined;
    if (!r.pseudo_gorenstein) continue;
    ++rep.matched;
    if (n != 2 * r.rook_number - 1) {
      rep.violations.push_back(Violation{r.shape, "rank = 2r - 1",
                                         "rank " + std::to_string(n) + ", rook number " + std::to_string(r.rook_number)});
    }
  }
}

void tally_conjecture(ScanReport& rep, const std::vector<ShapeRecord>& records) {
  for (const auto& r : records) {
    ++rep.examined;
    if (!r.single_cell_in_every_interval) continue;
    ++rep.matched;
    if (!r.algebraic) throw ModeInsufficient("ModeInsufficient: the conjecture scan needs the algebraic oracle");
    if (!r.algebraic->level) {
      std::string socle;
      for (std::size_t d : r.algebraic->socle) socle += (socle.empty() ? "" : ",") + std::to_string(d);
      rep.violations.push_back(Violation{r.shape, "single cell in every interval implies level",
                                         "socle dimensions by degree (" + socle + "), seed " +
                                             std::to_string(r.algebraic->seed.value_or(0))});
    }
  }
}

template <class Tally>
ScanReport report_from(const std::vector<Census>& censuses, Tally&& tally) {
  ScanReport rep;
  if (censuses.empty()) return rep;
  rep.min_rank = censuses.front().row.rank;
  rep.max_rank = censuses.back().row.rank;
  for (const auto& c : censuses) tally(rep, c);
  return rep;
}

}  // namespace

ScanReport pg_rank_report(const std::vector<Census>& censuses) {
  return report_from(censuses, [](ScanReport& rep, const Census& c) { tally_pg(rep, c.row.rank, c.shapes); });
}

ScanReport conjecture_report(const std::vector<Census>& censuses) {
  return report_from(censuses, [](ScanReport& rep, const Census& c) { tally_conjecture(rep, c.shapes); });
}

ScanReport scan_pg_rank(std::size_t n_max, const CensusOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  ScanReport rep;
  rep.max_rank = n_max;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto shapes = generate_free_simple_thin(n);
    auto records = parallel_map(shapes, options.jobs, [&](const Polyomino& p) {
      if (options.mode != Mode::combinatorial) return classify_shape(p, options);
      // Without the algebra, pseudo-Gorenstein is read off the rook
      // polynomial (it is the h-polynomial of a simple thin polyomino).
      ShapeRecord r;
      r.shape = p;
      const auto summary = rook_complex(p, options.algebra.max_rank);
      r.rook_number = summary.rook_number;
      r.rook_poly = summary.rook_poly;
      r.pseudo_gorenstein = summary.unique_max.has_value();
      return r;
    });
    tally_pg(rep, n, records);
  }
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

ScanReport scan_conjecture(std::size_t n_max, const CensusOptions& options) {
  if (options.mode == Mode::combinatorial) {
    throw ModeInsufficient("ModeInsufficient: the conjecture scan needs the algebraic oracle");
  }
  const auto t0 = std::chrono::steady_clock::now();
  ScanReport rep;
  rep.max_rank = n_max;
  for (std::size_t n = 1; n <= n_max; ++n) tally_conjecture(rep, classify_census(n, options).shapes);
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

ScanReport scan_facet_gaps(std::size_t n_max, bool thin_simple_only) {
  const auto t0 = std::chrono::steady_clock::now();
  ScanReport rep;
  rep.max_rank = n_max;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (const auto& p : generate_free(n, GenerateOptions{thin_simple_only, thin_simple_only, kDefaultGenerationCap})) {
      ++rep.examined;
      ++rep.matched;
      if (!facet_gap_check(p)) rep.violations.push_back(Violation{p, "facet sizes contiguous", ""});
    }
  }
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

ScanReport scan_super_partition(std::size_t n_max) {
  const auto t0 = std::chrono::steady_clock::now();
  ScanReport rep;
  rep.max_rank = n_max;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (const auto& p : generate_free_simple_thin(n)) {
      ++rep.examined;
      const bool pure = rook_complex(p).pure;
      const bool super = has_super_partition(p);
      rep.matched += pure;
      if (pure != super) {
        rep.violations.push_back(Violation{p, "pure iff super partition",
                                           std::string("pure ") + (pure ? "true" : "false") + ", super partition " +
                                               (super ? "true" : "false")});
      }
    }
  }
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

}  // namespace polylevel
