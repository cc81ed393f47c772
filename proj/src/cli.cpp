#include "polylevel/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "polylevel/error.hpp"
#include "polylevel/report.hpp"

namespace polylevel {

namespace {

struct GlobalFlags {
  std::string mode = "both";
  std::size_t max_rank = 0;  // 0: the subcommand's default
  std::uint32_t characteristic = kDefaultPrime;
  std::uint64_t seed = 1;
  unsigned retries = 8;
  unsigned jobs = 1;
  std::string out;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw ParseError(ParseError::Kind::EmptyInput, "EmptyInput: cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to --out when given, otherwise to the command's output stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error("cannot open output file " + path);
    }
    os_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

std::vector<Polyomino> distinct_orientations(const Polyomino& p) {
  std::vector<Polyomino> out;
  for (int g = 0; g < kSymmetryCount; ++g) {
    Polyomino t = transformed(p, g);
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
  }
  return out;
}

int cmd_analyze(const GlobalFlags& gf, Mode mode, const AlgebraOptions& algebra, const std::string& input,
                const std::string& inline_shape, std::ostream& out, std::ostream& err) {
  const std::string text = inline_shape.empty() ? read_input(input) : inline_shape;
  const Polyomino p = parse_polyomino(text);
  const AnalyzeResult res = analyze_polyomino(p, mode, algebra);
  Sink sink(gf.out, out);
  *sink << res.report.dump(2) << "\n";
  if (res.exit_code != 0 && res.report.contains("error")) err << res.report["error"].get<std::string>() << "\n";
  return res.exit_code;
}

int cmd_census(const GlobalFlags& gf, const CensusOptions& copts, std::size_t min_rank, const std::string& shapes_path,
               std::ostream& out) {
  const std::size_t max_rank = gf.max_rank ? gf.max_rank : 7;
  Sink sink(gf.out, out);
  std::ofstream shapes;
  if (!shapes_path.empty()) {
    shapes.open(shapes_path);
    if (!shapes) throw Error("cannot open output file " + shapes_path);
  }
  *sink << census_csv_header() << "\n";
  for (std::size_t n = min_rank; n <= max_rank; ++n) {
    const Census c = classify_census(n, copts);
    *sink << census_csv_line(c.row) << "\n";
    if (shapes) {
      for (const auto& r : c.shapes) shapes << shape_record_json(r).dump() << "\n";
    }
  }
  return kExitOk;
}

int cmd_verify_table(const GlobalFlags& gf, const CensusOptions& copts, std::ostream& out) {
  const std::size_t max_rank = gf.max_rank ? gf.max_rank : kTableLastRank;
  Sink sink(gf.out, out);
  std::ostream& os = *sink;
  os << "rank  G(expected/computed)  L  PG  N  total  status\n";
  bool all_match = true;
  for (std::size_t n = 1; n <= max_rank; ++n) {
    const CensusRow row = classify_census(n, copts).row;
    const auto expected = published_row(n);
    auto cell = [&](std::size_t want, std::size_t got) {
      return std::to_string(want) + "/" + std::to_string(got) + (want == got ? "" : "*");
    };
    os << n << "  ";
    if (expected) {
      const bool match = *expected == row;
      all_match = all_match && match;
      os << cell(expected->gorenstein, row.gorenstein) << "  " << cell(expected->level_not_g, row.level_not_g) << "  "
         << cell(expected->pg_not_g, row.pg_not_g) << "  " << cell(expected->none, row.none) << "  "
         << cell(expected->total, row.total) << "  " << (match ? "match" : "MISMATCH") << "\n";
    } else {
      os << "-/" << row.gorenstein << "  -/" << row.level_not_g << "  -/" << row.pg_not_g << "  -/" << row.none
         << "  -/" << row.total << "  not in table\n";
    }
  }
  os << (all_match ? "verify-table: all tabulated rows match\n" : "verify-table: MISMATCH (entries marked *)\n");
  return all_match ? kExitOk : kExitMismatch;
}

int cmd_gb_check(const GlobalFlags& gf, bool inject_fault, std::ostream& out, std::ostream& err) {
  const std::size_t max_rank = gf.max_rank ? gf.max_rank : 8;
  const PrimeField field(gf.characteristic);
  std::function<void(std::vector<Polynomial>&)> tamper;
  if (inject_fault) {
    // Negative control: double the trailing coefficient of the first minor.
    tamper = [&field](std::vector<Polynomial>& gens) {
      if (gens.empty()) return;
      auto terms = gens.front().terms();
      terms.back().coeff = field.mul(terms.back().coeff, 2);
      gens.front() = Polynomial::from_sorted(std::move(terms));
    };
  }
  Sink sink(gf.out, out);
  std::size_t shapes = 0;
  std::size_t orientations = 0;
  std::size_t s_pairs = 0;
  std::size_t standard = 0;
  for (std::size_t n = 2; n <= max_rank; ++n) {
    for (const auto& p : generate_free_simple_thin(n)) {
      if (!as_path(p)) continue;
      ++shapes;
      for (const auto& q : distinct_orientations(p)) {
        ++orientations;
        try {
          const auto rep = check_path_algebra(path_structure(q), field, tamper);
          s_pairs += rep.gb.s_pairs;
          standard += rep.standard_monomials;
        } catch (const ClaimViolated& e) {
          Json j;
          j["result"] = "fail";
          j["claim"] = e.which();
          j["witness"] = e.witness();
          j["shape"] = polyomino_json(q);
          *sink << j.dump(2) << "\n";
          err << e.what() << "\n" << q.to_ascii() << "\n";
          return kExitMismatch;
        }
      }
    }
  }
  Json j;
  j["result"] = "pass";
  j["max_rank"] = max_rank;
  j["paths"] = shapes;
  j["orientations"] = orientations;
  j["s_pairs"] = s_pairs;
  j["standard_monomials"] = standard;
  *sink << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_scan(const GlobalFlags& gf, const CensusOptions& copts, const std::string& kind, std::ostream& out) {
  const std::size_t max_rank = gf.max_rank ? gf.max_rank : 8;
  ScanReport rep;
  if (kind == "pg-rank") {
    rep = scan_pg_rank(max_rank, copts);
  } else if (kind == "conjecture") {
    rep = scan_conjecture(max_rank, copts);
  } else if (kind == "facet-gap") {
    rep = scan_facet_gaps(max_rank, false);
  } else {
    rep = scan_super_partition(max_rank);
  }
  Sink sink(gf.out, out);
  *sink << scan_report_json(rep, kind).dump(2) << "\n";
  return rep.violations.empty() ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"polylevel: Gorenstein, level and pseudo-Gorenstein classification of polyomino rings"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags gf;
  app.add_option("--mode", gf.mode, "combinatorial, algebraic or both")
      ->check(CLI::IsMember({"combinatorial", "algebraic", "both"}));
  app.add_option("--max-rank", gf.max_rank, "rank bound (meaning depends on the command)");
  app.add_option("--char", gf.characteristic, "prime characteristic of the coefficient field");
  app.add_option("--seed", gf.seed, "seed for random linear systems of parameters");
  app.add_option("--retries", gf.retries, "extra attempts after a failed random system");
  app.add_option("--jobs", gf.jobs, "worker threads for census classification")->check(CLI::PositiveNumber);
  app.add_option("--out", gf.out, "write the report to this file");

  auto* analyze = app.add_subcommand("analyze", "analyze one polyomino");
  std::string input = "-";
  std::string inline_shape;
  bool force_random = false;
  analyze->add_option("input", input, "grid, coordinate list or JSON file ('-' for stdin)");
  analyze->add_option("--shape", inline_shape, "polyomino text given inline");
  analyze->add_flag("--force-random", force_random, "use a random system of parameters on paths too");

  auto* census = app.add_subcommand("census", "classify all simple thin polyominoes by rank (CSV)");
  std::size_t min_rank = 1;
  std::string shapes_path;
  census->add_option("--min-rank", min_rank, "first rank")->check(CLI::PositiveNumber);
  census->add_option("--shapes", shapes_path, "write per-shape JSON lines to this file");

  auto* verify = app.add_subcommand("verify-table", "compare the census with the published counts");
  auto* gb = app.add_subcommand("gb-check", "Groebner basis claims over all paths");
  bool inject_fault = false;
  gb->add_flag("--inject-fault", inject_fault, "corrupt one generator (negative control)");

  auto* scan = app.add_subcommand("scan", "experimental scans");
  std::string kind;
  scan->add_option("--kind", kind, "pg-rank, conjecture, facet-gap or super-partition")
      ->required()
      ->check(CLI::IsMember({"pg-rank", "conjecture", "facet-gap", "super-partition"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (!is_prime(gf.characteristic) || gf.characteristic >= (1u << 31)) {
      err << "--char " << gf.characteristic << " is not a prime below 2^31\n";
      return kExitInput;
    }
    const Mode mode = *parse_mode(gf.mode);
    AlgebraOptions algebra;
    algebra.characteristic = gf.characteristic;
    algebra.seed = gf.seed;
    algebra.retries = gf.retries;
    algebra.force_random = force_random;
    CensusOptions copts;
    copts.mode = mode;
    copts.algebra = algebra;
    copts.jobs = gf.jobs;

    if (*analyze) {
      if (gf.max_rank) algebra.max_rank = gf.max_rank;
      return cmd_analyze(gf, mode, algebra, input, inline_shape, out, err);
    }
    if (*census) return cmd_census(gf, copts, min_rank, shapes_path, out);
    if (*verify) return cmd_verify_table(gf, copts, out);
    if (*gb) return cmd_gb_check(gf, inject_fault, out, err);
    if (*scan) return cmd_scan(gf, copts, kind, out);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kExitInput;
  } catch (const NotThin& e) {
    err << e.what() << "\n";
    return kExitInput;
  } catch (const NotSimple& e) {
    err << e.what() << "\n";
    return kExitInput;
  } catch (const NotAPath& e) {
    err << e.what() << "\n";
    return kExitInput;
  } catch (const RankTooLarge& e) {
    err << e.what() << "\n";
    return kExitInput;
  } catch (const ModeInsufficient& e) {
    err << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitOracle;
  }
  return kExitInput;
}

}  // namespace polylevel
