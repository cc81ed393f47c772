#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "polylevel/cli.hpp"

using namespace polylevel;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "polylevel");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const char* kS5 = "..##\n.##.\n##..";

}  // namespace

TEST(Analyze, StaircaseS5) {
  const auto r = run({"analyze", "--shape", kS5});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["shape"]["rank"], 6);
  EXPECT_EQ(j["vertex_count"], 14);
  EXPECT_EQ(j["rook"]["rook_poly"], json::parse("[1, 6, 10, 4]"));
  EXPECT_EQ(j["classification"]["level"], true);
  EXPECT_EQ(j["classification"]["gorenstein"], false);
  EXPECT_EQ(j["classification"]["initial_level"], false);
  EXPECT_EQ(j["classification"]["category"], "L");
  EXPECT_EQ(j["algebraic"]["socle_dimensions"], json::parse("[0, 0, 0, 4]"));
  EXPECT_EQ(j["path"]["stairs"][0]["kind"], "S");
}

TEST(Analyze, ModesAndRandomRoute) {
  const auto comb = json::parse(run({"--mode", "combinatorial", "analyze", "--shape", "##"}).out);
  EXPECT_FALSE(comb.contains("algebraic") && !comb["algebraic"].is_null());
  EXPECT_EQ(comb["classification"]["level"], true);

  const auto forced = run({"analyze", "--force-random", "--seed", "3", "--shape", kS5});
  ASSERT_EQ(forced.code, kExitOk) << forced.err;
  const auto j = json::parse(forced.out);
  EXPECT_EQ(j["algebraic"]["lsop"], "random");
  EXPECT_EQ(j["algebraic"]["socle_dimensions"], json::parse("[0, 0, 0, 4]"));
}

TEST(Analyze, NonPathNeedsAlgebraInCombinatorialMode) {
  const auto t = "###\n.#.";
  const auto both = run({"analyze", "--shape", t});
  ASSERT_EQ(both.code, kExitOk) << both.err;
  EXPECT_TRUE(json::parse(both.out)["path"].is_null());
  const auto comb = run({"--mode", "combinatorial", "analyze", "--shape", t});
  EXPECT_EQ(comb.code, kExitOk) << comb.err;
  EXPECT_TRUE(json::parse(comb.out)["classification"]["level"].is_null());
}

TEST(Analyze, InputFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "polylevel_cli_shape.txt";
  std::ofstream(path) << kS5 << "\n";
  const auto r = run({"analyze", path.string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, run({"analyze", "--shape", kS5}).out);
  std::filesystem::remove(path);
}

TEST(Analyze, InputErrors) {
  const auto square = run({"analyze", "--shape", "##\n##"});
  EXPECT_EQ(square.code, kExitInput);
  EXPECT_EQ(json::parse(square.out)["thin"], false);
  EXPECT_EQ(run({"analyze", "--shape", "#x#"}).code, kExitInput);
  EXPECT_EQ(run({"analyze", "--shape", "#.#"}).code, kExitInput);
  EXPECT_EQ(run({"analyze", "--shape", "###\n#.#\n###"}).code, kExitInput);
  EXPECT_EQ(run({"--max-rank", "5", "analyze", "--shape", "######"}).code, kExitInput);
}

TEST(Options, Errors) {
  EXPECT_EQ(run({"--char", "4", "analyze", "--shape", "#"}).code, kExitInput);
  EXPECT_EQ(run({"--char", "65521", "analyze", "--shape", "#"}).code, kExitOk);
  EXPECT_EQ(run({"--mode", "fast", "census"}).code, kExitInput);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInput);
  EXPECT_EQ(run({"scan"}).code, kExitInput);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Census, CsvRows) {
  const auto r = run({"census", "--max-rank", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0], "rank,gorenstein,level,pseudo_gorenstein,none,total");
  EXPECT_EQ(rows[4], "4,0,4,0,0,4");
  EXPECT_EQ(rows[5], "5,3,7,1,0,11");
  EXPECT_EQ(run({"census", "--min-rank", "4", "--max-rank", "5"}).out, rows[0] + "\n" + rows[4] + "\n" + rows[5] + "\n");
}

TEST(Census, ShapesFileAndCombinatorialFailure) {
  const auto path = std::filesystem::temp_directory_path() / "polylevel_cli_shapes.jsonl";
  const auto r = run({"census", "--max-rank", "4", "--shapes", path.string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(path);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) {
    EXPECT_NO_THROW(json::parse(line));
    ++n;
  }
  EXPECT_EQ(n, 1u + 1u + 2u + 4u);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"--mode", "combinatorial", "census", "--max-rank", "6"}).code, kExitInput);
}

TEST(VerifyTable, Ranks) {
  const auto small = run({"verify-table", "--max-rank", "3"});
  EXPECT_EQ(small.code, kExitOk) << small.err;
  EXPECT_NE(small.out.find("not in table"), std::string::npos);
  const auto r = run({"verify-table", "--max-rank", "7"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("all tabulated rows match"), std::string::npos);
  EXPECT_EQ(r.out.find('*'), std::string::npos);
}

TEST(GbCheck, PassAndNegativeControl) {
  const auto ok = run({"gb-check", "--max-rank", "5"});
  ASSERT_EQ(ok.code, kExitOk) << ok.err;
  const auto j = json::parse(ok.out);
  EXPECT_EQ(j["result"], "pass");
  EXPECT_GT(j["orientations"].get<int>(), j["paths"].get<int>());

  const auto bad = run({"gb-check", "--max-rank", "5", "--inject-fault"});
  EXPECT_EQ(bad.code, kExitMismatch);
  const auto f = json::parse(bad.out);
  EXPECT_EQ(f["result"], "fail");
  EXPECT_FALSE(f["claim"].get<std::string>().empty());
}

TEST(Scan, Kinds) {
  for (const std::string kind : {"pg-rank", "conjecture", "facet-gap", "super-partition"}) {
    const auto r = run({"scan", "--kind", kind, "--max-rank", "6"});
    ASSERT_EQ(r.code, kExitOk) << kind << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["scan"], kind);
    EXPECT_TRUE(j["violations"].empty()) << kind;
  }
  EXPECT_EQ(run({"scan", "--kind", "bogus"}).code, kExitInput);
}

TEST(Output, DeterministicAndRedirectable) {
  const std::vector<std::string> args{"--seed", "11", "census", "--max-rank", "7", "--jobs", "2"};
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, run({"--seed", "11", "census", "--max-rank", "7"}).out);

  const auto path = std::filesystem::temp_directory_path() / "polylevel_cli_out.json";
  const auto r = run({"--out", path.string(), "analyze", "--shape", kS5});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(written, run({"analyze", "--shape", kS5}).out);
  std::filesystem::remove(path);
}
