#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = bridgekit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, Invariants) {
  auto r = run({"invariants", "2,-4,4,-2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "| crossing | 9 |"));
  EXPECT_TRUE(has(r.out, "| braid | 4 |"));

  r = run({"invariants", "2,-2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["value"], "2/3");
  EXPECT_EQ(j["braid"], 2);
  EXPECT_EQ(j["torus"], 3);

  r = run({"invariants", "2,0,2"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(has(r.err, "'0'"));
}

TEST(Cli, NegativeLeadingWords) {
  EXPECT_EQ(run({"invariants", "-2,2"}).code, 0);
  EXPECT_EQ(run({"invariants", "--", "-2,2"}).code, 0);
  EXPECT_EQ(run({"invariants", "=-2,2"}).code, 0);
}

TEST(Cli, Census) {
  auto r = run({"census", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "| 4 | 1 | 0 | 3 | 1 | 0 | 3 |"));

  r = run({"census", "3..15", "--verify"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "| 10 | 85 | 242 | 389/85 | 45 | 128 | 206/45 |"));
  EXPECT_TRUE(has(r.err, "no mismatches"));

  r = run({"census", "100", "--formulas-only"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "| 100 |"));

  r = run({"census", "100"});
  EXPECT_EQ(r.code, 4);

  r = run({"census", "5", "--format", "csv"});
  EXPECT_EQ(r.out, "c,tk,ts,avg_braid,tk_star,ts_star,avg_braid_star,avg_genus\n5,4,8,5/2,2,4,5/2,3/2\n");

  r = run({"census", "6", "--up-to-mirror"});
  EXPECT_EQ(r.out, "| c | TK* | TS* | avg braid* |\n|---|---|---|---|\n| 6 | 3 | 4 | 10/3 |\n");

  r = run({"census", "6", "--decimal"});
  EXPECT_TRUE(has(r.out, "3.4"));
  EXPECT_FALSE(has(r.out, "17/5"));

  EXPECT_EQ(run({"census", "7..5"}).code, 3);
  EXPECT_EQ(run({"census", "x"}).code, 3);
}

TEST(Cli, Epi) {
  auto r = run({"epi", "targets", "2,-2,2,-2,2,-2,2,-2,2,-2,2,-2,2,-2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "3_1"));
  EXPECT_TRUE(has(r.out, "5_1"));

  r = run({"epi", "minimal", "2,-2,2,-2,2,-2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2,-2,2,-2,2,-2: minimal\n");

  r = run({"epi", "check", "2,2", "2,-2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "no epimorphism"));

  r = run({"epi", "graph", "--max-c", "7", "--format", "dot"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);

  r = run({"epi", "targets", "2,-2,2,-2,2,-2,2,-2,2,-2,2,-2,2,-2", "--budget", "3"});
  EXPECT_EQ(r.code, 4);
  EXPECT_TRUE(has(r.err, "partial"));
}

TEST(Cli, Table1) {
  auto r = run({"table1", "--max-c", "15"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.err, "matches the reference table (28 rows)"));
  EXPECT_TRUE(has(r.out, "| 4 | 4B3 | 9 | [2, -4, 4, -2] | 3_1 |"));
  EXPECT_TRUE(has(r.out, "| 2 | 2 | 15 | [2, -2, 2, -2, 2, -2, 2, -2, 2, -2, 2, -2, 2, -2] | 3_1 and 5_1 |"));

  r = run({"table1", "--max-c", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "| braid | type | c | word | onto |\n|---|---|---|---|---|\n");

  r = run({"table1", "--max-c", "11", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_FALSE(j.empty());
  EXPECT_TRUE(j[0]["params"].contains("witness"));
}

TEST(Cli, DeterministicAcrossJobs) {
  EXPECT_EQ(run({"table1", "--max-c", "13", "--jobs", "1"}).out, run({"table1", "--max-c", "13", "--jobs", "3"}).out);
  EXPECT_EQ(run({"census", "3..14", "--jobs", "1", "--format", "json"}).out,
            run({"census", "3..14", "--jobs", "4", "--format", "json"}).out);
}

TEST(Cli, Identities) {
  auto r = run({"identities", "--n-max", "200"});
  EXPECT_EQ(r.code, 0);
  EXPECT_FALSE(has(r.out, "FAIL"));
}

TEST(Cli, ConfigFileAndEnvironment) {
  const auto path = std::filesystem::temp_directory_path() / "bridgekit_test.conf";
  {
    std::ofstream f(path);
    f << "# test settings\nceiling = 8\nformat = csv\n";
  }
  auto r = run({"--config", path.string(), "census", "9"});
  EXPECT_EQ(r.code, 4);
  r = run({"--config", path.string(), "census", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("c,tk", 0), 0u);
  r = run({"--config", path.string(), "--ceiling", "9", "census", "9"});
  EXPECT_EQ(r.code, 0);

  ::setenv("BRIDGEKIT_CEILING", "5", 1);
  EXPECT_EQ(run({"census", "6"}).code, 4);
  EXPECT_EQ(run({"--ceiling", "6", "census", "6"}).code, 0);
  ::unsetenv("BRIDGEKIT_CEILING");

  {
    std::ofstream f(path);
    f << "colour = blue\n";
  }
  EXPECT_EQ(run({"--config", path.string(), "census", "5"}).code, 3);
  std::filesystem::remove(path);
}

TEST(Cli, BadFormat) {
  EXPECT_EQ(run({"census", "5", "--format", "xml"}).code, 3);
  EXPECT_EQ(run({"census", "5", "--format", "dot"}).code, 3);
}
