// Drives the weakiasi executable end to end through temporary files.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "weakiasi/io.hpp"
#include "weakiasi/weakiasi.hpp"

using namespace weakiasi;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("weakiasi_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write_graph(const std::string& name, const Graph& g) {
    write_text_file(path(name), to_json(g).dump());
    return path(name);
  }

  int run(const std::string& args) const {
    const std::string cmd = std::string(WEAKIASI_CLI) + " " + args + " > " + path("stdout.txt") + " 2> " +
                            path("stderr.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  json stdout_json() const { return read_json_file(path("stdout.txt")); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, SparingOfK4) {
  auto k4 = write_graph("k4.json", families::complete(4));
  ASSERT_EQ(run("sparing --graph " + k4), 0);
  json out = stdout_json();
  EXPECT_EQ(out["value"], 3);
  EXPECT_EQ(out["method"], "exact-oracle");
  EXPECT_EQ(out["formula_value"], 3);
}

TEST_F(Cli, BuildCartesian) {
  auto p2 = write_graph("p2.json", families::path(2));
  auto p3 = write_graph("p3.json", families::path(3));
  ASSERT_EQ(run("build --op cartesian --g1 " + p2 + " --g2 " + p3 + " --out " + path("grid")), 0);
  json g = read_json_file(path("grid.graph.json"));
  EXPECT_EQ(g["n"], 6);
  EXPECT_EQ(g["edges"].size(), 7u);
  EXPECT_TRUE(g["connected"].get<bool>());
  json map = read_json_file(path("grid.map.json"));
  EXPECT_EQ(map["coords"][4], json::parse("[1,1]"));
}

TEST_F(Cli, BuildDirectReportsDisconnection) {
  auto k2 = write_graph("k2.json", families::complete(2));
  ASSERT_EQ(run("build --op direct --g1 " + k2 + " --g2 " + k2), 0);
  EXPECT_FALSE(stdout_json()["graph"]["connected"].get<bool>());
}

TEST_F(Cli, VerifyDuplicateLabelExits4) {
  auto c4 = write_graph("c4.json", families::cycle(4));
  write_text_file(path("bad.json"), R"({"labels": {"0": [1], "1": [5, 6], "2": [1], "3": [9, 10]}})");
  EXPECT_EQ(run("verify --graph " + c4 + " --labels " + path("bad.json")), 4);
  json out = stdout_json();
  EXPECT_FALSE(out["passed"].get<bool>());
  EXPECT_EQ(out["violations"][0]["kind"], "duplicate-vertex-label");
  EXPECT_EQ(out["violations"][0]["vertices"], json::parse("[0,2]"));
}

TEST_F(Cli, LabelOutputPassesVerify) {
  auto c4 = write_graph("c4.json", families::cycle(4));
  auto k2 = write_graph("k2.json", families::complete(2));
  for (std::string op : {"cartesian", "direct", "strong", "lex", "corona", "rooted"}) {
    ASSERT_EQ(run("label --op " + op + " --g1 " + c4 + " --g2 " + k2 + " --out " + path(op) + " --dot " +
                  path(op + ".dot")),
              0)
        << op;
    ASSERT_EQ(run("verify --graph " + path(op + ".graph.json") + " --labels " + path(op + ".labels.json")), 0)
        << op;
    json plan = read_json_file(path(op + ".plan.json"));
    EXPECT_TRUE(plan.contains("non_singleton"));
    EXPECT_TRUE(fs::exists(path(op + ".dot")));
  }
  ASSERT_EQ(run("label --graph " + c4 + " --out " + path("plain")), 0);
  EXPECT_EQ(run("verify --graph " + path("plain.graph.json") + " --labels " + path("plain.labels.json")), 0);
}

TEST_F(Cli, CoronaSparingReportsFormulaSideBySide) {
  auto c4 = write_graph("c4.json", families::cycle(4));
  auto k2 = write_graph("k2.json", families::complete(2));
  ASSERT_EQ(run("sparing --op corona --g1 " + c4 + " --g2 " + k2), 0);
  json out = stdout_json();
  EXPECT_EQ(out["value"], 4);
  EXPECT_EQ(out["formula_value"], 6);
  EXPECT_EQ(out["formula_method"], "formula-corona");
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("frobnicate"), 1);
  EXPECT_EQ(run("sparing --graph " + path("missing.json")), 2);
  write_text_file(path("broken.json"), "{\"n\": 3, \"edges\": [[0,1]");
  EXPECT_EQ(run("sparing --graph " + path("broken.json")), 2);
  auto big = write_graph("big.json", corona(families::complete(5), families::complete(4)).graph);
  EXPECT_EQ(run("sparing --graph " + big), 3);
  EXPECT_EQ(run("sparing --graph " + big + " --oracle-bound 25"), 0);
  auto c4 = write_graph("c4.json", families::cycle(4));
  auto k2 = write_graph("k2.json", families::complete(2));
  EXPECT_EQ(run("build --op rooted --root 7 --g1 " + c4 + " --g2 " + k2), 1);
}

TEST_F(Cli, OracleBoundFromEnvironment) {
  auto big = write_graph("big.json", corona(families::complete(5), families::complete(4)).graph);
  EXPECT_EQ(run("sparing --graph " + big), 3);
  ASSERT_EQ(::setenv("WEAKIASI_ORACLE_BOUND", "30", 1), 0);
  EXPECT_EQ(run("sparing --graph " + big), 0);
  ::unsetenv("WEAKIASI_ORACLE_BOUND");
}

TEST_F(Cli, IsolatedVerticesNeedFlag) {
  write_text_file(path("iso.json"), R"({"n": 3, "edges": [[0, 1]]})");
  EXPECT_EQ(run("sparing --graph " + path("iso.json")), 2);
  EXPECT_EQ(run("sparing --graph " + path("iso.json") + " --allow-isolated"), 0);
}

TEST_F(Cli, SweepReportsCoronaGap) {
  ASSERT_EQ(run("sweep --seed 5 --out " + path("sweep.json")), 0);
  json out = read_json_file(path("sweep.json"));
  EXPECT_EQ(out["summary"]["verification_failures"], 0);
  bool found = false;
  for (const json& row : out["rows"]) {
    if (row["product"] == "corona" && row["g1"] == "C4" && row["g2"] == "K2") {
      found = true;
      EXPECT_EQ(row["oracle"], 4);
      EXPECT_EQ(row["formula_value"], 6);
      EXPECT_EQ(row["formula_gap"], 2);
    }
  }
  EXPECT_TRUE(found);
  std::ifstream table(path("stdout.txt"));
  std::string text((std::istreambuf_iterator<char>(table)), {});
  EXPECT_NE(text.find("oracle below formula"), std::string::npos);
}
