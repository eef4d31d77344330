#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lian/cli.hpp"
#include "lian/map_io.hpp"

namespace lian {
namespace {

namespace fs = std::filesystem;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("lian_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    save_map(dir_ / "open.map", Grid(20, 20));
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, SolveStraightLine) {
  const Invocation r = invoke({"solve", "--map", path("open.map"), "--start", "10", "0", "--goal", "10", "15",
                        "--algorithm", "lian", "--delta", "5"});
  EXPECT_EQ(r.code, cli::kPathFound) << r.err;
  EXPECT_NE(r.out.find("outcome: path-found"), std::string::npos);
  EXPECT_NE(r.out.find("max_turn_deg: 0.000000"), std::string::npos);
  EXPECT_NE(r.out.find("path_length: 15.000000"), std::string::npos);
  EXPECT_NE(r.out.find("path: (10,0) (10,5) (10,10) (10,15)") , std::string::npos) << r.out;
  EXPECT_NE(r.out.find("params: alpha=25;w=2;delta=5"), std::string::npos) << r.out;
}

TEST_F(CliTest, SolveDynamicDefaults) {
  const Invocation r = invoke({"solve", "--map", path("open.map"), "--start", "1", "1", "--goal", "18", "17",
                        "--algorithm", "dlian", "--delta-init", "10"});
  EXPECT_EQ(r.code, cli::kPathFound) << r.err;
  EXPECT_NE(r.out.find("delta_min=5;delta_max=10;n=2"), std::string::npos) << r.out;
}

TEST_F(CliTest, SolveWritesSvg) {
  const Invocation r = invoke({"solve", "--map", path("open.map"), "--start", "1", "1", "--goal", "18", "17",
                        "--algorithm", "wtheta-la", "--out-svg", path("p.svg"), "--angle-labels"});
  EXPECT_EQ(r.code, cli::kPathFound) << r.err;
  EXPECT_NE(read_file(path("p.svg")).find("<polyline id=\"path\""), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  const std::string map = path("open.map");
  EXPECT_EQ(invoke({"solve", "--map", map, "--start", "1", "1", "--goal", "5", "5", "--algorithm", "theta-la",
                    "--delta", "5"}).code,
            cli::kInvalidInput);
  EXPECT_EQ(invoke({"solve", "--map", map, "--start", "1", "1", "--goal", "5", "5", "--algorithm", "lian",
                    "--weight-p", "0.2"}).code,
            cli::kInvalidInput);
  EXPECT_EQ(invoke({"solve", "--map", map, "--start", "1", "1", "--goal", "5", "5", "--alpha-max", "0"}).code,
            cli::kInvalidInput);
  EXPECT_EQ(invoke({"solve", "--map", map, "--start", "1", "1", "--goal", "1", "1"}).code, cli::kInvalidInput);
  EXPECT_EQ(invoke({"solve", "--map", path("absent.map"), "--start", "1", "1", "--goal", "5", "5"}).code,
            cli::kInvalidInput);
  EXPECT_EQ(invoke({"frobnicate"}).code, cli::kInvalidInput);
  EXPECT_EQ(invoke({}).code, cli::kInvalidInput);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(CliTest, SolveNoPath) {
  Grid g(9, 9);
  g.block_rect(0, 4, 9, 5);
  save_map(dir_ / "wall.map", g);
  const Invocation r = invoke({"solve", "--map", path("wall.map"), "--start", "4", "0", "--goal", "4", "8", "--delta", "3"});
  EXPECT_EQ(r.code, cli::kNoPath);
  EXPECT_NE(r.out.find("outcome: no-path"), std::string::npos);
}

TEST_F(CliTest, ConfigTokens) {
  EXPECT_EQ(cli::parse_config_token("LIAN-10")->delta, 10);
  EXPECT_EQ(cli::parse_config_token("dlian-10")->algorithm, Algorithm::DLian);
  EXPECT_EQ(cli::parse_config_token("Theta*-LA")->algorithm, Algorithm::ThetaLa);
  EXPECT_EQ(cli::parse_config_token("wtheta-la")->algorithm, Algorithm::WThetaLa);
  EXPECT_FALSE(cli::parse_config_token("lian-").has_value());
  EXPECT_FALSE(cli::parse_config_token("astar").has_value());
  EXPECT_FALSE(cli::parse_config_token("lian-0").has_value());
}

TEST_F(CliTest, BenchEmptyTaskFile) {
  std::ofstream(path("tasks.txt")) << "# nothing\n";
  const Invocation r = invoke({"bench", "--tasks", path("tasks.txt"), "--out-dir", path("out")});
  EXPECT_EQ(r.code, cli::kInvalidInput);
  EXPECT_NE(r.err.find("no tasks"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir_ / "out" / "tasks.csv"));
}

TEST_F(CliTest, BenchSingleTask) {
  std::ofstream(path("tasks.txt")) << "open.map 10 0 10 15\n";
  const Invocation r = invoke({"bench", "--tasks", path("tasks.txt"), "--configs", "lian-5", "--out-dir", path("out")});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream csv(read_file(path("out/tasks.csv")));
  std::string line;
  std::size_t rows = 0;
  std::getline(csv, line);
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 1u);
  EXPECT_NE(r.out.find("LIAN-5"), std::string::npos);
}

TEST_F(CliTest, GenerateThenBench) {
  Invocation g = invoke({"generate", "--seed", "3", "--height", "40", "--width", "40", "--maps", "2", "--tasks-per-map",
                  "2", "--out-dir", path("gen")});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_TRUE(fs::exists(dir_ / "gen" / "map_000.map"));
  EXPECT_TRUE(fs::exists(dir_ / "gen" / "map_001.map"));
  EXPECT_EQ(parse_tasks(read_file(path("gen/tasks.txt"))).size(), 4u);

  const Invocation b = invoke({"bench", "--tasks", path("gen/tasks.txt"), "--cutoff", "20", "--jobs", "2", "--alpha-max",
                        "25", "30", "--out-dir", path("res")});
  ASSERT_EQ(b.code, 0) << b.err;
  std::istringstream csv(read_file(path("res/tasks.csv")));
  std::string line;
  std::size_t rows = 0;
  std::getline(csv, line);
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 4u * 4u * 2u);
  std::istringstream sum(read_file(path("res/summary.csv")));
  rows = 0;
  std::getline(sum, line);
  while (std::getline(sum, line)) ++rows;
  EXPECT_EQ(rows, 8u);

  Invocation again = invoke({"generate", "--seed", "3", "--height", "40", "--width", "40", "--maps", "2",
                      "--tasks-per-map", "2", "--out-dir", path("gen2")});
  ASSERT_EQ(again.code, 0);
  EXPECT_EQ(read_file(path("gen/map_001.map")), read_file(path("gen2/map_001.map")));
  EXPECT_EQ(read_file(path("gen/tasks.txt")), read_file(path("gen2/tasks.txt")));
}

TEST_F(CliTest, RenderMap) {
  const Invocation r = invoke({"render", "--map", path("open.map"), "--out-svg", path("m.svg"), "--weights"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "m.svg"));
}

}  // namespace
}  // namespace lian
