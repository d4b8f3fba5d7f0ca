#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "drgkit_tools/cli.hpp"
#include "drgkit_tools/report.hpp"
#include "json.hpp"

namespace drgkit::tools {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("drgkit_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  nlohmann::json read_json(const std::string& name) const {
    std::ifstream f(dir_ / name);
    return nlohmann::json::parse(f);
  }

  std::string read_text(const std::string& name) const {
    std::ifstream f(dir_ / name);
    return {std::istreambuf_iterator<char>(f), {}};
  }

  fs::path dir_;
};

std::map<std::size_t, std::size_t> dim_histogram(const nlohmann::json& report) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& v : report["vertices"]) ++h[v["dim_T"].get<std::size_t>()];
  return h;
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run({"construct"}).code, kUsage);
  EXPECT_EQ(run({"construct", "--family", "petersen"}).code, kUsage);
  EXPECT_EQ(run({"construct", "--family", "johnson", "--params", "8"}).code, kUsage);
  EXPECT_EQ(run({"construct", "--family", "johnson", "--params", "8,9"}).code, kUsage);
  EXPECT_EQ(run({"reproduce", "--table", "nope"}).code, kUsage);
}

TEST_F(Cli, ConstructWritesGraph) {
  ASSERT_EQ(run({"construct", "--family", "chang", "--params", "1", "--out", path("c1.json")}).code, kSuccess);
  EXPECT_EQ(read_json("c1.json")["n"], 28);
  const CliRun r = run({"construct", "--family", "icosahedron", "--out", path("ico.json")});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("n=12"), std::string::npos);
  ASSERT_EQ(run({"construct", "--family", "johnson", "--params", "8,4", "--out", path("j84.json")}).code, kSuccess);
  EXPECT_EQ(read_json("j84.json")["n"], 70);
}

TEST_F(Cli, AnalyzeShrikhandeAllVertices) {
  ASSERT_EQ(run({"construct", "--family", "shrikhande", "--out", path("s.json")}).code, kSuccess);
  ASSERT_EQ(run({"analyze", path("s.json"), "--all-vertices", "--out", path("r.json")}).code, kSuccess);
  const auto report = read_json("r.json");
  EXPECT_EQ(report["schema"], kSchemaVersion);
  EXPECT_EQ(report["vertices"].size(), 16u);
  EXPECT_EQ(dim_histogram(report), (std::map<std::size_t, std::size_t>{{20, 16}}));
  EXPECT_EQ(report["pvt"]["verdict"], "pvt");
  for (const auto& v : report["vertices"]) EXPECT_EQ(v["modules"]["wedderburn_dim"], v["dim_T"]);
}

TEST_F(Cli, AnalyzeChangOrbitsAndDeterminism) {
  ASSERT_EQ(run({"construct", "--family", "chang", "--params", "1", "--out", path("c1.json")}).code, kSuccess);
  ASSERT_EQ(run({"analyze", path("c1.json"), "--all-vertices", "--out", path("a.json")}).code, kSuccess);
  ASSERT_EQ(run({"analyze", path("c1.json"), "--all-vertices", "--threads", "1", "--out", path("b.json")}).code,
            kSuccess);
  EXPECT_EQ(dim_histogram(read_json("a.json")), (std::map<std::size_t, std::size_t>{{20, 4}, {27, 24}}));
  EXPECT_EQ(read_text("a.json"), read_text("b.json"));
  EXPECT_EQ(read_json("a.json")["pvt"]["verdict"], "not_pvt");
}

TEST_F(Cli, AnalyzeFamilyDirectly) {
  ASSERT_EQ(run({"analyze", "--family", "johnson", "--params", "8,4", "--base-vertex", "5", "--out", path("j.json")}).code,
            kSuccess);
  const auto report = read_json("j.json");
  ASSERT_EQ(report["vertices"].size(), 1u);
  EXPECT_EQ(report["vertices"][0]["vertex"], 5);
  EXPECT_EQ(report["vertices"][0]["dim_T"], 46);
  EXPECT_EQ(report["tightness"]["lhs"], "-864/49");
  EXPECT_EQ(report["pvt"]["method"], "at4_theorem");
}

TEST_F(Cli, HalfCubeAllVerticesNeedsSlow) {
  EXPECT_EQ(run({"analyze", "--family", "halved_cube", "--params", "8", "--all-vertices"}).code, kUsage);
}

TEST_F(Cli, AnalysisFailures) {
  {
    std::ofstream f(dir_ / "path.txt");
    f << "0 1\n1 2\n2 3\n";
  }
  EXPECT_EQ(run({"analyze", path("path.txt")}).code, kAnalysisFailure);
  EXPECT_EQ(run({"analyze", path("missing.json")}).code, kAnalysisFailure);
  EXPECT_EQ(run({"analyze", "--family", "shrikhande", "--base-vertex", "99"}).code, kAnalysisFailure);
}

TEST_F(Cli, PvtAndTiso) {
  const CliRun p = run({"pvt", "--family", "chang", "--params", "2"});
  EXPECT_EQ(p.code, kSuccess);
  EXPECT_NE(p.out.find("not_pvt"), std::string::npos);
  ASSERT_EQ(run({"construct", "--family", "shrikhande", "--out", path("s.json")}).code, kSuccess);
  ASSERT_EQ(run({"construct", "--family", "rook_grid", "--params", "4", "--out", path("g.json")}).code, kSuccess);
  const CliRun t = run({"tiso", path("s.json"), path("g.json")});
  EXPECT_EQ(t.code, kSuccess);
  EXPECT_NE(t.out.find("not T-isomorphic"), std::string::npos);
}

TEST_F(Cli, ReproduceSmallTables) {
  for (const char* table : {"j82", "shrikhande", "gq", "taylor"}) {
    const CliRun r = run({"reproduce", "--table", table});
    EXPECT_EQ(r.code, kSuccess) << table << "\n" << r.out << r.err;
    EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos) << table;
  }
}

}  // namespace
}  // namespace drgkit::tools
