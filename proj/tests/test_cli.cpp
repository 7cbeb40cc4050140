#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include <json.hpp>

#include "cosec/cli.hpp"
#include "cosec/io.hpp"

using namespace cosec;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() / ("cosec_cli_" + std::to_string(::getpid()) + "_" +
                                       ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    write_text_file(path(name), text);
    return path(name);
  }
  fs::path dir;
};

}  // namespace

TEST_F(Cli, VerifyPrintsWitnesses) {
  const auto c5 = write("c5.el", "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
  const Outcome r = run({"verify", "--kind", "csds", "-i", c5, "--set", "0,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0 -> {4}"), std::string::npos);
  EXPECT_NE(r.out.find("2 -> {3}"), std::string::npos);
  const Outcome bad = run({"verify", "--kind", "csds", "-i", c5, "--set", "0"});
  EXPECT_EQ(bad.code, 1);
  const Outcome js = run({"verify", "--kind", "double", "-i", c5, "--set", "0,2", "--json"});
  EXPECT_EQ(js.code, 1);
  EXPECT_EQ(nlohmann::json::parse(js.out).at("verdict"), false);
}

TEST_F(Cli, SolveReg3WithOracle) {
  const auto k4 = write("k4.el", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  const Outcome r = run({"solve", "--problem", "csds", "--method", "reg3", "-i", k4, "--json", "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("set"), (std::vector<int>{2, 3}));
  EXPECT_EQ(doc.at("ratio"), 2.0);
  EXPECT_EQ(doc.at("oracle_cardinality"), 1);
  EXPECT_NE(r.out.find("\"ratio\":2.0"), std::string::npos);
}

TEST_F(Cli, SolveMethodsAndNoSolution) {
  const auto c5 = write("c5.el", "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
  EXPECT_EQ(run({"solve", "--problem", "csds", "--method", "greedy", "-i", c5}).code, 0);
  EXPECT_EQ(run({"solve", "--problem", "double", "--method", "greedy", "-i", c5}).code, 0);
  EXPECT_EQ(run({"solve", "--problem", "dom", "--method", "greedy", "-i", c5}).code, 0);
  EXPECT_EQ(run({"solve", "--problem", "csds", "--method", "reg3", "-i", c5}).code, 2);
  const auto k1 = write("k1.el", "1 0\n");
  const Outcome none = run({"solve", "--problem", "csds", "-i", k1});
  EXPECT_EQ(none.code, 3);
  EXPECT_EQ(run({"solve", "--problem", "csds", "-i", path("missing.el")}).code, 2);
}

TEST_F(Cli, ReduceExtractCheckPipeline) {
  const auto p3 = write("p3.el", "3 2\n0 1\n1 2\n");
  const Outcome red = run({"reduce", "--kind", "pebg", "-i", p3, "-o", path("g2.el"), "--map", path("m.json")});
  ASSERT_EQ(red.code, 0) << red.err;
  EXPECT_NE(red.out.find("n' 12"), std::string::npos);
  EXPECT_NE(red.out.find("m' 17"), std::string::npos);
  ASSERT_TRUE(fs::exists(path("g2.el")));
  ASSERT_TRUE(fs::exists(path("m.json")));

  const Outcome sol = run({"solve", "--problem", "csds", "-i", path("g2.el"), "--json"});
  ASSERT_EQ(sol.code, 0);
  write("sol.json", sol.out);
  const Outcome ex = run({"extract", "--map", path("m.json"), "-i", p3, "--reduced", path("g2.el"), "--solution",
                      path("sol.json"), "--json"});
  ASSERT_EQ(ex.code, 0) << ex.err;
  EXPECT_EQ(nlohmann::json::parse(ex.out).at("cardinality"), 1);

  EXPECT_EQ(run({"check-structure", "--kind", "pebg", "-i", path("g2.el"), "--map", path("m.json")}).code, 0);
  EXPECT_EQ(run({"check-structure", "--kind", "pebg", "-i", p3}).code, 2);

  ASSERT_EQ(run({"reduce", "--kind", "star", "-i", p3, "-o", path("s2.el"), "--map", path("s.json")}).code, 0);
  const Outcome star = run({"check-structure", "--kind", "star", "-i", path("s2.el"), "--map", path("s.json")});
  EXPECT_EQ(star.code, 0);
  EXPECT_NE(star.out.find("valid"), std::string::npos);
  const auto c6 = write("c6.el", "6 6\n0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n");
  EXPECT_EQ(run({"check-structure", "--kind", "star", "-i", c6}).code, 1);
}

TEST_F(Cli, ExtractRejectsNonCsds) {
  const auto p3 = write("p3.el", "3 2\n0 1\n1 2\n");
  ASSERT_EQ(run({"reduce", "--kind", "pebg", "-i", p3, "-o", path("g2.el"), "--map", path("m.json")}).code, 0);
  EXPECT_EQ(run({"extract", "--map", path("m.json"), "-i", p3, "--reduced", path("g2.el"), "--set", "0"}).code, 2);
}

TEST_F(Cli, GenNeedsSeedForRandomFamilies) {
  EXPECT_EQ(run({"gen", "--family", "random_regular", "-n", "8"}).code, 2);
  const Outcome a = run({"gen", "--family", "random_regular", "-n", "8", "--seed", "3"});
  const Outcome b = run({"gen", "--family", "random_regular", "-n", "8", "--seed", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(parse_edge_list(a.out).m(), 12u);
  EXPECT_EQ(run({"gen", "--family", "cycle", "-n", "5"}).out, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
  EXPECT_EQ(run({"gen", "--family", "complete_bipartite", "--parts", "2,3"}).code, 0);
  EXPECT_EQ(run({"gen", "--family", "cycle", "-n", "2"}).code, 2);
}

TEST_F(Cli, UsageErrors) {
  const Outcome unknown = run({"solve", "--bogus"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  const auto bad = write("bad.el", "2 1\n0 0\n");
  const Outcome r = run({"verify", "--kind", "dom", "-i", bad, "--set", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST_F(Cli, BenchWritesReports) {
  const Outcome r = run({"bench", "--suite", "reg3", "--n-max", "8", "--trials", "6", "--seed", "2", "-o", path("r.csv"),
                     "--json", path("r.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string csv = read_text_file(path("r.csv"));
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "instance,family,seed,n,m,min_degree,max_degree,method,cardinality,oracle,ratio,bound,bound_satisfied");
  const auto doc = nlohmann::json::parse(read_text_file(path("r.json")));
  EXPECT_EQ(doc.at("records").size(), 6u);
  EXPECT_EQ(doc.at("complete"), true);
  const Outcome again = run({"bench", "--suite", "reg3", "--n-max", "8", "--trials", "6", "--seed", "2"});
  EXPECT_EQ(again.out, csv);
  EXPECT_EQ(run({"bench", "--suite", "nope"}).code, 2);
}

TEST_F(Cli, WorkerEnvironment) {
  ::setenv("COSEC_WORKERS", "3", 1);
  EXPECT_EQ(workers_from_env(), 3u);
  ::setenv("COSEC_WORKERS", "zero", 1);
  EXPECT_THROW(workers_from_env(), std::invalid_argument);
  ::unsetenv("COSEC_WORKERS");
  EXPECT_EQ(workers_from_env(), 1u);
}

TEST_F(Cli, Binary) {
  const std::string cmd = std::string(COSEC_BINARY) + " gen --family path -n 3 > " + path("p.el");
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_EQ(read_text_file(path("p.el")), "3 2\n0 1\n1 2\n");
  const std::string bad = std::string(COSEC_BINARY) + " solve --bogus 2> /dev/null";
  EXPECT_EQ(WEXITSTATUS(std::system(bad.c_str())), 2);
}
