// Drives the installed command-line tool end to end through the shell.
#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("polyrecon_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path file(const std::string& name) const { return dir_ / name; }

  // Runs the tool with the given argument string; stdin may be a file.
  Outcome run(const std::string& args, const std::string& stdin_file = "") const {
    const auto out = dir_ / "stdout.txt", err = dir_ / "stderr.txt";
    std::string cmd = std::string("\"") + POLYRECON_CLI + "\" " + args;
    if (!stdin_file.empty()) cmd += " < \"" + stdin_file + "\"";
    cmd += " > \"" + out.string() + "\" 2> \"" + err.string() + "\"";
    const int status = std::system(cmd.c_str());
    Outcome r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  fs::path dir_;
};

TEST_F(Cli, GenerateCubeThenLatticeReportsTwentySevenFaces) {
  ASSERT_EQ(run("generate cube 3 -o " + file("cube.json").string()).code, 0);
  const auto r = run("lattice", file("cube.json").string());
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("non-empty faces: 27"), std::string::npos);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["n_nonempty_faces"], 27);
  EXPECT_EQ(j["dimension"], 3);
  EXPECT_EQ(j["faces"].size(), 28u);
  EXPECT_EQ(j["validation"]["valid"], true);
}

TEST_F(Cli, ReconstructSimpleCubeIsIsomorphic) {
  ASSERT_EQ(run("generate cube 3 -o " + file("cube.json").string()).code, 0);
  ASSERT_EQ(run("graph " + file("cube.json").string() + " -o " + file("g.json").string()).code, 0);
  const auto r = run("reconstruct-simple " + file("g.json").string() + " --truth " +
                     file("cube.json").string());
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("isomorphic: true"), std::string::npos);
  EXPECT_EQ(json::parse(r.out)["isomorphic"], true);
}

TEST_F(Cli, ReconstructFromGraphAndLabels) {
  const auto spec = file("p.json").string();
  ASSERT_EQ(run("generate pyramid 4 -o " + spec).code, 0);
  ASSERT_EQ(run("graph " + spec + " -o " + file("g.json").string()).code, 0);
  ASSERT_EQ(run("labels " + spec + " -o " + file("l.json").string()).code, 0);
  const auto r = run("reconstruct " + file("g.json").string() + " " + file("l.json").string() +
                     " --truth " + spec);
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["isomorphic"], true);
  EXPECT_EQ(j["n_nonempty_faces"], 19);
  EXPECT_EQ(j["facets"].size(), 5u);
}

TEST_F(Cli, OrientationsReport) {
  const auto spec = file("sq.json").string();
  ASSERT_EQ(run("generate polygon 4 -o " + spec).code, 0);
  ASSERT_EQ(run("graph " + spec + " -o " + file("g.json").string()).code, 0);
  ASSERT_EQ(run("labels " + spec + " -o " + file("l.json").string()).code, 0);
  const auto r = run("orientations " + file("g.json").string() + " " + file("l.json").string());
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["f"], 9);
  EXPECT_EQ(j["n_acyclic"], 14);
  EXPECT_EQ(j["n_good"], 12);
}

TEST_F(Cli, MaxCountGuardIsAnError) {
  const auto spec = file("c.json").string();
  ASSERT_EQ(run("generate cube 3 -o " + spec).code, 0);
  ASSERT_EQ(run("graph " + spec + " -o " + file("g.json").string()).code, 0);
  ASSERT_EQ(run("labels " + spec + " -o " + file("l.json").string()).code, 0);
  const auto r = run("orientations " + file("g.json").string() + " " + file("l.json").string() +
                     " --max-count 100");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("instance too large"), std::string::npos);
}

TEST_F(Cli, AuditMoebiusFailsWithViolation) {
  const auto r = run(std::string("audit ") + POLYRECON_FIXTURES + "/moebius.json");
  EXPECT_EQ(r.code, 1);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["bipartite"]["passed"], true);
  EXPECT_EQ(j["three_facet"]["passed"], false);
  EXPECT_EQ(j["three_facet"]["classes"].size(), 1u);
  EXPECT_FALSE(j["three_facet"]["violations"].empty());
}

TEST_F(Cli, AuditCappedPasses) {
  const auto spec = file("cap.json").string();
  ASSERT_EQ(run("generate capped 3 2 --seed 5 -o " + spec).code, 0);
  const auto r = run("audit " + spec);
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(json::parse(r.out)["passed"], true);
}

TEST_F(Cli, ReconstructCappedFromDualGraph) {
  const auto spec = file("cap.json").string();
  ASSERT_EQ(run("generate capped 4 2 --seed 11 -o " + spec).code, 0);
  ASSERT_EQ(run("dualgraph " + spec + " -o " + file("dg.json").string()).code, 0);
  const auto r = run("reconstruct-capped " + file("dg.json").string() + " --truth " + spec);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("isomorphic: true"), std::string::npos);
}

TEST_F(Cli, DemoCyclic) {
  const auto r = run("demo-cyclic");
  EXPECT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["graphs_isomorphic"], true);
  EXPECT_EQ(j["lattices_isomorphic"], false);
}

TEST_F(Cli, InvalidInputExitsTwo) {
  std::ofstream(file("bad.json")) << R"({"n_vertices": 3, "facets": [[0,1],[0,1]]})";
  const auto r = run("lattice " + file("bad.json").string());
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run("generate dodecahedron").code, 2);
  EXPECT_EQ(run("lattice " + file("missing.json").string()).code, 2);
}

TEST_F(Cli, NotRecognizedExitsOne) {
  // K5 is 4-regular but no capped 3-polytope has it as dual graph.
  std::ofstream(file("k5.json"))
      << R"({"n_nodes": 5, "edges": [[0,1],[0,2],[0,3],[0,4],[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]})";
  const auto r = run("reconstruct-capped " + file("k5.json").string());
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("not recognized as capped"), std::string::npos);
}

TEST_F(Cli, RepeatedRunsAreByteIdentical) {
  const auto a = run("generate capped 3 4 --seed 99");
  const auto b = run("generate capped 3 4 --seed 99");
  EXPECT_EQ(a.out, b.out);
  std::ofstream(file("s.json")) << a.out;
  ASSERT_EQ(run("graph " + file("s.json").string() + " -o " + file("g.json").string()).code, 0);
  ASSERT_EQ(run("labels " + file("s.json").string() + " -o " + file("l.json").string()).code, 0);
  const auto x = run("dualgraph " + file("s.json").string());
  const auto y = run("dualgraph " + file("s.json").string());
  EXPECT_EQ(x.out, y.out);
}

}  // namespace
