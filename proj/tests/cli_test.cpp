#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Result run(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const auto dir = fs::temp_directory_path();
  const auto tag = std::to_string(::getpid()) + "_" + std::to_string(counter++);
  const auto out = dir / ("sopfault_cli_out_" + tag);
  const auto err = dir / ("sopfault_cli_err_" + tag);
  const std::string cmd =
      env + " " + SOPFAULT_CLI + " " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  Result r{WEXITSTATUS(status), slurp(out), slurp(err)};
  fs::remove(out);
  fs::remove(err);
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Cli, DictCsv) {
  const auto r = run("dict \"ab + c\" --format csv");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 9u);
  EXPECT_EQ(l[0], "x1,x2,x3,z,f0,f1,f2,f3,f4,f5");
  EXPECT_EQ(l[1], "0,0,0,0,0,0,0,0,1,0");
}

TEST(Cli, DictSingleVariable) {
  const auto r = run("dict a");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 3u);
}

TEST(Cli, ParseErrorsExitNonzero) {
  const auto r = run("dict aa");
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.err.find("DuplicateVariableInTerm"), std::string::npos);
}

TEST(Cli, MaxVarsFromEnvironmentAndFlag) {
  EXPECT_NE(run("dict abc", "SOPFAULT_MAX_VARS=2").err.find("TooManyVariables"), std::string::npos);
  EXPECT_EQ(run("dict abc").code, 0);
  EXPECT_NE(run("dict abc --max-vars 2").code, 0);
}

TEST(Cli, WrongFormatRejected) { EXPECT_NE(run("tree ab --format csv").code, 0); }

TEST(Cli, MinimizeIsByteIdentical) {
  const auto a = run("minimize \"ab'c + d'e + bf\"");
  const auto b = run("minimize \"ab'c + d'e + bf\" --jobs 4");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("elapsed"), std::string::npos);
  EXPECT_NE(run("minimize ab --timing").out.find("elapsed_seconds"), std::string::npos);
}

TEST(Cli, MinimizePercentageSelfConsistent) {
  const auto r = run("minimize \"ab + c\" --format text");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("minimized tests (b): 4"), std::string::npos);
  EXPECT_NE(r.out.find("minimization: 50.0%"), std::string::npos);
}

TEST(Cli, TreeDotShape) {
  const auto r = run("tree \"ab + c\"");
  ASSERT_EQ(r.code, 0);
  const std::regex node_re(R"re(  n(\d+) \[label="([^"]+)", shape=(box|ellipse)\];)re");
  const std::regex edge_re(R"re(  n(\d+) -> n(\d+) \[label="([01])"\];)re");
  std::map<int, std::string> labels;
  std::map<int, std::map<std::string, int>> edges;
  int leaves = 0;
  for (const auto& line : lines(r.out)) {
    std::smatch m;
    if (std::regex_match(line, m, node_re)) {
      labels[std::stoi(m[1])] = m[2];
      if (m[3] == "ellipse") ++leaves;
    } else if (std::regex_match(line, m, edge_re)) {
      EXPECT_EQ(edges[std::stoi(m[1])].count(m[3]), 0u);
      edges[std::stoi(m[1])][m[3]] = std::stoi(m[2]);
    }
  }
  EXPECT_EQ(leaves, 7);
  for (const auto& [node, out] : edges) {
    EXPECT_EQ(out.size(), 2u);
    EXPECT_EQ(labels[node][0], 'T');
  }
  int at = 0;
  while (edges.count(at)) at = edges[at]["0"];
  EXPECT_EQ(labels[at], "OK");
}

TEST(Cli, SimulateNone) {
  const auto r = run("simulate \"ab + c\" --fault NONE");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("diagnosis: OK"), std::string::npos);
  EXPECT_EQ(r.out.find("-> 1"), std::string::npos);
}

TEST(Cli, SimulateEveryFault) {
  for (int id = 0; id < 12; ++id) {
    const auto r = run("simulate \"ab + c\" --fault " + std::to_string(id));
    EXPECT_EQ(r.code, 0) << id << r.err;
  }
  // Faults 0, 2 and 6 share a class.
  const auto strip = [](const std::string& s) { return s.substr(s.find('\n')); };
  EXPECT_EQ(strip(run("simulate \"ab + c\" --fault 0").out), strip(run("simulate \"ab + c\" --fault 6").out));
  EXPECT_EQ(strip(run("simulate \"ab + c\" --fault 0").out), strip(run("simulate \"ab + c\" --fault 2").out));
}

TEST(Cli, SimulateUnknownFault) {
  EXPECT_NE(run("simulate \"ab + c\" --fault 12").err.find("UnknownFaultId"), std::string::npos);
  EXPECT_NE(run("simulate \"ab + c\" --fault x").code, 0);
}

TEST(Cli, SimulateUndetectableEndsOk) {
  // out s-a-1 on a tautology is id 5.
  const auto r = run("simulate \"a + a'\" --fault 5");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("diagnosis: OK"), std::string::npos);
}

TEST(Cli, Verify) {
  const auto r = run("verify \"ab + c\"");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("heuristic_valid: true"), std::string::npos);
  EXPECT_NE(r.out.find("gap: 0"), std::string::npos);
  EXPECT_NE(run("verify \"ab + c\" --oracle-max-rows 3").code, 0);
}

TEST(Cli, GenDeterministicAndReparses) {
  const auto a = run("gen --seed 77 --vars 6 --terms 4 --min-literals 1 --max-literals 3");
  const auto b = run("gen --seed 77 --vars 6 --terms 4 --min-literals 1 --max-literals 3");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto path = fs::temp_directory_path() / "sopfault_cli_gen.sop";
  ASSERT_EQ(run("gen --seed 77 --vars 6 --terms 4 -o " + path.string()).code, 0);
  EXPECT_EQ(run("minimize -f " + path.string()).code, 0);
  fs::remove(path);
  EXPECT_NE(run("gen --vars 3").code, 0);  // seed is mandatory
  const auto single = run("gen --seed 3 --terms 1 --min-literals 1 --max-literals 1");
  EXPECT_TRUE(std::regex_match(lines(single.out).back(), std::regex("[a-z]'?")));
}

TEST(Cli, BenchEmptyDirectory) {
  const auto dir = fs::temp_directory_path() / "sopfault_cli_bench_empty";
  fs::create_directories(dir);
  const auto r = run("bench " + dir.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "circuit,n,a,faults_raw,fault_classes,b,elapsed_seconds,percentage\n");
  fs::remove_all(dir);
}

}  // namespace
