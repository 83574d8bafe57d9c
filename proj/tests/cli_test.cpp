#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

namespace sofic {
namespace {

using testing::data_path;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scratch_file(const std::string &name, const std::string &text) {
  const auto path = std::filesystem::temp_directory_path() /
                    ("sofic_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

TEST(Cli, CoverEvenShift) {
  const auto r = run({"cover", data_path("even")});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out.rfind("classes: 3\n", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("edges: 5\n"), std::string::npos);
  EXPECT_NE(r.out.find("E1 -1-> E1\nE1 -0-> E2\nE1 -1-> E3\nE2 -0-> E1\n"
                       "E3 -0-> E3\n"),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("E3 representative (0)^∞"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("stabilization level: 2"), std::string::npos);
}

TEST(Cli, CoverFullShiftAndDot) {
  const auto dot = scratch_file("full2.dot", "");
  const auto r = run({"cover", data_path("full2"), "--dot", dot});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out.rfind("classes: 1\n", 0), 0u);
  EXPECT_NE(r.out.find("edges: 2\n"), std::string::npos);
  std::ifstream in(dot);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  EXPECT_NE(text.find("digraph"), std::string::npos);
  EXPECT_NE(text.find("E1 -> E1 [label=\"1\"]"), std::string::npos);
}

TEST(Cli, Matrix) {
  EXPECT_EQ(run({"matrix", data_path("full2")}).out, "1 1\n1 1\n");
  const auto golden = run({"matrix", data_path("golden")});
  EXPECT_EQ(golden.code, cli::kOk);
  EXPECT_EQ(std::count(golden.out.begin(), golden.out.end(), '\n'), 3);
  const auto even = run({"matrix", data_path("even")});
  EXPECT_EQ(std::count(even.out.begin(), even.out.end(), '\n'), 5);
}

TEST(Cli, Verify) {
  for (const auto &name : {"even", "golden"}) {
    const auto r = run({"verify", data_path(name)});
    EXPECT_EQ(r.code, cli::kOk) << r.out;
    EXPECT_NE(r.out.find("families=8 failed=0"), std::string::npos);
  }
  const auto shallow =
      run({"--max-word-len", "3", "verify", data_path("even")});
  EXPECT_EQ(shallow.code, cli::kOk);
  const auto local = run({"verify", data_path("even"), "--max-word-len", "3"});
  EXPECT_EQ(local.out, shallow.out);
}

TEST(Cli, VerifyCorruptedCover) {
  const auto r = run({"verify", data_path("even"), "--inject-fault",
                      "reassign-range"});
  EXPECT_EQ(r.code, cli::kCheckFailed);
  EXPECT_NE(r.out.find("FAIL "), std::string::npos);
  EXPECT_EQ(run({"verify", data_path("even"), "--inject-fault", "bogus"}).code,
            cli::kInputError);
}

TEST(Cli, KTheory) {
  EXPECT_EQ(run({"ktheory", data_path("full3")}).out, "K0 = Z/2, K1 = 0\n");
  EXPECT_EQ(run({"ktheory", data_path("even")}).out, "K0 = Z, K1 = Z\n");
  EXPECT_EQ(run({"ktheory", data_path("full2")}).out, "K0 = 0, K1 = 0\n");
}

TEST(Cli, Oracle) {
  EXPECT_EQ(run({"oracle", data_path("even"), "--bound", "6"}).out,
            "3 sets via both methods\n");
  EXPECT_EQ(run({"oracle", data_path("golden"), "--bound", "6"}).out,
            "2 sets via both methods\n");
  const auto one = run({"oracle", data_path("full2"), "--bound", "1"});
  EXPECT_EQ(one.code, cli::kOk);
  EXPECT_EQ(one.out, "1 set via both methods\n");
}

TEST(Cli, Words) {
  EXPECT_EQ(run({"words", data_path("golden"), "-k", "2"}).out, "00\n01\n10\n");
  EXPECT_EQ(run({"words", data_path("even"), "-k", "0"}).out, "ε\n");
}

TEST(Cli, InputErrors) {
  const auto bad = scratch_file("bad.sofic",
                                "alphabet 0 1\nvertex a\nedge a c 0\n");
  for (const auto &cmd : {"cover", "matrix", "verify", "ktheory", "oracle"}) {
    const auto r = run({cmd, bad});
    EXPECT_EQ(r.code, cli::kInputError) << cmd;
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  }
  EXPECT_EQ(run({"words", bad, "-k", "2"}).code, cli::kInputError);
  EXPECT_EQ(run({"cover", "/nonexistent/file.sofic"}).code, cli::kInputError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(run({}).code, cli::kInputError);
  EXPECT_EQ(run({"words", data_path("even")}).code, cli::kInputError);

  const auto empty = scratch_file("empty.sofic",
                                  "alphabet 0\nvertex a\nvertex b\nedge a b 0\n");
  const auto r = run({"cover", empty});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_NE(r.err.find("empty shift"), std::string::npos);
}

TEST(Cli, Deterministic) {
  for (const auto &cmd : {"cover", "matrix", "verify", "ktheory"})
    EXPECT_EQ(run({cmd, data_path("even_to_golden")}).out,
              run({cmd, data_path("even_to_golden")}).out);
}

} // namespace
} // namespace sofic
