#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "fixtures.hpp"
#include "rvc/generators.hpp"
#include "rvc/graph_io.hpp"
#include "rvc/records.hpp"
#include "rvc/verification.hpp"

namespace rvc {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rvc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& contents) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << contents;
    return p.string();
  }
  std::string graph_file(const std::string& name, const Graph& g) { return file(name, serialize_graph(g)); }

  static Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  static std::string line_value(const std::string& text, const std::string& key) {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
      if (line.rfind(key + " ", 0) == 0) return line.substr(key.size() + 1);
    return "<missing>";
  }

  fs::path dir_;
};

TEST_F(Cli, DecomposeEars) {
  auto r = run({"decompose", graph_file("theta.txt", fixtures::theta()), "--ears"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(line_value(r.out, "t"), "1");
  std::istringstream in(line_value(r.out, "initial_cycle"));
  EXPECT_EQ(std::distance(std::istream_iterator<int>(in), std::istream_iterator<int>()), 6);
}

TEST_F(Cli, DecomposeBlocks) {
  const std::string path = graph_file("bowtie.txt", fixtures::bowtie());
  auto r = run({"decompose", path, "--blocks"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(line_value(r.out, "blocks"), "2");
  EXPECT_EQ(line_value(r.out, "cut_vertices"), "2");
  EXPECT_EQ(line_value(r.out, "t"), "1");

  EXPECT_EQ(run({"decompose", path, "--ears"}).code, cli::kPrecondition);
  EXPECT_EQ(run({"decompose", path}).code, cli::kParseError);
  EXPECT_EQ(run({"decompose", path, "--ears", "--blocks"}).code, cli::kParseError);
}

TEST_F(Cli, Color) {
  auto c14 = run({"color", graph_file("c14.txt", make_cycle(14))});
  ASSERT_EQ(c14.code, cli::kOk) << c14.err;
  EXPECT_EQ(line_value(c14.out, "count"), "7");
  EXPECT_EQ(line_value(c14.out, "provenance"), "cycle");

  auto bowtie = run({"color", graph_file("bowtie.txt", fixtures::bowtie())});
  ASSERT_EQ(bowtie.code, cli::kOk) << bowtie.err;
  EXPECT_EQ(line_value(bowtie.out, "count"), "1");

  auto k4 = run({"color", graph_file("k4.txt", make_complete(4)), "--method", "two-connected"});
  ASSERT_EQ(k4.code, cli::kOk) << k4.err;
  EXPECT_EQ(line_value(k4.out, "count"), "0");

  EXPECT_EQ(run({"color", graph_file("p4.txt", make_path(4)), "--method", "cycle"}).code, cli::kPrecondition);
  EXPECT_EQ(run({"color", graph_file("split.txt", fixtures::graph_of(4, {{0, 1}, {2, 3}}))}).code,
            cli::kPrecondition);
  EXPECT_EQ(run({"color", file("bad.txt", "3\n0 x\n")}).code, cli::kParseError);
  EXPECT_EQ(run({"color", (dir_ / "missing.txt").string()}).code, cli::kParseError);
}

TEST_F(Cli, ColorOutputReverifies) {
  const std::string g = graph_file("g.txt", fixtures::two_cycles(6));
  auto colored = run({"color", g});
  ASSERT_EQ(colored.code, cli::kOk) << colored.err;
  auto verified = run({"verify", g, file("c.txt", colored.out)});
  EXPECT_EQ(verified.code, cli::kOk) << verified.err;
  EXPECT_EQ(line_value(verified.out, "status"), "verified");
}

TEST_F(Cli, Verify) {
  const std::string c14 = graph_file("c14.txt", make_cycle(14));
  auto ok = run({"verify", c14, file("wrap.txt", "0 1 2 3 4 5 6 0 1 2 3 4 5 6\n"), "--witnesses"});
  EXPECT_EQ(ok.code, cli::kOk) << ok.err;
  EXPECT_NE(ok.out.find("witness 0 7 :"), std::string::npos);

  auto bad = run({"verify", graph_file("c7.txt", make_cycle(7)), file("two.txt", "0 1 0 1 0 1 0\n")});
  EXPECT_EQ(bad.code, cli::kCounterexample);
  EXPECT_EQ(line_value(bad.out, "status"), "counterexample");
  EXPECT_NE(bad.err.find("no rainbow path"), std::string::npos);

  EXPECT_EQ(run({"verify", graph_file("c5.txt", make_cycle(5)), file("short.txt", "0 1 2 3\n")}).code,
            cli::kParseError);
  EXPECT_EQ(run({"verify", c14, file("junk.txt", "0 1 q\n")}).code, cli::kParseError);
}

TEST_F(Cli, VerifyBudgetIsInconclusive) {
  std::string zeros;
  for (int i = 0; i < 14; ++i) zeros += "0 ";
  auto r = run({"verify", graph_file("c14.txt", make_cycle(14)), file("z.txt", zeros), "--node-budget", "1"});
  EXPECT_EQ(r.code, cli::kInconclusive) << r.err;
}

TEST_F(Cli, Exact) {
  auto c9 = run({"exact", graph_file("c9.txt", make_cycle(9))});
  ASSERT_EQ(c9.code, cli::kOk) << c9.err;
  EXPECT_EQ(line_value(c9.out, "value"), "3");
  EXPECT_EQ(line_value(c9.out, "mode"), "rainbow");
  EXPECT_EQ(c9.out.find("elapsed_ms"), std::string::npos);

  auto k5 = run({"exact", graph_file("k5.txt", make_complete(5))});
  EXPECT_EQ(line_value(k5.out, "value"), "0");

  const std::string c12 = graph_file("c12.txt", make_cycle(12));
  EXPECT_EQ(run({"exact", c12}).code, cli::kPrecondition);
  auto raised = run({"exact", c12, "--max-n", "12"});
  ASSERT_EQ(raised.code, cli::kOk) << raised.err;
  EXPECT_EQ(line_value(raised.out, "value"), "5");

  auto starved = run({"exact", graph_file("c10.txt", make_cycle(10)), "--seed-budget", "5"});
  EXPECT_EQ(starved.code, cli::kPrecondition);
  EXPECT_NE(starved.err.find("--node-budget"), std::string::npos);

  auto timed = run({"--timings", "exact", graph_file("c5.txt", make_cycle(5)), "--revised"});
  EXPECT_EQ(line_value(timed.out, "mode"), "revised");
  EXPECT_NE(timed.out.find("elapsed_ms"), std::string::npos);
}

TEST_F(Cli, Table) {
  auto full = run({"table", "--max-exact-n", "9", "--max-n", "40"});
  ASSERT_EQ(full.code, cli::kOk) << full.err;
  EXPECT_NE(full.out.find("\n9 3 yes 3 3 yes\n"), std::string::npos);
  EXPECT_NE(full.out.find("\n40 20 yes - 20 yes\n"), std::string::npos);

  auto single = run({"table", "--max-n", "3"});
  ASSERT_EQ(single.code, cli::kOk);
  EXPECT_NE(single.out.find("n constructed verified exact closed_form agrees\n3 0 yes 0 0 yes\n"), std::string::npos);
  EXPECT_EQ(run({"table", "--max-n", "2"}).code, cli::kPrecondition);
}

TEST_F(Cli, Generate) {
  auto a = run({"generate", "--kind", "ear-built", "-n", "18", "--extra", "3", "--seed", "9"});
  ASSERT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, run({"generate", "--kind", "ear-built", "-n", "18", "--extra", "3", "--seed", "9"}).out);
  const Graph g = parse_graph(a.out).graph;
  EXPECT_EQ(g.vertex_count(), 18);
  EXPECT_EQ(run({"generate", "--kind", "triangle"}).code, cli::kParseError);
}

TEST_F(Cli, RepeatedRunsAreByteIdentical) {
  const std::string g = graph_file("g.txt", random_2connected(20, 5, 3));
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"color", g}, {"--format", "structured", "color", g}, {"decompose", g, "--ears"}}) {
    auto first = run(args);
    auto second = run(args);
    ASSERT_EQ(first.code, cli::kOk) << first.err;
    EXPECT_EQ(first.out, second.out);
  }
}

TEST_F(Cli, StructuredFormat) {
  const std::string path = graph_file("c6.txt", make_cycle(6));
  auto r = run({"--format", "structured", "color", path, "--method", "cycle"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["coloring"]["reported_count"], 2);
  EXPECT_EQ(j["report"]["input_digest"], input_digest(serialize_graph(make_cycle(6))));
  EXPECT_EQ(j["report"]["parameters"]["method"], "cycle");

  auto v = run({"verify", path, file("c.json", r.out)});
  EXPECT_EQ(v.code, cli::kOk) << v.err;
  EXPECT_EQ(run({"--format", "xml", "color", path}).code, cli::kParseError);
}

TEST_F(Cli, Help) {
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
  EXPECT_EQ(run({}).code, cli::kParseError);
}

}  // namespace
}  // namespace rvc
