#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include <unistd.h>

#include "helpers.hpp"
#include "sigcolor/cli.hpp"
#include "sigcolor/generators.hpp"
#include "sigcolor/io.hpp"
#include "sigcolor/linegraph.hpp"
#include "sigcolor/vizing.hpp"

using namespace sigcolor;
using testing_support::graph;
using testing_support::N;
using testing_support::P;
namespace fs = std::filesystem;

namespace {

int parse_error_line(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no parse error for: " << text;
  return -1;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sigcolor_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string put(const std::string& name, const std::string& text) {
    const std::string p = (dir_ / name).string();
    write_file(p, text);
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }
  std::string out() const { return out_.str(); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

}  // namespace

TEST(ParseGraph, Examples) {
  const SignedGraph one = parse_graph("p sg 2 1\ne 1 2 -\n");
  EXPECT_EQ(one, graph(2, {{0, 1, N}}));
  const SignedGraph tri = parse_graph("# triangle\np sg 3 3\ne 1 2 -\ne 1 3 -\n\ne 2 3 -\n");
  EXPECT_EQ(tri, complete_graph(3, N));
  EXPECT_EQ(parse_graph("p sg 2 1\ne 2 1 +  # comment\n"), graph(2, {{1, 0, P}}));
}

TEST(ParseGraph, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("p sg 2 1\ne 1 1 +\n"), 2);
  EXPECT_EQ(parse_error_line("p sg 3 2\ne 1 2 +\ne 2 1 -\n"), 3);
  EXPECT_EQ(parse_error_line("p sg 2 1\ne 1 2 x\n"), 2);
  EXPECT_EQ(parse_error_line("p sg 2 1\ne 1 3 +\n"), 2);
  EXPECT_EQ(parse_error_line("# c\nq sg 2 1\n"), 2);
  EXPECT_EQ(parse_error_line("p sg 2 two\n"), 1);
  EXPECT_EQ(parse_error_line("p sg 3 2\ne 1 2 +\n"), 0);  // too few edge lines
  EXPECT_EQ(parse_error_line("p sg 3 1\ne 1 2 +\ne 2 3 +\n"), 3);
  EXPECT_EQ(parse_error_line("e 1 2 +\n"), 1);
  EXPECT_EQ(parse_error_line(""), 0);
}

TEST(ParseGraph, UnsignedInput) {
  const SignedGraph g = parse_graph("p sg 3 2\ne 1 2\ne 2 3 +\n", {true});
  EXPECT_EQ(g, path_graph(3, N));
  EXPECT_THROW(parse_graph("p sg 3 2\ne 1 2\ne 2 3 +\n"), ParseError);
}

TEST(GraphText, RoundTrip) {
  std::mt19937_64 rng(81);
  for (int i = 0; i < 100; ++i) {
    const SignedGraph g = random_signed_graph(1 + rng() % 12, 0.4, rng);
    EXPECT_EQ(parse_graph(emit_graph(g)), g);
  }
}

TEST(ColoringText, EdgeLawVisibleInFile) {
  const SignedGraph g = graph(3, {{0, 1, P}, {1, 2, N}});
  const EdgeColoring c(3, {{{1, -1}}, {{0, 0}}});
  EXPECT_EQ(emit_coloring(c), "s chi 3\nc 1 1 -1\nc 2 0 0\n");
  EXPECT_EQ(parse_coloring(emit_coloring(c), g), c);
}

TEST(ColoringText, RoundTripOnRandomColorings) {
  std::mt19937_64 rng(82);
  for (int i = 0; i < 100; ++i) {
    const SignedGraph g = random_signed_graph(2 + rng() % 12, 0.4, rng);
    const EdgeColoring c = color(g);
    const std::string text = emit_coloring(c);
    EXPECT_EQ(parse_coloring(text, g), c);
    EXPECT_EQ(emit_coloring(parse_coloring(text, g)), text);
  }
}

TEST(ColoringText, Errors) {
  const SignedGraph g = graph(3, {{0, 1, P}, {1, 2, N}});
  EXPECT_THROW(parse_coloring("s chi 3\nc 1 1 -1\n", g), ParseError);            // missing edge
  EXPECT_THROW(parse_coloring("s chi 3\nc 1 1 -1\nc 1 1 -1\nc 2 0 0\n", g), ParseError);
  EXPECT_THROW(parse_coloring("s chi 3\nc 1 2 -2\nc 2 0 0\n", g), ParseError);  // outside M_3
  EXPECT_THROW(parse_coloring("s chi 3\nc 3 0 0\n", g), ParseError);
  EXPECT_THROW(parse_coloring("c 1 1 -1\n", g), ParseError);
  // The edge law is not a parse matter.
  EXPECT_NO_THROW(parse_coloring("s chi 3\nc 1 1 1\nc 2 0 0\n", g));
}

TEST_F(CliTest, ColorThenVerifyPetersen) {
  const std::string g = put("petersen_allneg.sg", emit_graph(petersen_graph(N)));
  EXPECT_EQ(run({"color", g, "-o", path("p.col")}), cli::kOk);
  EXPECT_NE(out().find("colors_used 4"), std::string::npos);
  EXPECT_EQ(run({"verify", g, path("p.col")}), cli::kOk);
  EXPECT_NE(out().find("verdict proper"), std::string::npos);
  // To stdout the artifact comes first and the report is commented out.
  EXPECT_EQ(run({"color", g}), cli::kOk);
  EXPECT_EQ(out().rfind("s chi 4\n", 0), 0u);
  EXPECT_NE(out().find("# colors_used 4"), std::string::npos);
}

TEST_F(CliTest, ClassRatioOutputs) {
  const std::string k33 = put("k33.g", emit_graph(complete_bipartite(3, 3)));
  EXPECT_EQ(run({"class-ratio", k33}), cli::kOk);
  EXPECT_NE(out().find("class_ratio 512/512"), std::string::npos);
  const std::string c5 = put("c5.g", "p sg 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n");
  EXPECT_EQ(run({"class-ratio", "--unsigned", c5}), cli::kOk);
  EXPECT_NE(out().find("class_ratio 16/32"), std::string::npos);
  EXPECT_NE(out().find("reduced 1/2"), std::string::npos);
  EXPECT_EQ(run({"class-ratio", "--unsigned", "--mode", "switching", "--jobs", "2", c5}),
            cli::kOk);
  EXPECT_NE(out().find("class_ratio 16/32"), std::string::npos);
  EXPECT_EQ(run({"class-ratio", c5}), cli::kUsage);  // signs missing without --unsigned
}

TEST_F(CliTest, VerifyExitCodesAndWitness) {
  const std::string g = put("p3.g", "p sg 3 2\ne 1 2 -\ne 2 3 -\n");
  const std::string improper = put("bad.col", "s chi 3\nc 1 1 1\nc 2 1 1\n");
  EXPECT_EQ(run({"verify", g, improper, "--emit-witness"}), cli::kImproper);
  EXPECT_NE(out().find("verdict improper"), std::string::npos);
  EXPECT_NE(out().find("witness_vertex 2"), std::string::npos);
  EXPECT_NE(out().find("witness_color 1"), std::string::npos);
  const std::string law = put("law.col", "s chi 3\nc 1 1 -1\nc 2 0 0\n");
  EXPECT_EQ(run({"verify", g, law}), cli::kInvalidEdgeLaw);
  EXPECT_NE(out().find("verdict invalid_edge_law"), std::string::npos);
}

TEST_F(CliTest, UsageAndSizeGuard) {
  EXPECT_EQ(run({}), cli::kUsage);
  EXPECT_EQ(run({"paint"}), cli::kUsage);
  EXPECT_EQ(run({"color"}), cli::kUsage);
  EXPECT_EQ(run({"color", path("missing.g")}), cli::kUsage);
  EXPECT_EQ(run({"--help"}), cli::kOk);
  const std::string big = put("k7.g", emit_graph(complete_graph(7)));
  EXPECT_EQ(run({"class", big}), cli::kSizeGuard);
  EXPECT_EQ(run({"class-ratio", big}), cli::kSizeGuard);
  EXPECT_EQ(run({"extras", big}), cli::kSizeGuard);
  EXPECT_NE(out().find("chi_total size_guard"), std::string::npos);
}

TEST_F(CliTest, SeedDeterminism) {
  std::mt19937_64 rng(83);
  const std::string g = put("r.g", emit_graph(random_signed_graph(20, 0.3, rng)));
  ASSERT_EQ(run({"color", g, "--seed", "7"}), cli::kOk);
  const std::string first = out();
  ASSERT_EQ(run({"color", g, "--seed", "7"}), cli::kOk);
  EXPECT_EQ(out(), first);
  ASSERT_EQ(run({"color", g}), cli::kOk);
  const std::string plain = out();
  ASSERT_EQ(run({"color", g}), cli::kOk);
  EXPECT_EQ(out(), plain);
}

TEST_F(CliTest, ClassAndExactAndFrustration) {
  const std::string k5 = put("k5.g", emit_graph(complete_graph(5, N)));
  EXPECT_EQ(run({"class", k5}), cli::kOk);
  EXPECT_NE(out().find("chromatic_index 5"), std::string::npos);
  EXPECT_NE(out().find("class class2"), std::string::npos);
  const std::string c6 = put("c6.g", emit_graph(cycle_graph(6, P)));
  EXPECT_EQ(run({"color-exact", c6, "-o", path("c6.col")}), cli::kOk);
  EXPECT_NE(out().find("chromatic_index 2"), std::string::npos);
  EXPECT_EQ(run({"verify", c6, path("c6.col")}), cli::kOk);
  EXPECT_EQ(run({"frustration", k5}), cli::kOk);
  EXPECT_NE(out().find("balanced no"), std::string::npos);
  EXPECT_NE(out().find("antibalanced yes"), std::string::npos);
}

TEST_F(CliTest, SwitchAndLineGraph) {
  const SignedGraph tri = complete_graph(3, N);
  const std::string g = put("t.g", emit_graph(tri));
  ASSERT_EQ(run({"color", g, "-o", path("t.col")}), cli::kOk);
  ASSERT_EQ(run({"switch", g, "--set", "1", "-o", path("s.g"), "--coloring", path("t.col"),
                 "--coloring-output", path("s.col")}),
            cli::kOk);
  const Vertex x[] = {0};
  EXPECT_EQ(parse_graph(read_file(path("s.g"))), switch_vertices(tri, x));
  EXPECT_EQ(run({"verify", path("s.g"), path("s.col")}), cli::kOk);
  EXPECT_EQ(run({"switch", g, "--set", "4"}), cli::kUsage);

  ASSERT_EQ(run({"linegraph", g, "-o", path("l.g")}), cli::kOk);
  EXPECT_EQ(parse_graph(read_file(path("l.g"))), line_graph(tri));
  EXPECT_NE(out().find("line_edges 3"), std::string::npos);
}

TEST_F(CliTest, ExtrasReport) {
  const std::string g = put("c4.g", emit_graph(cycle_graph(4, N)));
  EXPECT_EQ(run({"extras", g}), cli::kOk);
  for (const char* key : {"completely_reversible", "chi_R 4", "linear_arboricity 2",
                          "chi_A 2", "chi_total ", "chi_total_twisted "}) {
    EXPECT_NE(out().find(key), std::string::npos) << key;
  }
}
