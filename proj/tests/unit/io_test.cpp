#include "signhom/io.hpp"

#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "signhom/generate.hpp"
#include "test_util.hpp"

namespace signhom {
namespace {

TEST(Io, ParsesCommentsNamesAndBlankLines) {
  const SignedGraph g = read_sg(
      "# a triangle\n"
      "# name: tri\n"
      "sg 3\n"
      "\n"
      "0 1 +\n"
      "1 2 -\n"
      "0 2 +\n");
  EXPECT_EQ(g.name(), "tri");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.sign(1, 2), Sign::kNegative);
}

TEST(Io, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const SignedGraph g = random_signed_graph(1 + i % 12, 0.4, rng).with_name("r");
    const SignedGraph back = read_sg(write_sg(g));
    EXPECT_EQ(back.order(), g.order());
    EXPECT_EQ(back.edges(), g.edges());
    EXPECT_EQ(back.name(), "r");
  }
}

int error_line(std::string_view text) {
  try {
    read_sg(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(Io, ReportsTheOffendingLine) {
  EXPECT_EQ(error_line("0 1 +\n"), 1);              // missing header
  EXPECT_EQ(error_line("sg 3\n0 1 *\n"), 2);        // bad sign
  EXPECT_EQ(error_line("sg 3\n0 1 +\n0 3 +\n"), 3); // out of range
  EXPECT_EQ(error_line("sg 3\n0 1 +\n1 0 -\n"), 3); // duplicate
  EXPECT_EQ(error_line("sg 3\n1 1 +\n"), 2);        // loop
  EXPECT_EQ(error_line("sg x\n"), 1);
}

TEST(Io, SavesAndLoadsFiles) {
  const auto path = std::filesystem::temp_directory_path() / "signhom_io_test.sg";
  const SignedGraph g = testing::cycle("+-+-");
  save_sg(path, g);
  EXPECT_EQ(load_sg(path).edges(), g.edges());
  std::filesystem::remove(path);
  EXPECT_THROW(load_sg(path), Error);
}

TEST(Io, DotUsesDashedNegativeEdges) {
  const std::string dot = export_dot(testing::path("+-").with_name("p"));
  EXPECT_NE(dot.find("0 -- 1 [style=solid];"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2 [style=dashed];"), std::string::npos);
  EXPECT_EQ(export_dot(SignedGraph(0)), "graph { }\n");
}

}  // namespace
}  // namespace signhom
