#include "signhom/chromatic.hpp"

#include <gtest/gtest.h>

#include "signhom/constructions.hpp"
#include "test_util.hpp"

namespace signhom {
namespace {

using testing::cycle;
using testing::path;

TEST(CompleteTargets, CountsMatchKnownSequences) {
  // Complete 2-edge-colored graphs up to isomorphism = simple graphs.
  const std::size_t graphs[] = {1, 2, 4, 11, 34, 156};
  // Up to switching as well = two-graphs (Seidel switching classes).
  const std::size_t two_graphs[] = {1, 1, 2, 3, 7, 16};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(complete_targets_2ec(n).size(), graphs[n - 1]) << n;
    EXPECT_EQ(complete_targets_signed(n).size(), two_graphs[n - 1]) << n;
  }
  for (const auto& t : complete_targets_signed(5)) {
    EXPECT_TRUE(t.is_complete());
    for (int v = 1; v < 5; ++v) EXPECT_EQ(t.sign(0, v), Sign::kPositive);
  }
  EXPECT_THROW(complete_targets_2ec(7), Error);
}

TEST(Chromatic2ec, Examples) {
  EXPECT_EQ(chromatic_2ec(path("+")).value, 2);
  EXPECT_EQ(chromatic_2ec(disjoint_union(path("+"), path("-"))).value, 3);
  EXPECT_EQ(chromatic_2ec(SignedGraph(0)).value, 0);
  EXPECT_EQ(chromatic_2ec(SignedGraph(3)).value, 1);
  const SignedGraph c6 = cycle("+-+-+-");
  const auto r = chromatic_2ec(c6);
  ASSERT_EQ(r.value, 5);
  ASSERT_EQ(r.per_order_log.size(), 5u);
  for (int i = 0; i < 4; ++i) {
    EXPECT_FALSE(r.per_order_log[i].found);
    EXPECT_EQ(r.per_order_log[i].targets_tested,
              static_cast<int>(complete_targets_2ec(i + 1).size()));
  }
  EXPECT_TRUE(verify_hom(c6, r.target, r.hom));
  EXPECT_EQ(r.target.order(), 5);
}

TEST(Chromatic2ec, CliquesNeedAllTheirVertices) {
  EXPECT_EQ(chromatic_2ec(cycle("+-+-")).value, 4);
  EXPECT_EQ(chromatic_2ec(make_complete(5, Sign::kPositive)).value, 5);
}

TEST(Chromatic2ec, ReportsFailureBeyondMaxOrder) {
  const auto r = chromatic_2ec(cycle("+-+-+-"), 4);
  EXPECT_FALSE(r.value.has_value());
  EXPECT_EQ(r.per_order_log.size(), 4u);
  EXPECT_THROW(chromatic_2ec(cycle("+++"), 7), Error);
}

TEST(ChromaticSigned, Examples) {
  EXPECT_EQ(chromatic_signed(path("+-+-")).value, 2);
  EXPECT_EQ(chromatic_signed(path("---")).value, 2);
  EXPECT_EQ(chromatic_signed(SignedGraph(1)).value, 1);
  EXPECT_EQ(chromatic_signed(SignedGraph(0)).value, 0);
  EXPECT_EQ(chromatic_signed(cycle("----")).value, 2);
  EXPECT_EQ(chromatic_signed(cycle("+++-")).value, 4);
  EXPECT_EQ(chromatic_signed(cycle("+++")).value, 3);
  const SignedGraph clique6 = build_gadget(GadgetId::kClique6).graph;
  const auto r = chromatic_signed(clique6);
  ASSERT_EQ(r.value, 6);
  EXPECT_FALSE(r.per_order_log[4].found);
  EXPECT_EQ(r.per_order_log[4].targets_tested, 7);
  EXPECT_TRUE(verify_hom(clique6, r.target, r.hom));
}

}  // namespace
}  // namespace signhom
