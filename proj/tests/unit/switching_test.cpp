#include "signhom/switching.hpp"

#include <random>

#include <gtest/gtest.h>

#include "signhom/generate.hpp"
#include "test_util.hpp"

namespace signhom {
namespace {

using testing::cycle;
using testing::subset;

// Independent oracle: try every switch set.
bool brute_force_equivalent(const SignedGraph& a, const SignedGraph& b) {
  for (unsigned s = 0; s < (1u << a.order()); ++s) {
    if (switch_vertices(a, subset(s, a.order())).edges() == b.edges()) return true;
  }
  return false;
}

TEST(Switching, FlipsExactlyTheCut) {
  const SignedGraph g = cycle("++++");
  const SignedGraph h = switch_vertices(g, SwitchSet({0}));
  EXPECT_EQ(h.sign(0, 1), Sign::kNegative);
  EXPECT_EQ(h.sign(3, 0), Sign::kNegative);
  EXPECT_EQ(h.sign(1, 2), Sign::kPositive);
}

TEST(Switching, IsAnInvolutionAndAGroupAction) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const SignedGraph g = random_signed_graph(8, 0.5, rng);
    const SwitchSet a = subset(static_cast<unsigned>(rng()) & 0xff, 8);
    const SwitchSet b = subset(static_cast<unsigned>(rng()) & 0xff, 8);
    EXPECT_EQ(switch_vertices(switch_vertices(g, a), a).edges(), g.edges());
    EXPECT_EQ(switch_vertices(switch_vertices(g, a), b).edges(),
              switch_vertices(g, a.symmetric_difference(b)).edges());
    // Switching everything changes nothing.
    EXPECT_EQ(switch_vertices(g, subset(0xff, 8)).edges(), g.edges());
  }
}

TEST(Switching, SwitchSetNormalizesMembers) {
  const SwitchSet s({3, 1, 3});
  EXPECT_EQ(std::vector<int>(s.members().begin(), s.members().end()),
            (std::vector<int>{1, 3}));
  EXPECT_THROW(s.check_against(3), Error);
  EXPECT_NO_THROW(s.check_against(4));
}

TEST(Switching, BalanceMatchesNegativeParity) {
  for (unsigned mask = 0; mask < 32; ++mask) {
    const SignedGraph g = make_cycle(std::vector<Sign>{
        mask & 1 ? Sign::kNegative : Sign::kPositive,
        mask & 2 ? Sign::kNegative : Sign::kPositive,
        mask & 4 ? Sign::kNegative : Sign::kPositive,
        mask & 8 ? Sign::kNegative : Sign::kPositive,
        mask & 16 ? Sign::kNegative : Sign::kPositive});
    const std::vector<int> walk{0, 1, 2, 3, 4};
    EXPECT_EQ(is_balanced_cycle(g, walk), std::popcount(mask) % 2 == 0);
  }
}

TEST(Switching, EquivalenceAgreesWithBruteForce) {
  std::mt19937_64 rng(11);
  std::bernoulli_distribution coin(0.5);
  int equivalent = 0;
  for (int i = 0; i < 150; ++i) {
    const int n = 1 + i % 9;
    const SignedGraph a = random_signed_graph(n, 0.5, rng);
    const SignedGraph b =
        coin(rng) ? switch_vertices(a, subset(static_cast<unsigned>(rng()), n))
                  : random_signature(a, rng);
    const auto w = switch_equivalent(a, b);
    ASSERT_EQ(w.has_value(), brute_force_equivalent(a, b)) << "instance " << i;
    if (w) {
      ++equivalent;
      EXPECT_EQ(switch_vertices(a, *w).edges(), b.edges());
    }
  }
  EXPECT_GT(equivalent, 20);
  EXPECT_LT(equivalent, 150);
}

TEST(Switching, DifferentUnderlyingGraphsAreNeverEquivalent) {
  EXPECT_FALSE(switch_equivalent(cycle("+++"), testing::path("++")).has_value());
}

TEST(Switching, CanonicalFormIsASwitchingInvariant) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    const SignedGraph g = random_signed_graph(7, 0.45, rng);
    const SignedGraph h = switch_vertices(g, subset(static_cast<unsigned>(rng()), 7));
    EXPECT_EQ(canonical_switch_form(g), canonical_switch_form(h));
    // After normalizing, the BFS forest is positive and only co-tree edges
    // may stay negative.
    const SignedGraph n = switch_vertices(g, normalizing_switch(g));
    const auto form = canonical_switch_form(g);
    EXPECT_EQ(n.count_edges(Sign::kNegative),
              std::count_if(form.cotree.begin(), form.cotree.end(),
                            [](const Edge& e) { return e.sign == Sign::kNegative; }));
  }
  EXPECT_NE(canonical_switch_form(cycle("++++")), canonical_switch_form(cycle("+++-")));
}

}  // namespace
}  // namespace signhom
