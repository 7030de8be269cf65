#include "signhom/hom.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "signhom/constructions.hpp"
#include "signhom/generate.hpp"
#include "test_util.hpp"

namespace signhom {
namespace {

using testing::cycle;
using testing::subset;

// Oracle for the signed setting: some switch of g maps to h.
bool brute_force_signed(const SignedGraph& g, const SignedGraph& h) {
  for (unsigned s = 0; s < (1u << g.order()); ++s) {
    if (brute_force_hom_exists(switch_vertices(g, subset(s, g.order())), h)) return true;
  }
  return false;
}

TEST(VerifyHom, BasicCases) {
  const SignedGraph g = cycle("+-+");
  std::vector<int> id{0, 1, 2};
  EXPECT_TRUE(verify_hom(g, g, Homomorphism{HomMode::k2ec, id, {}}));
  const SignedGraph edge = testing::path("+");
  EXPECT_FALSE(verify_hom(edge, edge, Homomorphism{HomMode::k2ec, {0, 0}, {}}));
  EXPECT_THROW(verify_hom(edge, edge, Homomorphism{HomMode::k2ec, {0}, {}}), Error);
  EXPECT_THROW(verify_hom(edge, edge, Homomorphism{HomMode::k2ec, {0, 2}, {}}), Error);
  // A negative edge maps onto a positive one after switching an end.
  const SignedGraph neg = testing::path("-");
  EXPECT_FALSE(verify_hom(neg, edge, Homomorphism{HomMode::k2ec, {0, 1}, {}}));
  EXPECT_TRUE(verify_hom(neg, edge, Homomorphism{HomMode::kSigned, {0, 1}, SwitchSet({1})}));
}

TEST(FindHom2ec, AgreesWithBruteForce) {
  std::mt19937_64 rng(41);
  int found = 0;
  for (int i = 0; i < 300; ++i) {
    const SignedGraph g = random_signed_graph(1 + i % 6, 0.5, rng);
    const SignedGraph h = random_signed_graph(1 + i % 5, 0.7, rng);
    const auto hom = find_hom_2ec(g, h);
    ASSERT_EQ(hom.has_value(), brute_force_hom_exists(g, h)) << i;
    if (hom) {
      ++found;
      EXPECT_TRUE(verify_hom(g, h, *hom));
    }
  }
  EXPECT_GT(found, 30);
  EXPECT_LT(found, 270);
}

TEST(FindHom2ec, Examples) {
  const SignedGraph c6 = cycle("+-+-+-");
  const auto to_sp5 = find_hom_2ec(c6, build_sp(5).graph);
  ASSERT_TRUE(to_sp5.has_value());
  EXPECT_FALSE(find_hom_2ec(c6, build_gadget(GadgetId::kCandidate5).graph).has_value());
  const SignedGraph sp9 = build_sp(9).graph;
  // SP9 is the 3x3 rook graph on its positive edges: positive cliques have
  // at most three vertices, and SP9* adds the fourth.
  EXPECT_TRUE(find_hom_2ec(make_complete(3, Sign::kPositive), sp9).has_value());
  EXPECT_FALSE(find_hom_2ec(make_complete(4, Sign::kPositive), sp9).has_value());
  EXPECT_TRUE(find_hom_2ec(make_complete(4, Sign::kPositive),
                           build_gadget(GadgetId::kSP9Star).graph)
                  .has_value());
  EXPECT_TRUE(find_hom_2ec(SignedGraph(0), SignedGraph(0)).has_value());
  EXPECT_FALSE(find_hom_2ec(SignedGraph(1), SignedGraph(0)).has_value());
}

TEST(FindHom2ec, PinnedVerticesAreRespected) {
  const SignedGraph sp9 = build_sp(9).graph;
  const SignedGraph p = testing::path("++");
  for (int x = 0; x < 9; ++x) {
    const std::vector<std::pair<int, int>> fixed{{1, x}};
    const auto hom = find_hom_2ec(p, sp9, fixed);
    ASSERT_TRUE(hom.has_value());
    EXPECT_EQ(hom->map[1], x);
  }
  // Both ends of a positive edge pinned to a negative pair: impossible.
  const std::vector<std::pair<int, int>> bad{{0, 0}, {1, 4}};
  EXPECT_FALSE(find_hom_2ec(p, sp9, bad).has_value());
  const std::vector<std::pair<int, int>> out_of_range{{0, 9}};
  EXPECT_THROW(find_hom_2ec(p, sp9, out_of_range), Error);
}

TEST(FindHom2ec, IsDeterministic) {
  std::mt19937_64 rng(2);
  const SignedGraph g = random_signed_graph(12, 0.3, rng);
  const SignedGraph t = build_gadget(GadgetId::kSP9Star).graph;
  const auto a = find_hom_2ec(g, t);
  const auto b = find_hom_2ec(g, t);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->map, b->map);
}

// Counts maps by plain enumeration of all |V(h)|^|V(g)| assignments.
std::size_t brute_force_count(const SignedGraph& g, const SignedGraph& h) {
  std::size_t total = 1;
  for (int i = 0; i < g.order(); ++i) total *= h.order();
  std::size_t count = 0;
  std::vector<int> map(g.order());
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (int v = 0; v < g.order(); ++v) {
      map[v] = static_cast<int>(c % h.order());
      c /= h.order();
    }
    if (verify_hom(g, h, Homomorphism{HomMode::k2ec, map, {}})) ++count;
  }
  return count;
}

TEST(ForEachHom2ec, CountsMatchEnumeration) {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 100; ++i) {
    const SignedGraph g = random_signed_graph(1 + i % 5, 0.5, rng);
    const SignedGraph h = random_signed_graph(1 + i % 4, 0.8, rng);
    std::vector<std::vector<int>> seen;
    const auto n = for_each_hom_2ec(g, h, [&](const std::vector<int>& m) {
      EXPECT_TRUE(verify_hom(g, h, Homomorphism{HomMode::k2ec, m, {}}));
      seen.push_back(m);
      return true;
    });
    EXPECT_EQ(n, brute_force_count(g, h)) << i;
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());
  }
}

TEST(ForEachHom2ec, VisitorCanStopEarly) {
  const SignedGraph sp9 = build_sp(9).graph;
  // Every ordered positive edge of SP9 is an image of a positive edge.
  EXPECT_EQ(for_each_hom_2ec(testing::path("+"), sp9, [](const auto&) { return true; }), 36u);
  EXPECT_EQ(for_each_hom_2ec(testing::path("+"), sp9, [](const auto&) { return false; }), 1u);
}

TEST(FindHomSigned, MatchesSwitchEnumerationAndRho) {
  std::mt19937_64 rng(43);
  int found = 0;
  for (int i = 0; i < 200; ++i) {
    const SignedGraph g = random_signed_graph(1 + i % 6, 0.5, rng);
    const SignedGraph h = random_signed_graph(1 + i % 5, 0.7, rng);
    const auto hom = find_hom_signed(g, h);
    const bool oracle = brute_force_signed(g, h);
    ASSERT_EQ(hom.has_value(), oracle) << i;
    EXPECT_EQ(find_hom_2ec(g, build_rho(h).graph).has_value(), oracle);
    if (hom) {
      ++found;
      EXPECT_TRUE(verify_hom(g, h, *hom));
      EXPECT_EQ(hom->mode, HomMode::kSigned);
    }
  }
  EXPECT_GT(found, 30);
}

TEST(FindHomSigned, InvariantUnderSwitchingTheSource) {
  std::mt19937_64 rng(44);
  const SignedGraph t = build_gadget(GadgetId::kSignedT).graph;
  for (int i = 0; i < 60; ++i) {
    const SignedGraph g = random_signed_graph(5, 0.5, rng);
    const SignedGraph s = switch_vertices(g, subset(static_cast<unsigned>(rng()), 5));
    EXPECT_EQ(find_hom_signed(g, t).has_value(), find_hom_signed(s, t).has_value());
  }
}

TEST(FindHomSigned, Examples) {
  const SignedGraph balanced = cycle("----");
  EXPECT_TRUE(find_hom_signed(balanced, testing::path("+")).has_value());
  const SignedGraph unbalanced = cycle("+++-");
  // No target on three vertices works: try every signed graph of order 3.
  for (unsigned code = 0; code < 27; ++code) {
    std::vector<Edge> edges;
    unsigned c = code;
    for (auto [u, v] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      if (c % 3 != 0) edges.push_back({u, v, c % 3 == 1 ? Sign::kPositive : Sign::kNegative});
      c /= 3;
    }
    EXPECT_FALSE(find_hom_signed(unbalanced, SignedGraph(3, edges)).has_value());
  }
  const auto hom = find_hom_signed(unbalanced, build_gadget(GadgetId::kSignedT).graph);
  ASSERT_TRUE(hom.has_value());
}

}  // namespace
}  // namespace signhom
