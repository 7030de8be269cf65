#include "signhom/coloring.hpp"

#include <algorithm>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "signhom/generate.hpp"
#include "signhom/properties.hpp"
#include "test_util.hpp"

namespace signhom {
namespace {

using testing::cycle;
using testing::path;

SignedGraph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5, Sign::kPositive});
    edges.push_back({i, i + 5, Sign::kPositive});
    edges.push_back({5 + i, 5 + (i + 2) % 5, Sign::kPositive});
  }
  return SignedGraph(10, edges);
}

// Attaches vertex `at` of g to a fresh path of the given signs.
SignedGraph hang_path(const SignedGraph& g, int at, const char* signs) {
  std::vector<Edge> edges = g.edges();
  const auto s = testing::signs(signs);
  const int n = g.order();
  int prev = at;
  for (std::size_t i = 0; i < s.size(); ++i) {
    edges.push_back({prev, n + static_cast<int>(i), s[i]});
    prev = n + static_cast<int>(i);
  }
  return SignedGraph(n + static_cast<int>(s.size()), edges);
}

TEST(Degeneracy, SmallGraphs) {
  EXPECT_EQ(degeneracy_order(SignedGraph(3)).degeneracy, 0);
  EXPECT_EQ(degeneracy_order(path("+-+")).degeneracy, 1);
  EXPECT_EQ(degeneracy_order(cycle("+-+-+")).degeneracy, 2);
  EXPECT_EQ(degeneracy_order(make_complete(4, Sign::kNegative)).degeneracy, 3);
  EXPECT_EQ(degeneracy_order(petersen()).degeneracy, 3);
  const auto d = degeneracy_order(cycle("++++++"));
  std::vector<int> sorted = d.order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 6; ++i) EXPECT_EQ(sorted[i], i);
}

TEST(GreedyDegenerate, ColorsTreesIntoSp9) {
  const SignedGraph sp9 = build_sp(9).graph;
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    // Random tree with maximum degree 3.
    const int n = 2 + t % 15;
    std::vector<Edge> edges;
    std::vector<int> deg(n, 0);
    for (int v = 1; v < n; ++v) {
      int u;
      do {
        u = static_cast<int>(rng() % v);
      } while (deg[u] >= 3);
      ++deg[u];
      ++deg[v];
      edges.push_back({u, v, rng() % 2 ? Sign::kPositive : Sign::kNegative});
    }
    const SignedGraph g(n, edges);
    const auto hom = greedy_degenerate_color(g, sp9, 3);
    ASSERT_TRUE(hom.has_value()) << t;
    EXPECT_TRUE(verify_hom(g, sp9, *hom));
  }
}

TEST(GreedyDegenerate, FourRegularTargetHandlesThreeDegenerate) {
  const SignedGraph tr13 = build_tr(13).graph;
  ASSERT_TRUE(check_p_kn(tr13, 3, 2).holds);
  std::mt19937_64 rng(5);
  int tried = 0;
  while (tried < 40) {
    const SignedGraph g = random_signed_graph(12, 0.3, rng);
    if (g.max_degree() > 4 || degeneracy_order(g).degeneracy > 3) continue;
    ++tried;
    const auto hom = greedy_degenerate_color(g, tr13, 4);
    ASSERT_TRUE(hom.has_value());
    EXPECT_TRUE(verify_hom(g, tr13, *hom));
  }
}

TEST(GreedyDegenerate, Preconditions) {
  const SignedGraph sp9 = build_sp(9).graph;
  EXPECT_THROW(greedy_degenerate_color(make_complete(5, Sign::kPositive), sp9, 3), Error);
  EXPECT_THROW(greedy_degenerate_color(make_complete(4, Sign::kPositive), sp9, 3), Error);
  EXPECT_THROW(greedy_degenerate_color(path("+"), sp9, 0), Error);
  // SP9 only has P_{2,1}, so the opt-in property check rejects k = 3.
  EXPECT_THROW(greedy_degenerate_color(path("+"), sp9, 3, true), Error);
  EXPECT_TRUE(greedy_degenerate_color(path("+"), build_tr(13).graph, 4, true).has_value());
}

TEST(FindK4s, LocatesGadgets) {
  const SignedGraph plus = build_gadget(GadgetId::kK4sPlus).graph;
  const SignedGraph minus = build_gadget(GadgetId::kK4sMinus).graph;
  auto occ = find_k4s(plus);
  ASSERT_EQ(occ.size(), 1u);
  EXPECT_EQ(occ[0].polarity, Sign::kPositive);
  EXPECT_FALSE(occ[0].attach_vertex.has_value());
  const auto& r = occ[0].vertices;
  // Roles: subdivision joins both ends with opposite signs; ends are adjacent
  // to both apexes but not to each other.
  EXPECT_NE(plus.sign(r[0], r[1]), plus.sign(r[0], r[2]));
  EXPECT_FALSE(plus.has_edge(r[1], r[2]));
  EXPECT_EQ(plus.sign(r[3], r[4]), Sign::kPositive);
  EXPECT_EQ(plus.sign(r[0], r[2]), Sign::kPositive);

  occ = find_k4s(minus);
  ASSERT_EQ(occ.size(), 1u);
  EXPECT_EQ(occ[0].polarity, Sign::kNegative);

  const SignedGraph hung = hang_path(plus, 0, "-+");
  occ = find_k4s(hung);
  ASSERT_EQ(occ.size(), 1u);
  EXPECT_EQ(occ[0].attach_vertex, 0);

  EXPECT_EQ(find_k4s(disjoint_union(plus, minus)).size(), 2u);
  EXPECT_TRUE(find_k4s(make_complete(4, Sign::kPositive)).empty());
  EXPECT_TRUE(find_k4s(petersen()).empty());
}

TEST(ColorMaxdeg2, EveryConnectedSignatureUpToLength8) {
  for (int n = 1; n <= 8; ++n) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::string s(n, '+');
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1u) s[i] = '-';
      }
      std::vector<SignedGraph> inputs{path(s.c_str())};
      if (n >= 3) inputs.push_back(cycle(s.c_str()));
      for (const auto& g : inputs) {
        const auto r = color_maxdeg2(g, HomMode::k2ec);
        EXPECT_TRUE(r.target_name == "SP5" || r.target_name == "SB") << s;
        ASSERT_TRUE(verify_hom(g, r.target, r.hom)) << s;
        const auto rs = color_maxdeg2(g, HomMode::kSigned);
        EXPECT_EQ(rs.target_name, "SIGNED_T");
        ASSERT_TRUE(verify_hom(g, rs.target, rs.hom)) << s;
      }
    }
  }
}

TEST(ColorMaxdeg2, Examples) {
  const auto tri = color_maxdeg2(cycle("+++"), HomMode::k2ec);
  EXPECT_EQ(tri.target_name, "SB");
  const auto c6 = color_maxdeg2(cycle("+-+-+-"), HomMode::k2ec);
  EXPECT_EQ(c6.target_name, "SP5");
  std::vector<int> used = c6.hom.map;
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  EXPECT_EQ(used.size(), 5u);

  const SignedGraph c5 = cycle("++++-");
  const auto s = color_maxdeg2(c5, HomMode::kSigned);
  ASSERT_TRUE(verify_hom(c5, s.target, s.hom));
  std::vector<int> labels = s.hom.map;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  EXPECT_EQ(labels, (std::vector<int>{0, 2, 3}));

  const SignedGraph mixed = disjoint_union(cycle("+++"), cycle("+-+-+-"));
  const auto m = color_maxdeg2(mixed, HomMode::k2ec);
  EXPECT_EQ(m.target_name, "TARGET6");
  EXPECT_TRUE(verify_hom(mixed, m.target, m.hom));
  EXPECT_THROW(color_maxdeg2(make_complete(4, Sign::kPositive), HomMode::k2ec), Error);
}

void expect_maxdeg3(const SignedGraph& g, Maxdeg3Route route) {
  const auto r = color_maxdeg3(g);
  const SignedGraph star = build_gadget(GadgetId::kSP9Star).graph;
  ASSERT_TRUE(verify_hom(g, star, r.hom));
  ASSERT_EQ(r.routes.size(), 1u);
  EXPECT_EQ(r.routes[0], route) << to_string(r.routes[0]);
}

TEST(ColorMaxdeg3, Routes) {
  expect_maxdeg3(path("+-+-"), Maxdeg3Route::kDegenerate);
  expect_maxdeg3(make_complete(4, Sign::kPositive), Maxdeg3Route::kAllPositiveCubic);
  expect_maxdeg3(petersen(), Maxdeg3Route::kAllPositiveCubic);
  expect_maxdeg3(hang_path(build_gadget(GadgetId::kK4sPlus).graph, 0, "+"),
                 Maxdeg3Route::kK4sStitched);
  expect_maxdeg3(hang_path(build_gadget(GadgetId::kK4sMinus).graph, 0, "-+"),
                 Maxdeg3Route::kK4sStitched);
  const SignedGraph k4 =
      make_complete(4, Sign::kPositive).without_edge(0, 1).with_edge(0, 1, Sign::kNegative);
  expect_maxdeg3(k4, Maxdeg3Route::kNegativeEdgeRemap);
}

TEST(ColorMaxdeg3, TwoGadgetsJoinedByAPath) {
  const SignedGraph a = hang_path(build_gadget(GadgetId::kK4sPlus).graph, 0, "+-");
  const SignedGraph b = build_gadget(GadgetId::kK4sMinus).graph;
  std::vector<Edge> edges = disjoint_union(a, b).edges();
  edges.push_back({a.order() - 1, a.order(), Sign::kNegative});
  const SignedGraph g(a.order() + b.order(), edges);
  ASSERT_EQ(find_k4s(g).size(), 2u);
  expect_maxdeg3(g, Maxdeg3Route::kK4sStitched);
}

TEST(ColorMaxdeg3, PetersenSignatures) {
  const SignedGraph p = petersen();
  const SignedGraph star = build_gadget(GadgetId::kSP9Star).graph;
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const SignedGraph g = random_signature(p, rng);
    const auto r = color_maxdeg3(g);
    ASSERT_TRUE(verify_hom(g, star, r.hom));
  }
  EXPECT_THROW(color_maxdeg3(make_complete(5, Sign::kPositive)), Error);
}

TEST(ColorMaxdeg3, DisconnectedInputsGetOneRoutePerComponent) {
  const SignedGraph g = disjoint_union(disjoint_union(path("+"), petersen()), SignedGraph(1));
  const auto r = color_maxdeg3(g);
  EXPECT_EQ(r.routes.size(), 3u);
  EXPECT_TRUE(verify_hom(g, build_gadget(GadgetId::kSP9Star).graph, r.hom));
}

TEST(ExtensionTables, Verdicts) {
  const TableCheck star = verify_extension_table(sp9_star_extension_table());
  EXPECT_FALSE(star.all_valid);
  EXPECT_FALSE(star.covers_all);
  EXPECT_EQ(star.uncovered_positive, (std::vector<int>{1}));
  int invalid = 0;
  for (const auto& e : star.entries) invalid += e.valid ? 0 : 1;
  EXPECT_EQ(invalid, 1);

  const TableCheck plus = verify_extension_table(sp9_dagger_plus_extension_table());
  EXPECT_TRUE(plus.all_valid);
  EXPECT_TRUE(plus.covers_all);
  EXPECT_TRUE(plus.uncovered_positive.empty());
  EXPECT_TRUE(plus.uncovered_negative.empty());

  const TableCheck minus = verify_extension_table(sp9_dagger_minus_extension_table());
  EXPECT_FALSE(minus.covers_all);
  for (const auto& e : minus.entries) {
    EXPECT_FALSE(e.valid) << e.panel;
    EXPECT_FALSE(e.problem.empty());
  }
}

}  // namespace
}  // namespace signhom
