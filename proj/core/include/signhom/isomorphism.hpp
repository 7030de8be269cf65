#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "signhom/properties.hpp"
#include "signhom/signed_graph.hpp"

namespace signhom {

/// perm[v] is the image of vertex v.
using Permutation = std::vector<int>;

/// Enumerates sign-preserving bijections g -> h that extend the `fixed`
/// (g vertex, h vertex) pairs. Candidates are pruned by joint color
/// refinement on (positive degree, negative degree). The visiting order is
/// deterministic; enumeration stops as soon as `visit` returns false.
void for_each_isomorphism(const SignedGraph& g, const SignedGraph& h,
                          const std::function<bool(const Permutation&)>& visit,
                          std::span<const std::pair<int, int>> fixed = {});

std::optional<Permutation> find_isomorphism(
    const SignedGraph& g, const SignedGraph& h,
    std::span<const std::pair<int, int>> fixed = {});

struct AutomorphismGroup {
  /// Every automorphism, sorted lexicographically (identity first).
  std::vector<Permutation> elements;
  /// Greedy generating set drawn from `elements`.
  std::vector<Permutation> generators;
  long long order = 0;
};

inline constexpr int kDefaultVertexLimit = 30;

/// Full enumeration. Throws Error if the order exceeds `vertex_limit` or the
/// group has more than `element_limit` elements.
AutomorphismGroup automorphisms(const SignedGraph& g,
                                int vertex_limit = kDefaultVertexLimit,
                                std::size_t element_limit = 2'000'000);

bool is_automorphism(const SignedGraph& g, const Permutation& p);

/// Transitivity of Aut(g) on ordered n-cliques with a common sign pattern,
/// n in {1, 2, 3}. A failing report carries a tuple outside the orbit of the
/// first tuple of its sign class.
PropertyReport is_kn_transitive(const SignedGraph& g, int n,
                                int vertex_limit = kDefaultVertexLimit);

/// Whether g is isomorphic to its negation.
PropertyReport is_antiautomorphic(const SignedGraph& g,
                                  int vertex_limit = kDefaultVertexLimit);

}  // namespace signhom
