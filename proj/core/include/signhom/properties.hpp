#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "signhom/signed_graph.hpp"

namespace signhom {

/// Outcome of a structural check. When `holds` is false the witness fields
/// describe a configuration that can be re-checked on its own.
struct PropertyReport {
  std::string kind;
  bool holds = false;
  int k = 0;
  int n = 0;
  /// Clique tuple and sign vector attaining `count` common neighbors.
  std::vector<int> tuple;
  std::vector<Sign> signs;
  int count = 0;
  /// Offending pair for pair-based checks.
  std::optional<std::pair<int, int>> pair;
  std::string detail;
};

/// Minimum, over k-cliques {u_1 < ... < u_k} and sign vectors alpha, of the
/// number of vertices w with sign(u_i w) = alpha_i for every i. Ties keep the
/// first clique in lexicographic order and the first alpha in mask order
/// (bit i set means alpha_i = -1).
struct PkMinimum {
  bool any_clique = false;
  int count = 0;
  std::vector<int> tuple;
  std::vector<Sign> signs;
};

PkMinimum p_k_minimum(const SignedGraph& g, int k);

/// Property P_{k,n}. Requires 1 <= k <= order and n >= 0.
PropertyReport check_p_kn(const SignedGraph& g, int k, int n);

/// Largest n such that P_{k,n} holds; nullopt when g has no k-clique (every
/// n holds vacuously).
std::optional<int> max_p_n(const SignedGraph& g, int k);

/// Vertices w with sign(uw) = s1 and sign(vw) = s2.
std::vector<int> common_signed_neighbors(const SignedGraph& g, int u, int v,
                                         Sign s1, Sign s2);

/// Property P*_{2,2} on a complete graph: for all ordered u != v and signs
/// s1, s2 not both equal to sign(uv), at least two vertices w have
/// sign(uw) = s1 and sign(vw) = s2.
PropertyReport check_p22_star(const SignedGraph& g);

/// Every non-adjacent pair is joined by a 2-path with one edge of each sign.
PropertyReport is_2ec_clique(const SignedGraph& g);

/// Every non-adjacent pair lies on an unbalanced 4-cycle.
PropertyReport is_signed_clique(const SignedGraph& g);

}  // namespace signhom
