#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "signhom/signed_graph.hpp"

namespace signhom {

/// A target graph together with a semantic label per vertex (field element,
/// copy sign, primed copy, ...). Labels are unique.
struct LabeledTarget {
  SignedGraph graph;
  std::vector<std::string> labels;

  /// Index of the vertex carrying `label`; throws Error when absent.
  int vertex(std::string_view label) const;
};

enum class GadgetId {
  kSB,
  kPath4,
  kCandidate5,
  kTarget6,
  kSignedT,
  kK4sPlus,
  kK4sMinus,
  kClique6,
  kSP9Star,
  kSP9Dagger,
};

std::string_view gadget_name(GadgetId id);
/// Accepts the upper-case catalog names (SB, PATH4, ..., SP9_DAGGER).
GadgetId parse_gadget(std::string_view name);
std::span<const GadgetId> all_gadgets();

/// Complete graph on GF(q); {u,v} is positive iff u - v is a square.
/// Requires q to be a prime power with q = 1 mod 4.
LabeledTarget build_sp(int q);

/// Antitwinned double: vertex v^{+1} is index v, v^{-1} is index v + n, and
/// sign(u^i v^j) = i * j * sign(uv).
LabeledTarget build_rho(const LabeledTarget& g);
LabeledTarget build_rho(const SignedGraph& g);

/// SP_q plus a vertex "inf" joined positively to everything.
LabeledTarget build_sp_plus(int q);

/// rho(SP_q^+), order 2(q+1).
LabeledTarget build_tr(int q);

/// Adds x' (index n) copying the neighborhood of x and y' (index n+1) copying
/// that of y, with x'y' negative, xx' negative and yy' positive. The edge xy
/// must exist and be positive.
LabeledTarget build_plus2(const LabeledTarget& t, int x, int y);

LabeledTarget build_gadget(GadgetId id);

/// k-regular 2-edge-colored clique on 4(k-1) vertices, k >= 3.
SignedGraph build_2ec_clique(int k);
/// k-regular signed clique on 2(k+1) vertices, k >= 4.
SignedGraph build_signed_clique(int k);

/// Stored embeddings of SP_5 (vertex = field element) and SB into TARGET6.
const std::array<int, 5>& sp5_in_target6();
const std::array<int, 5>& sb_in_target6();

}  // namespace signhom
