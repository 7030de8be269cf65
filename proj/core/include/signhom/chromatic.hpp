#pragma once

#include <optional>
#include <vector>

#include "signhom/hom.hpp"
#include "signhom/signed_graph.hpp"

namespace signhom {

/// Evidence for one target order: how many candidate targets were tried and
/// whether any of them received a homomorphism.
struct OrderLog {
  int order = 0;
  int targets_tested = 0;
  bool found = false;
};

struct ChromaticResult {
  /// Smallest order that works, or nullopt when none up to max_order does
  /// (then per_order_log is a lower-bound certificate).
  std::optional<int> value;
  SignedGraph target;
  Homomorphism hom;
  std::vector<OrderLog> per_order_log;
};

inline constexpr int kMaxChromaticOrder = 6;

/// Complete signed graphs on n vertices up to isomorphism, n <= 6. Each is
/// the lexicographically least sign string in its class.
const std::vector<SignedGraph>& complete_targets_2ec(int n);

/// Complete signed graphs on n vertices up to isomorphism and switching,
/// n <= 6. Every representative has an all-positive star at vertex 0.
const std::vector<SignedGraph>& complete_targets_signed(int n);

/// Exact chi_2 by trying every complete target of order 1, 2, ... in turn.
/// Throws Error when max_order > 6.
ChromaticResult chromatic_2ec(const SignedGraph& g,
                              int max_order = kMaxChromaticOrder);

/// Exact chi_s over switching classes of complete targets.
ChromaticResult chromatic_signed(const SignedGraph& g,
                                 int max_order = kMaxChromaticOrder);

}  // namespace signhom
