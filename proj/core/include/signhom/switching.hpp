#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "signhom/signed_graph.hpp"

namespace signhom {

/// A set of vertices to switch. Members are kept sorted and unique.
class SwitchSet {
 public:
  SwitchSet() = default;
  explicit SwitchSet(std::vector<int> members);

  std::span<const int> members() const { return members_; }
  bool contains(int v) const;
  bool empty() const { return members_.empty(); }
  int size() const { return static_cast<int>(members_.size()); }

  SwitchSet symmetric_difference(const SwitchSet& other) const;
  /// Throws Error if some member is not a vertex of a graph of this order.
  void check_against(int order) const;

  friend bool operator==(const SwitchSet&, const SwitchSet&) = default;

 private:
  std::vector<int> members_;
};

/// Reverses the sign of every edge with exactly one endpoint in `s`.
SignedGraph switch_vertices(const SignedGraph& g, const SwitchSet& s);

/// `cycle` is a closed walk v0 v1 ... v_{m-1} (v_{m-1} v0 closes it). Returns
/// true iff it traverses an even number of negative edges.
bool is_balanced_cycle(const SignedGraph& g, std::span<const int> cycle);

/// Switching-invariant signature: the underlying edge set together with the
/// co-tree signs left after making a canonical BFS forest all positive.
struct CanonicalSwitchForm {
  int order = 0;
  std::vector<std::pair<int, int>> underlying;
  std::vector<Edge> cotree;
  std::vector<int> component_roots;

  friend bool operator==(const CanonicalSwitchForm&,
                         const CanonicalSwitchForm&) = default;
};

CanonicalSwitchForm canonical_switch_form(const SignedGraph& g);

/// The switch set that turns every edge of the canonical BFS forest (roots are
/// the smallest vertex of each component, neighbors visited in ascending
/// order) positive. Component roots are never members.
SwitchSet normalizing_switch(const SignedGraph& g);

/// Witness turning `a` into `b`, normalized so that no component root is a
/// member; nullopt when the graphs are not switching equivalent.
std::optional<SwitchSet> switch_equivalent(const SignedGraph& a,
                                           const SignedGraph& b);

}  // namespace signhom
