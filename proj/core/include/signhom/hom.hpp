#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "signhom/signed_graph.hpp"
#include "signhom/switching.hpp"

namespace signhom {

enum class HomMode { k2ec, kSigned };

const char* to_string(HomMode mode);

struct Homomorphism {
  HomMode mode = HomMode::k2ec;
  /// map[v] is the target vertex of source vertex v.
  std::vector<int> map;
  /// Source vertices switched before mapping (signed mode only).
  SwitchSet switch_witness;
};

/// Pure re-check. Throws Error when the map has the wrong length or an index
/// is out of range.
bool verify_hom(const SignedGraph& g, const SignedGraph& h,
                const Homomorphism& hom);

/// Complete, deterministic backtracking search for a sign-preserving map.
/// `fixed` pins source vertices to target vertices.
std::optional<Homomorphism> find_hom_2ec(
    const SignedGraph& g, const SignedGraph& h,
    std::span<const std::pair<int, int>> fixed = {});

/// Receives each map found; returning false stops the enumeration.
using HomVisitor = std::function<bool(const std::vector<int>&)>;

/// Enumerates every 2EC homomorphism g -> h in search order. Returns the
/// number of maps passed to visit.
std::size_t for_each_hom_2ec(const SignedGraph& g, const SignedGraph& h,
                             const HomVisitor& visit);

/// Searches g -> rho(h); source vertices landing in the negative copy form
/// the switch witness.
std::optional<Homomorphism> find_hom_signed(const SignedGraph& g,
                                            const SignedGraph& h);

/// Reference enumeration of all |V(h)|^|V(g)| maps, for cross-checking.
bool brute_force_hom_exists(const SignedGraph& g, const SignedGraph& h);

}  // namespace signhom
