#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "signhom/constructions.hpp"
#include "signhom/hom.hpp"
#include "signhom/signed_graph.hpp"

namespace signhom {

/// Minimum-degree elimination order (ties by index) and the largest degree
/// seen at removal time.
struct DegeneracyOrder {
  std::vector<int> order;
  int degeneracy = 0;
};

DegeneracyOrder degeneracy_order(const SignedGraph& g);

/// Colors g into t along the reverse elimination order. At each vertex the
/// smaller sign class of colored neighbors is kept and the larger class is
/// recolored away from its colors, then the vertex takes the least color
/// compatible with every colored neighbor. Candidate colors are always
/// intersections of signed neighborhoods of t, so t need not be complete.
///
/// Throws Error when g has a vertex of degree above k or is not
/// (k-1)-degenerate, and, with verify_property, when t lacks
/// P_{k-1, floor((k-1)/2)+1}. Returns nullopt if a step finds no color.
std::optional<Homomorphism> greedy_degenerate_color(const SignedGraph& g,
                                                    const SignedGraph& t, int k,
                                                    bool verify_property = false);

/// An induced K4S_PLUS or K4S_MINUS. Roles follow the catalog gadget:
/// [subdivision, opposite-sign end, same-sign end, apex, apex].
struct K4sOccurrence {
  std::array<int, 5> vertices{};
  /// Sign of the K4 part.
  Sign polarity = Sign::kPositive;
  /// Occurrence vertex with a neighbor outside the occurrence, if any.
  std::optional<int> attach_vertex;
};

/// All induced occurrences, ordered by their sorted vertex sets.
std::vector<K4sOccurrence> find_k4s(const SignedGraph& g);

struct TargetedHom {
  Homomorphism hom;
  std::string target_name;
  SignedGraph target;
};

/// Search-free coloring of graphs with maximum degree at most 2. In 2EC mode
/// connected inputs go to SP5 or SB and disconnected ones to TARGET6; in
/// signed mode everything goes to SIGNED_T.
TargetedHom color_maxdeg2(const SignedGraph& g, HomMode mode);

/// How each component was handled by color_maxdeg3.
enum class Maxdeg3Route {
  kDegenerate,         // 2-degenerate, K4s-free: straight into SP9
  kK4sStitched,        // K4s stripped, remainder into SP9, gadgets re-attached
  kAllPositiveCubic,   // proper coloring inside the all-positive K4
  kNegativeEdgeRemap,  // one negative edge removed, then remapped to 0', 1'
  kDirectSearch,       // fallback: exact search into SP9*
};

const char* to_string(Maxdeg3Route route);

struct Maxdeg3Result {
  Homomorphism hom;  // into SP9_STAR
  std::vector<Maxdeg3Route> routes;  // one per component
};

/// Colors a graph with maximum degree at most 3 into SP9_STAR, component by
/// component. The result always re-verifies.
Maxdeg3Result color_maxdeg3(const SignedGraph& g);

/// One drawn way of coloring a K4s gadget. Colors are target labels for the
/// roles [subdivision, opposite-sign end, same-sign end, apex, apex].
struct ExtensionEntry {
  std::string panel;
  /// Attach colors the drawing is said to handle (may be empty).
  std::vector<std::string> claimed_attach;
  std::array<std::string, 5> colors;
};

struct ExtensionTable {
  std::string name;
  GadgetId gadget = GadgetId::kK4sPlus;
  GadgetId target = GadgetId::kSP9Star;
  /// Attach-edge signs the table is meant to handle.
  std::vector<Sign> attach_signs;
  std::vector<ExtensionEntry> entries;
};

/// K4S_PLUS into SP9_STAR through a positive attach edge.
const ExtensionTable& sp9_star_extension_table();
/// K4S_PLUS into SP9_DAGGER.
const ExtensionTable& sp9_dagger_plus_extension_table();
/// K4S_MINUS into SP9_DAGGER.
const ExtensionTable& sp9_dagger_minus_extension_table();

struct EntryCheck {
  std::string panel;
  bool valid = false;
  /// First gadget edge that the colors violate, when invalid.
  std::string problem;
  /// SP9 colors (indices 0..8) the entry can hang from, per attach sign.
  std::vector<int> reachable_positive;
  std::vector<int> reachable_negative;
  /// Claimed attach colors that are not actually reachable.
  std::vector<std::string> bad_claims;
};

struct TableCheck {
  std::string table;
  std::vector<EntryCheck> entries;
  bool all_valid = false;
  /// SP9 colors (indices) no valid entry can hang from, per attach sign.
  std::vector<int> uncovered_positive;
  std::vector<int> uncovered_negative;
  bool covers_all = false;
};

TableCheck verify_extension_table(const ExtensionTable& table);

}  // namespace signhom
