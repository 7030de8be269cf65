#include "signhom/coloring.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "signhom/isomorphism.hpp"
#include "signhom/properties.hpp"

namespace signhom {

namespace {

constexpr Sign kPos = Sign::kPositive;
constexpr Sign kNeg = Sign::kNegative;

// ---------------------------------------------------------------------------
// Shared helpers

const LabeledTarget& sp5() {
  static const LabeledTarget t = build_sp(5);
  return t;
}
const LabeledTarget& sp9() {
  static const LabeledTarget t = build_sp(9);
  return t;
}
const LabeledTarget& sp9_star() {
  static const LabeledTarget t = build_gadget(GadgetId::kSP9Star);
  return t;
}
const LabeledTarget& sp9_dagger() {
  static const LabeledTarget t = build_gadget(GadgetId::kSP9Dagger);
  return t;
}

// Vertices along a path or cycle component, starting at its smallest
// end-vertex (paths) or smallest vertex (cycles) and stepping to the smaller
// neighbor first.
struct Walk {
  std::vector<int> seq;
  bool cycle = false;
};

Walk walk_component(const SignedGraph& g, const std::vector<int>& comp) {
  int start = comp.front();
  bool cycle = comp.size() >= 3;
  for (int v : comp) {
    if (g.degree(v) <= 1) {
      start = v;
      cycle = false;
      break;
    }
  }
  Walk w;
  w.cycle = cycle;
  int prev = -1;
  int cur = start;
  std::set<int> seen;
  while (cur >= 0) {
    w.seq.push_back(cur);
    seen.insert(cur);
    int next = -1;
    for (int x : g.neighbors(cur)) {
      if (x != prev && !seen.count(x)) {
        next = x;
        break;
      }
    }
    prev = cur;
    cur = next;
  }
  return w;
}

std::vector<int> rotate_seq(const std::vector<int>& seq, int shift) {
  std::vector<int> out(seq.size());
  const int n = static_cast<int>(seq.size());
  for (int i = 0; i < n; ++i) out[i] = seq[(i + shift) % n];
  return out;
}

// ---------------------------------------------------------------------------
// Maximum degree 2, 2-edge-colored

// Each SP5 element 1..4 has exactly one positive and one negative neighbor
// in the 4-cycle 1+2, 3+4, 1-3, 2-4. Positive neighbors of 0 are {1, 4}.
int path_step(int color, Sign s) {
  static constexpr int kPosStep[5] = {-1, 2, 1, 4, 3};
  static constexpr int kNegStep[5] = {-1, 3, 4, 1, 2};
  return s == kPos ? kPosStep[color] : kNegStep[color];
}

Sign edge_sign(const SignedGraph& g, int u, int v) {
  return sign_from_int(g.sign_code(u, v));
}

struct ComponentColors {
  bool on_sb = false;  // colors index SB instead of SP5
  std::map<int, int> color;
};

void color_path_from(const SignedGraph& g, const std::vector<int>& seq,
                     std::size_t first, int first_color,
                     std::map<int, int>& color) {
  color[seq[first]] = first_color;
  for (std::size_t i = first + 1; i < seq.size(); ++i) {
    color[seq[i]] = path_step(color[seq[i - 1]], edge_sign(g, seq[i - 1], seq[i]));
  }
}

ComponentColors color_2ec_component(const SignedGraph& g,
                                    const std::vector<int>& comp) {
  ComponentColors out;
  const Walk w = walk_component(g, comp);
  if (!w.cycle) {
    color_path_from(g, w.seq, 0, 1, out.color);
    return out;
  }
  const int n = static_cast<int>(w.seq.size());
  std::vector<Sign> e(n);  // e[i] = sign of seq[i] seq[i+1]
  for (int i = 0; i < n; ++i) e[i] = edge_sign(g, w.seq[i], w.seq[(i + 1) % n]);
  auto before = [&](int i) { return e[(i + n - 1) % n]; };

  // Anchor v0 at 0 and color v1 .. v_{n-1} as a path from a neighbor of 0
  // with the sign of v0 v1.
  auto anchored = [&](int i) {
    const auto seq = rotate_seq(w.seq, i);
    out.color[seq[0]] = 0;
    color_path_from(g, seq, 1, e[i] == kPos ? 1 : 2, out.color);
  };

  if (n % 2 == 0) {
    for (int i = 0; i < n; ++i) {
      if (before(i) == e[i]) {
        anchored(i);
        return out;
      }
    }
    // Alternating: rotate so that v0 v1 is negative.
    const int i = e[0] == kNeg ? 0 : 1;
    const auto seq = rotate_seq(w.seq, i);
    for (int j = 0; j < n; ++j) {
      int c = 0;
      if (j == 0) c = 0;
      else if (j == 1) c = 2;
      else if (j % 4 == 2) c = 3;
      else if (j % 4 == 3) c = 1;
      else if (j % 4 == 0) c = 2;
      else c = 4;
      out.color[seq[j]] = c;
    }
    return out;
  }
  for (int i = 0; i < n; ++i) {
    if (before(i) == kNeg && e[i] == kPos) {
      anchored(i);
      return out;
    }
  }
  // Odd and monochromatic: the matching triangle of SB.
  out.on_sb = true;
  const std::array<int, 3> tri = e[0] == kPos ? std::array<int, 3>{0, 1, 2}
                                              : std::array<int, 3>{0, 3, 4};
  for (int j = 0; j < n; ++j) {
    out.color[w.seq[j]] = j == n - 1 ? tri[2] : tri[j % 2];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Maximum degree 2, signed

void color_signed_component(const SignedGraph& g, const std::vector<int>& comp,
                            std::vector<int>& map, std::vector<int>& switched) {
  const Walk w = walk_component(g, comp);
  const int n = static_cast<int>(w.seq.size());
  // Switch along the walk so that every walk edge is positive.
  std::vector<int> flip(n, 0);
  for (int i = 1; i < n; ++i) {
    flip[i] = flip[i - 1] ^ (g.sign_code(w.seq[i - 1], w.seq[i]) < 0 ? 1 : 0);
  }
  for (int i = 0; i < n; ++i) {
    if (flip[i]) switched.push_back(w.seq[i]);
  }
  // SIGNED_T labels 1..4 are indices 0..3.
  std::vector<int> label(n);
  if (!w.cycle) {
    for (int i = 0; i < n; ++i) label[i] = i % 2 == 0 ? 1 : 2;
  } else {
    const int closing = g.sign_code(w.seq[n - 1], w.seq[0]) *
                        (flip[n - 1] != flip[0] ? -1 : 1);
    const bool balanced = closing > 0;
    for (int i = 0; i < n; ++i) {
      if (balanced) {
        label[i] = i % 2 == 0 ? 1 : 2;
      } else {
        label[i] = i % 2 == 1 ? 1 : (n % 2 == 0 ? 2 : 3);
      }
    }
    if (!balanced) label[0] = 4;
    if (!balanced || n % 2 == 1) label[n - 1] = 3;
  }
  for (int i = 0; i < n; ++i) map[w.seq[i]] = label[i] - 1;
}

// ---------------------------------------------------------------------------
// Maximum degree 3

std::optional<std::vector<int>> color_into_sp9(const SignedGraph& h) {
  if (h.order() == 0) return std::vector<int>{};
  try {
    if (auto hom = greedy_degenerate_color(h, sp9().graph, 3)) {
      return hom->map;
    }
  } catch (const Error&) {
    // Not 2-degenerate or degree too high: leave it to the search.
  }
  if (auto hom = find_hom_2ec(h, sp9().graph)) return hom->map;
  return std::nullopt;
}

bool k4s_free(const SignedGraph& h) { return find_k4s(h).empty(); }

std::optional<std::vector<int>> stitch_k4s(const SignedGraph& h,
                                           const std::vector<K4sOccurrence>& occ) {
  std::vector<int> owner(h.order(), -1);
  for (std::size_t i = 0; i < occ.size(); ++i) {
    for (int v : occ[i].vertices) owner[v] = static_cast<int>(i);
  }
  // Outside neighbor of each occurrence (through its subdivision vertex).
  std::vector<int> outside(occ.size(), -1);
  for (std::size_t i = 0; i < occ.size(); ++i) {
    for (int v : occ[i].vertices) {
      for (int w : h.neighbors(v)) {
        if (owner[w] == static_cast<int>(i)) continue;
        if (owner[w] >= 0) return std::nullopt;  // two gadgets touch
        if (v != occ[i].vertices[0] || outside[i] >= 0) return std::nullopt;
        outside[i] = w;
      }
    }
  }
  std::vector<int> rest;
  for (int v = 0; v < h.order(); ++v) {
    if (owner[v] < 0) rest.push_back(v);
  }
  const auto base = color_into_sp9(h.induced(rest));
  if (!base) return std::nullopt;

  std::vector<int> map(h.order(), -1);
  for (std::size_t i = 0; i < rest.size(); ++i) map[rest[i]] = (*base)[i];

  const SignedGraph& star = sp9_star().graph;
  const ExtensionTable& drawn = sp9_star_extension_table();
  for (std::size_t i = 0; i < occ.size(); ++i) {
    const auto& o = occ[i];
    const int s = o.vertices[0];
    const int w = outside[i];
    bool placed = false;
    // Prefer a drawn entry when one applies as is.
    if (w >= 0 && o.polarity == kPos && h.sign_code(s, w) > 0) {
      for (const auto& entry : drawn.entries) {
        std::array<int, 5> c{};
        for (int r = 0; r < 5; ++r) c[r] = sp9_star().vertex(entry.colors[r]);
        if (star.sign_code(map[w], c[0]) <= 0) continue;
        Homomorphism trial{HomMode::k2ec, {c.begin(), c.end()}, {}};
        if (!verify_hom(h.induced(o.vertices), star, trial)) continue;
        for (int r = 0; r < 5; ++r) map[o.vertices[r]] = c[r];
        placed = true;
        break;
      }
    }
    if (placed) continue;
    // Otherwise search the gadget (plus its outside neighbor, pinned).
    std::vector<int> local(o.vertices.begin(), o.vertices.end());
    std::vector<std::pair<int, int>> pin;
    if (w >= 0) {
      local.push_back(w);
      pin.emplace_back(5, map[w]);
    }
    const auto found = find_hom_2ec(h.induced(local), star, pin);
    if (!found) return std::nullopt;
    for (int r = 0; r < 5; ++r) map[o.vertices[r]] = found->map[r];
  }
  return map;
}

std::optional<std::vector<int>> remap_negative_edge(const SignedGraph& h) {
  std::vector<Edge> negatives;
  for (const Edge& e : h.edges()) {
    if (e.sign == kNeg) negatives.push_back(e);
  }
  // Prefer an edge whose removal leaves no K4s behind.
  auto pick = negatives.front();
  for (const Edge& e : negatives) {
    if (k4s_free(h.without_edge(e.u, e.v))) {
      pick = e;
      break;
    }
  }
  const int u = pick.u;
  const int v = pick.v;
  auto phi = color_into_sp9(h.without_edge(u, v));
  if (!phi) return std::nullopt;
  const SignedGraph& t = sp9().graph;
  const int a = (*phi)[u];
  const int b = (*phi)[v];
  if (a != b && t.sign_code(a, b) < 0) return phi;

  // 0' is index 9 and 1' is index 10.
  std::vector<std::pair<int, int>> fixed{{a, 0}};
  if (a != b) fixed.emplace_back(b, 1);
  const auto sigma = find_isomorphism(t, t, fixed);
  if (!sigma) return std::nullopt;
  std::vector<int> map(h.order());
  for (int x = 0; x < h.order(); ++x) map[x] = (*sigma)[(*phi)[x]];
  map[u] = 9;
  if (a != b) map[v] = 10;
  return map;
}

// Vertices {0, 1, 2, 1'} of SP9_STAR form an all-positive K4.
std::optional<std::vector<int>> color_all_positive(const SignedGraph& h) {
  static const std::vector<int> k4{0, 1, 2, 10};
  const SignedGraph target = sp9_star().graph.induced(k4);
  auto found = find_hom_2ec(h, target);
  if (!found) return std::nullopt;
  for (int& x : found->map) x = k4[x];
  return found->map;
}

std::string role_name(int r) {
  static const char* kNames[] = {"s", "a", "b", "c", "d"};
  return kNames[r];
}

}  // namespace

// ---------------------------------------------------------------------------

DegeneracyOrder degeneracy_order(const SignedGraph& g) {
  const int n = g.order();
  DegeneracyOrder out;
  std::vector<int> degree(n);
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!removed[v] && (best < 0 || degree[v] < degree[best])) best = v;
    }
    out.degeneracy = std::max(out.degeneracy, degree[best]);
    out.order.push_back(best);
    removed[best] = 1;
    for (int w : g.neighbors(best)) {
      if (!removed[w]) --degree[w];
    }
  }
  return out;
}

std::optional<Homomorphism> greedy_degenerate_color(const SignedGraph& g,
                                                    const SignedGraph& t, int k,
                                                    bool verify_property) {
  if (k < 1) throw Error("k must be at least 1");
  if (g.max_degree() > k) {
    throw Error("maximum degree " + std::to_string(g.max_degree()) +
                " exceeds k = " + std::to_string(k));
  }
  const DegeneracyOrder dg = degeneracy_order(g);
  if (dg.degeneracy > k - 1) {
    throw Error("graph is " + std::to_string(dg.degeneracy) +
                "-degenerate, expected at most " + std::to_string(k - 1));
  }
  if (verify_property && k >= 2) {
    const int need = (k - 1) / 2 + 1;
    if (!check_p_kn(t, k - 1, need).holds) {
      throw Error("target lacks P_{" + std::to_string(k - 1) + "," +
                  std::to_string(need) + "}");
    }
  }

  const int m = t.order();
  std::vector<int> color(g.order(), -1);
  // Colors compatible with every colored neighbor of v.
  auto allowed = [&](int v) {
    std::vector<char> ok(m, 1);
    for (int w : g.neighbors(v)) {
      if (color[w] < 0) continue;
      const int s = g.sign_code(v, w);
      for (int x = 0; x < m; ++x) {
        ok[x] = ok[x] && t.sign_code(color[w], x) == s;
      }
    }
    return ok;
  };

  for (auto it = dg.order.rbegin(); it != dg.order.rend(); ++it) {
    const int u = *it;
    std::vector<int> pos;
    std::vector<int> neg;
    for (int w : g.neighbors(u)) {
      if (color[w] >= 0) (g.sign_code(u, w) > 0 ? pos : neg).push_back(w);
    }
    const auto& minority = pos.size() <= neg.size() ? pos : neg;
    const auto& majority = pos.size() <= neg.size() ? neg : pos;
    std::set<int> blocked;
    for (int w : minority) blocked.insert(color[w]);
    for (int w : majority) {
      if (!blocked.count(color[w])) continue;
      const auto ok = allowed(w);
      int pick = -1;
      for (int x = 0; x < m && pick < 0; ++x) {
        if (ok[x] && !blocked.count(x)) pick = x;
      }
      if (pick < 0) return std::nullopt;
      color[w] = pick;
    }
    const auto ok = allowed(u);
    const auto first = std::find(ok.begin(), ok.end(), 1);
    if (first == ok.end()) return std::nullopt;
    color[u] = static_cast<int>(first - ok.begin());
  }
  return Homomorphism{HomMode::k2ec, std::move(color), {}};
}

std::vector<K4sOccurrence> find_k4s(const SignedGraph& g) {
  std::map<std::vector<int>, K4sOccurrence> found;
  for (int s = 0; s < g.order(); ++s) {
    const auto nb = g.neighbors(s);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        int a = nb[i];
        int b = nb[j];
        if (g.sign_code(s, a) == g.sign_code(s, b) || g.sign_code(a, b) != 0) {
          continue;
        }
        for (const Sign pol : {kPos, kNeg}) {
          // b is the end joined to s with the K4 sign.
          if (g.sign_code(s, b) != to_int(pol)) std::swap(a, b);
          std::vector<int> apex;
          for (int c : g.neighbors(a)) {
            if (c != s && g.sign_code(a, c) == to_int(pol) &&
                g.sign_code(b, c) == to_int(pol) && g.sign_code(s, c) == 0) {
              apex.push_back(c);
            }
          }
          for (std::size_t x = 0; x < apex.size(); ++x) {
            for (std::size_t y = x + 1; y < apex.size(); ++y) {
              if (g.sign_code(apex[x], apex[y]) != to_int(pol)) continue;
              K4sOccurrence o;
              o.vertices = {s, a, b, apex[x], apex[y]};
              o.polarity = pol;
              std::vector<int> key(o.vertices.begin(), o.vertices.end());
              std::sort(key.begin(), key.end());
              for (int v : o.vertices) {
                for (int w : g.neighbors(v)) {
                  if (!std::binary_search(key.begin(), key.end(), w) &&
                      !o.attach_vertex) {
                    o.attach_vertex = v;
                  }
                }
              }
              found.emplace(std::move(key), o);
            }
          }
        }
      }
    }
  }
  std::vector<K4sOccurrence> out;
  for (auto& [key, o] : found) out.push_back(o);
  return out;
}

TargetedHom color_maxdeg2(const SignedGraph& g, HomMode mode) {
  if (g.max_degree() > 2) {
    throw Error("maximum degree " + std::to_string(g.max_degree()) +
                " exceeds 2");
  }
  const auto comps = connected_components(g);
  TargetedHom out;
  out.hom.mode = mode;
  out.hom.map.assign(g.order(), 0);

  if (mode == HomMode::kSigned) {
    std::vector<int> switched;
    for (const auto& comp : comps) {
      color_signed_component(g, comp, out.hom.map, switched);
    }
    out.hom.switch_witness = SwitchSet(std::move(switched));
    out.target_name = "SIGNED_T";
    out.target = build_gadget(GadgetId::kSignedT).graph;
    return out;
  }

  std::vector<ComponentColors> colored;
  for (const auto& comp : comps) colored.push_back(color_2ec_component(g, comp));
  if (comps.size() <= 1) {
    const bool on_sb = !colored.empty() && colored.front().on_sb;
    if (!colored.empty()) {
      for (const auto& [v, c] : colored.front().color) out.hom.map[v] = c;
    }
    out.target_name = on_sb ? "SB" : "SP5";
    out.target = on_sb ? build_gadget(GadgetId::kSB).graph : sp5().graph;
    return out;
  }
  for (const auto& cc : colored) {
    const auto& embed = cc.on_sb ? sb_in_target6() : sp5_in_target6();
    for (const auto& [v, c] : cc.color) out.hom.map[v] = embed[c];
  }
  out.target_name = "TARGET6";
  out.target = build_gadget(GadgetId::kTarget6).graph;
  return out;
}

const char* to_string(Maxdeg3Route route) {
  switch (route) {
    case Maxdeg3Route::kDegenerate: return "degenerate";
    case Maxdeg3Route::kK4sStitched: return "k4s_stitched";
    case Maxdeg3Route::kAllPositiveCubic: return "all_positive_cubic";
    case Maxdeg3Route::kNegativeEdgeRemap: return "negative_edge_remap";
    case Maxdeg3Route::kDirectSearch: return "direct_search";
  }
  return "unknown";
}

Maxdeg3Result color_maxdeg3(const SignedGraph& g) {
  if (g.max_degree() > 3) {
    throw Error("maximum degree " + std::to_string(g.max_degree()) +
                " exceeds 3");
  }
  const SignedGraph& star = sp9_star().graph;
  Maxdeg3Result out;
  out.hom.mode = HomMode::k2ec;
  out.hom.map.assign(g.order(), 0);

  for (const auto& comp : connected_components(g)) {
    const SignedGraph h = g.induced(comp);
    std::optional<std::vector<int>> map;
    Maxdeg3Route route;
    const auto occ = find_k4s(h);
    if (!occ.empty()) {
      route = Maxdeg3Route::kK4sStitched;
      map = stitch_k4s(h, occ);
    } else if (h.min_degree() < 3) {
      route = Maxdeg3Route::kDegenerate;
      map = color_into_sp9(h);
    } else if (h.count_edges(kNeg) == 0) {
      route = Maxdeg3Route::kAllPositiveCubic;
      map = color_all_positive(h);
    } else {
      route = Maxdeg3Route::kNegativeEdgeRemap;
      map = remap_negative_edge(h);
    }
    if (!map || !verify_hom(h, star, Homomorphism{HomMode::k2ec, *map, {}})) {
      route = Maxdeg3Route::kDirectSearch;
      auto found = find_hom_2ec(h, star);
      if (!found) throw Error("no homomorphism into SP9_STAR found");
      map = found->map;
    }
    for (std::size_t i = 0; i < comp.size(); ++i) out.hom.map[comp[i]] = (*map)[i];
    out.routes.push_back(route);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Extension tables

const ExtensionTable& sp9_star_extension_table() {
  static const ExtensionTable table{
      "sp9_star_k4s_plus",
      GadgetId::kK4sPlus,
      GadgetId::kSP9Star,
      {kPos},
      {
          {"a", {"0", "x+2", "2x"}, {"x", "1", "x+1", "1'", "2x+1"}},
          {"b", {"0", "x+2", "2x"}, {"x+2", "1", "x+1", "1'", "2x+1"}},
          {"c", {"2x+1"}, {"2x", "1", "2x+1", "1'", "x+1"}},
          {"d", {"1"}, {"0", "2", "1", "0", "1'"}},
      }};
  return table;
}

const ExtensionTable& sp9_dagger_plus_extension_table() {
  static const ExtensionTable table{
      "sp9_dagger_k4s_plus",
      GadgetId::kK4sPlus,
      GadgetId::kSP9Dagger,
      {kPos, kNeg},
      {
          {"x", {}, {"x", "1", "0", "2", "z"}},
          {"2x", {}, {"2x", "1", "0", "2", "z"}},
          {"x+1", {}, {"x+1", "0", "1", "2", "z"}},
          {"2x+1", {}, {"2x+1", "0", "1", "2", "z"}},
          {"x+2", {}, {"x+2", "0", "2", "1", "z"}},
      }};
  return table;
}

const ExtensionTable& sp9_dagger_minus_extension_table() {
  static const ExtensionTable table{
      "sp9_dagger_k4s_minus",
      GadgetId::kK4sMinus,
      GadgetId::kSP9Dagger,
      {kPos, kNeg},
      {
          {"0", {}, {"0", "2x", "2x+1", "2x+2", "z"}},
          {"x", {}, {"x", "2x", "2x+1", "2x+2", "z"}},
          {"1", {}, {"1", "2x+1", "2x", "2x+2", "z"}},
          {"x+1", {}, {"x+1", "2x+1", "2x", "2x+2", "z"}},
          {"x+2", {}, {"x+2", "2x+2", "2x", "2x+1", "z"}},
      }};
  return table;
}

TableCheck verify_extension_table(const ExtensionTable& table) {
  const LabeledTarget gadget = build_gadget(table.gadget);
  const LabeledTarget& target =
      table.target == GadgetId::kSP9Star ? sp9_star() : sp9_dagger();
  const SignedGraph& t = target.graph;

  TableCheck out;
  out.table = table.name;
  out.all_valid = true;
  std::set<int> covered_pos;
  std::set<int> covered_neg;
  for (const auto& entry : table.entries) {
    EntryCheck ec;
    ec.panel = entry.panel;
    std::array<int, 5> c{};
    for (int r = 0; r < 5; ++r) c[r] = target.vertex(entry.colors[r]);
    ec.valid = true;
    for (const Edge& e : gadget.graph.edges()) {
      const int have = t.sign_code(c[e.u], c[e.v]);
      if (have == to_int(e.sign)) continue;
      ec.valid = false;
      ec.problem = "roles " + role_name(e.u) + "-" + role_name(e.v) + " need " +
                   to_char(e.sign) + " but " + entry.colors[e.u] + " and " +
                   entry.colors[e.v] + " are " +
                   (have == 0 ? std::string("non-adjacent")
                              : std::string(1, to_char(sign_from_int(have))));
      break;
    }
    for (int v = 0; v < 9; ++v) {
      const int s = t.sign_code(v, c[0]);
      if (s > 0) ec.reachable_positive.push_back(v);
      if (s < 0) ec.reachable_negative.push_back(v);
    }
    for (const auto& claim : entry.claimed_attach) {
      const int v = target.vertex(claim);
      bool ok = false;
      for (Sign s : table.attach_signs) {
        const auto& list = s == kPos ? ec.reachable_positive : ec.reachable_negative;
        ok = ok || std::find(list.begin(), list.end(), v) != list.end();
      }
      if (!ok) ec.bad_claims.push_back(claim);
    }
    if (ec.valid) {
      covered_pos.insert(ec.reachable_positive.begin(), ec.reachable_positive.end());
      covered_neg.insert(ec.reachable_negative.begin(), ec.reachable_negative.end());
    }
    out.all_valid = out.all_valid && ec.valid;
    out.entries.push_back(std::move(ec));
  }
  out.covers_all = true;
  for (Sign s : table.attach_signs) {
    const auto& covered = s == kPos ? covered_pos : covered_neg;
    auto& missing = s == kPos ? out.uncovered_positive : out.uncovered_negative;
    for (int v = 0; v < 9; ++v) {
      if (!covered.count(v)) missing.push_back(v);
    }
    out.covers_all = out.covers_all && missing.empty();
  }
  return out;
}

}  // namespace signhom
