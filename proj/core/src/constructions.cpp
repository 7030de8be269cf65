#include "signhom/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "signhom/gf.hpp"

namespace signhom {

namespace {

constexpr Sign kPos = Sign::kPositive;
constexpr Sign kNeg = Sign::kNegative;

struct CatalogEntry {
  GadgetId id;
  std::string_view name;
};

constexpr std::array<CatalogEntry, 10> kCatalog{{
    {GadgetId::kSB, "SB"},
    {GadgetId::kPath4, "PATH4"},
    {GadgetId::kCandidate5, "CANDIDATE5"},
    {GadgetId::kTarget6, "TARGET6"},
    {GadgetId::kSignedT, "SIGNED_T"},
    {GadgetId::kK4sPlus, "K4S_PLUS"},
    {GadgetId::kK4sMinus, "K4S_MINUS"},
    {GadgetId::kClique6, "CLIQUE6"},
    {GadgetId::kSP9Star, "SP9_STAR"},
    {GadgetId::kSP9Dagger, "SP9_DAGGER"},
}};

constexpr std::array<GadgetId, 10> kAllGadgets{
    GadgetId::kSB,       GadgetId::kPath4,   GadgetId::kCandidate5,
    GadgetId::kTarget6,  GadgetId::kSignedT, GadgetId::kK4sPlus,
    GadgetId::kK4sMinus, GadgetId::kClique6, GadgetId::kSP9Star,
    GadgetId::kSP9Dagger};

constexpr std::array<int, 5> kSp5InTarget6{0, 2, 1, 5, 3};
constexpr std::array<int, 5> kSbInTarget6{4, 0, 2, 1, 3};

std::vector<std::string> index_labels(int n, int first = 0) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i + first));
  return out;
}

// Edges given with 1-based vertex labels.
LabeledTarget from_one_based(int n, std::initializer_list<Edge> one_based,
                          std::string name) {
  std::vector<Edge> edges;
  for (Edge e : one_based) edges.push_back({e.u - 1, e.v - 1, e.sign});
  return {SignedGraph(n, edges, std::move(name)), index_labels(n, 1)};
}

LabeledTarget k4s(Sign polarity, std::string name) {
  const Sign s = polarity;
  std::vector<Edge> edges{{0, 1, -s}, {0, 2, s}, {1, 3, s},
                          {1, 4, s},  {2, 3, s}, {2, 4, s}, {3, 4, s}};
  return {SignedGraph(5, edges, std::move(name)),
          {"s", "a", "b", "c", "d"}};
}

// Collects edges from per-vertex rules and insists that both endpoints agree.
class RuleCollector {
 public:
  explicit RuleCollector(int n) : n_(n) {}

  void add(int u, int offset, Sign s) {
    const int v = ((u + offset) % n_ + n_) % n_;
    const auto key = std::minmax(u, v);
    auto [it, inserted] = signs_.emplace(key, s);
    if (!inserted && it->second != s) {
      throw Error("construction rules disagree on {" + std::to_string(u) +
                  "," + std::to_string(v) + "}");
    }
    claimed_[key].insert(u);
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (const auto& [key, s] : signs_) {
      if (claimed_.at(key).size() != 2) {
        throw Error("edge {" + std::to_string(key.first) + "," +
                    std::to_string(key.second) +
                    "} generated from one endpoint only");
      }
      out.push_back({key.first, key.second, s});
    }
    return out;
  }

 private:
  int n_;
  std::map<std::pair<int, int>, Sign> signs_;
  std::map<std::pair<int, int>, std::set<int>> claimed_;
};

}  // namespace

int LabeledTarget::vertex(std::string_view label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw Error("no vertex labelled '" + std::string(label) + "'");
  }
  return static_cast<int>(it - labels.begin());
}

std::string_view gadget_name(GadgetId id) {
  for (const auto& entry : kCatalog) {
    if (entry.id == id) return entry.name;
  }
  throw Error("unknown gadget id");
}

GadgetId parse_gadget(std::string_view name) {
  for (const auto& entry : kCatalog) {
    if (entry.name == name) return entry.id;
  }
  throw Error("unknown gadget '" + std::string(name) + "'");
}

std::span<const GadgetId> all_gadgets() { return kAllGadgets; }

LabeledTarget build_sp(int q) {
  const Field f(q);  // rejects non prime powers
  if (q % 4 != 1) {
    throw Error("SP_q needs q = 1 mod 4, got " + std::to_string(q));
  }
  std::vector<Edge> edges;
  for (int u = 0; u < q; ++u) {
    for (int v = u + 1; v < q; ++v) {
      edges.push_back(
          {u, v, f.is_square_index(f.sub_index(u, v)) ? kPos : kNeg});
    }
  }
  std::vector<std::string> labels;
  for (int i = 0; i < q; ++i) labels.push_back(f.to_string(i));
  return {SignedGraph(q, edges, "SP" + std::to_string(q)), std::move(labels)};
}

LabeledTarget build_rho(const LabeledTarget& g) {
  const int n = g.graph.order();
  std::vector<Edge> edges;
  for (const Edge& e : g.graph.edges()) {
    edges.push_back({e.u, e.v, e.sign});
    edges.push_back({e.u + n, e.v + n, e.sign});
    edges.push_back({e.u, e.v + n, -e.sign});
    edges.push_back({e.u + n, e.v, -e.sign});
  }
  std::vector<std::string> labels;
  for (const auto& l : g.labels) labels.push_back(l + "^+");
  for (const auto& l : g.labels) labels.push_back(l + "^-");
  std::string name = g.graph.name().empty() ? "" : "rho(" + g.graph.name() + ")";
  return {SignedGraph(2 * n, edges, std::move(name)), std::move(labels)};
}

LabeledTarget build_rho(const SignedGraph& g) {
  return build_rho(LabeledTarget{g, index_labels(g.order())});
}

LabeledTarget build_sp_plus(int q) {
  LabeledTarget sp = build_sp(q);
  std::vector<Edge> edges = sp.graph.edges();
  for (int v = 0; v < q; ++v) edges.push_back({v, q, kPos});
  sp.labels.push_back("inf");
  return {SignedGraph(q + 1, edges, "SP" + std::to_string(q) + "+"),
          std::move(sp.labels)};
}

LabeledTarget build_tr(int q) {
  LabeledTarget tr = build_rho(build_sp_plus(q));
  tr.graph = tr.graph.with_name("TR(SP" + std::to_string(q) + ")");
  return tr;
}

LabeledTarget build_plus2(const LabeledTarget& t, int x, int y) {
  const SignedGraph& g = t.graph;
  const auto s = g.sign(x, y);
  if (!s) throw Error("plus2 needs an edge between x and y");
  if (*s != kPos) throw Error("plus2 needs a positive edge xy");
  const int n = g.order();
  const int xp = n;
  const int yp = n + 1;
  std::vector<Edge> edges = g.edges();
  for (int w : g.neighbors(x)) edges.push_back({w, xp, sign_from_int(g.sign_code(x, w))});
  for (int w : g.neighbors(y)) edges.push_back({w, yp, sign_from_int(g.sign_code(y, w))});
  edges.push_back({xp, yp, kNeg});
  edges.push_back({x, xp, kNeg});
  edges.push_back({y, yp, kPos});
  std::vector<std::string> labels = t.labels;
  labels.push_back(t.labels[x] + "'");
  labels.push_back(t.labels[y] + "'");
  std::string name = g.name().empty() ? "" : g.name() + "*";
  return {SignedGraph(n + 2, edges, std::move(name)), std::move(labels)};
}

LabeledTarget build_gadget(GadgetId id) {
  switch (id) {
    case GadgetId::kSB: {
      // Vertex 0 is the shared center.
      std::vector<Edge> edges{{0, 1, kPos}, {0, 2, kPos}, {1, 2, kPos},
                              {0, 3, kNeg}, {0, 4, kNeg}, {3, 4, kNeg}};
      return {SignedGraph(5, edges, "SB"), index_labels(5)};
    }
    case GadgetId::kPath4:
      // Elements 1..4 of SP_5.
      return from_one_based(4,
                         {{1, 2, kPos}, {3, 4, kPos}, {1, 3, kNeg}, {2, 4, kNeg}},
                         "PATH4");
    case GadgetId::kCandidate5:
      return from_one_based(5,
                         {{1, 5, kPos}, {1, 2, kPos}, {2, 5, kPos}, {3, 5, kPos},
                          {2, 4, kPos}, {1, 4, kNeg}, {1, 3, kNeg}, {3, 4, kNeg},
                          {4, 5, kNeg}, {2, 3, kNeg}},
                         "CANDIDATE5");
    case GadgetId::kTarget6:
      // K_6 minus {5,6}.
      return from_one_based(6,
                         {{1, 5, kPos}, {3, 5, kPos}, {1, 3, kPos}, {1, 4, kPos},
                          {2, 3, kPos}, {4, 6, kPos}, {2, 6, kPos}, {4, 5, kNeg},
                          {2, 5, kNeg}, {1, 2, kNeg}, {3, 4, kNeg}, {1, 6, kNeg},
                          {3, 6, kNeg}, {2, 4, kNeg}},
                         "TARGET6");
    case GadgetId::kSignedT:
      // K_4 minus {2,4}; the only negative edge is {3,4}.
      return from_one_based(4,
                         {{1, 2, kPos}, {2, 3, kPos}, {3, 4, kNeg}, {1, 4, kPos},
                          {1, 3, kPos}},
                         "SIGNED_T");
    case GadgetId::kK4sPlus:
      return k4s(kPos, "K4S_PLUS");
    case GadgetId::kK4sMinus:
      return k4s(kNeg, "K4S_MINUS");
    case GadgetId::kClique6:
      return from_one_based(6,
                         {{1, 4, kNeg}, {2, 5, kNeg}, {3, 6, kNeg}, {1, 5, kPos},
                          {1, 6, kPos}, {2, 4, kPos}, {2, 6, kPos}, {3, 4, kPos},
                          {3, 5, kPos}},
                         "CLIQUE6");
    case GadgetId::kSP9Star: {
      LabeledTarget star = build_plus2(build_sp(9), 0, 1);
      star.graph = star.graph.with_name("SP9_STAR");
      return star;
    }
    case GadgetId::kSP9Dagger: {
      LabeledTarget sp = build_sp(9);
      std::vector<Edge> edges = sp.graph.edges();
      for (const char* l : {"0", "1", "2"}) edges.push_back({sp.vertex(l), 9, kPos});
      for (const char* l : {"2x", "2x+1", "2x+2"}) {
        edges.push_back({sp.vertex(l), 9, kNeg});
      }
      sp.labels.push_back("z");
      return {SignedGraph(10, edges, "SP9_DAGGER"), std::move(sp.labels)};
    }
  }
  throw Error("unknown gadget id");
}

SignedGraph build_2ec_clique(int k) {
  if (k < 3) throw Error("2-edge-colored clique family needs k >= 3");
  const int n = 4 * (k - 1);
  RuleCollector rules(n);
  for (int u = 0; u < n; ++u) {
    if (u % 2 == 0) {
      rules.add(u, 2 * (k - 1), kPos);
      for (int i = 0; i <= k - 3; ++i) rules.add(u, 2 * i + 1, kPos);
      rules.add(u, -1, kNeg);
    } else {
      for (int i = 0; i <= k - 3; ++i) rules.add(u, -2 * i - 1, kPos);
      rules.add(u, 1, kNeg);
      rules.add(u, 2 * (k - 1), kNeg);
    }
  }
  return SignedGraph(n, rules.edges(), "2ec_clique_k" + std::to_string(k));
}

SignedGraph build_signed_clique(int k) {
  if (k < 4) throw Error("signed clique family needs k >= 4");
  const int n = 2 * (k + 1);
  RuleCollector rules(n);
  for (int u = 0; u < n; ++u) {
    const Sign forward = u % 2 == 0 ? kPos : kNeg;
    rules.add(u, 1, forward);
    for (int i = 0; i <= k - 3; ++i) rules.add(u, 4 + 2 * i, forward);
    rules.add(u, -1, -forward);
  }
  return SignedGraph(n, rules.edges(), "signed_clique_k" + std::to_string(k));
}

const std::array<int, 5>& sp5_in_target6() { return kSp5InTarget6; }
const std::array<int, 5>& sb_in_target6() { return kSbInTarget6; }

}  // namespace signhom
