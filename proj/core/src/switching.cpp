#include "signhom/switching.hpp"

#include <algorithm>
#include <iterator>
#include <queue>

namespace signhom {

SwitchSet::SwitchSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool SwitchSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

SwitchSet SwitchSet::symmetric_difference(const SwitchSet& other) const {
  std::vector<int> out;
  std::set_symmetric_difference(members_.begin(), members_.end(),
                                other.members_.begin(), other.members_.end(),
                                std::back_inserter(out));
  return SwitchSet(std::move(out));
}

void SwitchSet::check_against(int order) const {
  for (int v : members_) {
    if (v < 0 || v >= order) {
      throw Error("switch vertex " + std::to_string(v) +
                  " out of range for order " + std::to_string(order));
    }
  }
}

SignedGraph switch_vertices(const SignedGraph& g, const SwitchSet& s) {
  s.check_against(g.order());
  std::vector<char> in(g.order(), 0);
  for (int v : s.members()) in[v] = 1;
  std::vector<Edge> out = g.edges();
  for (Edge& e : out) {
    if (in[e.u] != in[e.v]) e.sign = -e.sign;
  }
  return SignedGraph(g.order(), out, g.name());
}

bool is_balanced_cycle(const SignedGraph& g, std::span<const int> cycle) {
  if (cycle.size() < 2) throw Error("a cycle needs at least two vertices");
  int negatives = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const int u = cycle[i];
    const int v = cycle[(i + 1) % cycle.size()];
    const auto s = g.sign(u, v);
    if (!s) {
      throw Error("{" + std::to_string(u) + "," + std::to_string(v) +
                  "} is not an edge");
    }
    negatives += *s == Sign::kNegative ? 1 : 0;
  }
  return negatives % 2 == 0;
}

namespace {

struct BfsForest {
  std::vector<int> side;  // 1 when the vertex must be switched
  std::vector<int> parent;
  std::vector<int> roots;
};

BfsForest bfs_forest(const SignedGraph& g) {
  const int n = g.order();
  BfsForest f{std::vector<int>(n, -1), std::vector<int>(n, -1), {}};
  for (int root = 0; root < n; ++root) {
    if (f.side[root] != -1) continue;
    f.roots.push_back(root);
    f.side[root] = 0;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int w : g.neighbors(v)) {
        if (f.side[w] != -1) continue;
        const int flip = g.sign_code(v, w) < 0 ? 1 : 0;
        f.side[w] = f.side[v] ^ flip;
        f.parent[w] = v;
        queue.push(w);
      }
    }
  }
  return f;
}

}  // namespace

SwitchSet normalizing_switch(const SignedGraph& g) {
  const BfsForest f = bfs_forest(g);
  std::vector<int> members;
  for (int v = 0; v < g.order(); ++v) {
    if (f.side[v] == 1) members.push_back(v);
  }
  return SwitchSet(std::move(members));
}

CanonicalSwitchForm canonical_switch_form(const SignedGraph& g) {
  const BfsForest f = bfs_forest(g);
  CanonicalSwitchForm form;
  form.order = g.order();
  form.component_roots = f.roots;
  for (const Edge& e : g.edges()) {
    form.underlying.emplace_back(e.u, e.v);
    const bool tree = f.parent[e.v] == e.u || f.parent[e.u] == e.v;
    if (tree) continue;
    const Sign s = (f.side[e.u] != f.side[e.v]) ? -e.sign : e.sign;
    form.cotree.push_back({e.u, e.v, s});
  }
  return form;
}

std::optional<SwitchSet> switch_equivalent(const SignedGraph& a,
                                           const SignedGraph& b) {
  if (a.order() != b.order()) return std::nullopt;
  const CanonicalSwitchForm fa = canonical_switch_form(a);
  const CanonicalSwitchForm fb = canonical_switch_form(b);
  if (fa != fb) return std::nullopt;
  // switch(a, Sa) == switch(b, Sb), and switching is an involution, so
  // b == switch(a, Sa ^ Sb). Neither contains a root, hence neither does
  // the difference.
  return normalizing_switch(a).symmetric_difference(normalizing_switch(b));
}

}  // namespace signhom
