#include "signhom/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace signhom {

namespace {

// Colors for the disjoint union of g (indices 0..n-1) and h (n..2n-1).
std::vector<int> refine(const SignedGraph& g, const SignedGraph& h,
                        std::span<const std::pair<int, int>> fixed) {
  const int n = g.order();
  auto graph_of = [&](int x) -> const SignedGraph& { return x < n ? g : h; };
  auto local = [&](int x) { return x < n ? x : x - n; };

  std::vector<int> marker(2 * n, 0);
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    g.check_vertex(fixed[i].first);
    h.check_vertex(fixed[i].second);
    marker[fixed[i].first] = static_cast<int>(i) + 1;
    marker[n + fixed[i].second] = static_cast<int>(i) + 1;
  }

  std::vector<int> color(2 * n);
  {
    std::map<std::tuple<int, int, int>, int> ids;
    std::vector<std::tuple<int, int, int>> keys(2 * n);
    for (int x = 0; x < 2 * n; ++x) {
      const SignedGraph& gr = graph_of(x);
      keys[x] = {marker[x], gr.degree(local(x), Sign::kPositive),
                 gr.degree(local(x), Sign::kNegative)};
      ids.emplace(keys[x], 0);
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int x = 0; x < 2 * n; ++x) color[x] = ids[keys[x]];
  }

  int classes = *std::max_element(color.begin(), color.end()) + 1;
  while (true) {
    using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
    std::vector<Signature> sig(2 * n);
    std::map<Signature, int> ids;
    for (int x = 0; x < 2 * n; ++x) {
      const SignedGraph& gr = graph_of(x);
      const int v = local(x);
      const int offset = x < n ? 0 : n;
      std::vector<std::pair<int, int>> around;
      for (int w : gr.neighbors(v)) {
        around.emplace_back(color[w + offset], gr.sign_code(v, w));
      }
      std::sort(around.begin(), around.end());
      sig[x] = {color[x], std::move(around)};
      ids.emplace(sig[x], 0);
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int x = 0; x < 2 * n; ++x) color[x] = ids[sig[x]];
    if (next == classes) break;
    classes = next;
  }
  return color;
}

class IsoSearch {
 public:
  IsoSearch(const SignedGraph& g, const SignedGraph& h,
            const std::vector<int>& color,
            const std::function<bool(const Permutation&)>& visit)
      : g_(g), h_(h), n_(g.order()), visit_(visit) {
    gcolor_.assign(color.begin(), color.begin() + n_);
    hcolor_.assign(color.begin() + n_, color.end());
    build_order();
    map_.assign(n_, -1);
    used_.assign(n_, 0);
  }

  void run() { descend(0); }

 private:
  void build_order() {
    std::vector<int> class_size(2 * n_ + 1, 0);
    for (int c : gcolor_) ++class_size[c];
    std::vector<int> placed(n_, 0);
    std::vector<int> links(n_, 0);
    for (int step = 0; step < n_; ++step) {
      int best = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        if (best < 0 || links[v] > links[best] ||
            (links[v] == links[best] &&
             class_size[gcolor_[v]] < class_size[gcolor_[best]])) {
          best = v;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
      for (int w : g_.neighbors(best)) ++links[w];
    }
  }

  bool descend(int depth) {
    if (depth == n_) return visit_(map_);
    const int u = order_[depth];
    for (int x = 0; x < n_; ++x) {
      if (used_[x] || hcolor_[x] != gcolor_[u]) continue;
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i) {
        const int w = order_[i];
        ok = g_.sign_code(u, w) == h_.sign_code(x, map_[w]);
      }
      if (!ok) continue;
      map_[u] = x;
      used_[x] = 1;
      const bool more = descend(depth + 1);
      used_[x] = 0;
      map_[u] = -1;
      if (!more) return false;
    }
    return true;
  }

  const SignedGraph& g_;
  const SignedGraph& h_;
  int n_;
  const std::function<bool(const Permutation&)>& visit_;
  std::vector<int> gcolor_;
  std::vector<int> hcolor_;
  std::vector<int> order_;
  Permutation map_;
  std::vector<char> used_;
};

Permutation compose(const Permutation& a, const Permutation& b) {
  // (a after b)(v) = a[b[v]]
  Permutation out(b.size());
  for (std::size_t v = 0; v < b.size(); ++v) out[v] = a[b[v]];
  return out;
}

void check_limit(const SignedGraph& g, int vertex_limit) {
  if (g.order() > vertex_limit) {
    throw Error("order " + std::to_string(g.order()) +
                " exceeds the automorphism vertex limit " +
                std::to_string(vertex_limit));
  }
}

}  // namespace

void for_each_isomorphism(const SignedGraph& g, const SignedGraph& h,
                          const std::function<bool(const Permutation&)>& visit,
                          std::span<const std::pair<int, int>> fixed) {
  if (g.order() != h.order() || g.size() != h.size()) return;
  const std::vector<int> color = refine(g, h, fixed);
  std::vector<int> gc(color.begin(), color.begin() + g.order());
  std::vector<int> hc(color.begin() + g.order(), color.end());
  std::sort(gc.begin(), gc.end());
  std::sort(hc.begin(), hc.end());
  if (gc != hc) return;
  IsoSearch(g, h, color, visit).run();
}

std::optional<Permutation> find_isomorphism(
    const SignedGraph& g, const SignedGraph& h,
    std::span<const std::pair<int, int>> fixed) {
  std::optional<Permutation> found;
  for_each_isomorphism(
      g, h,
      [&](const Permutation& p) {
        found = p;
        return false;
      },
      fixed);
  return found;
}

bool is_automorphism(const SignedGraph& g, const Permutation& p) {
  if (static_cast<int>(p.size()) != g.order()) return false;
  std::vector<char> seen(g.order(), 0);
  for (int x : p) {
    if (x < 0 || x >= g.order() || seen[x]) return false;
    seen[x] = 1;
  }
  for (const Edge& e : g.edges()) {
    if (g.sign_code(p[e.u], p[e.v]) != to_int(e.sign)) return false;
  }
  return true;
}

AutomorphismGroup automorphisms(const SignedGraph& g, int vertex_limit,
                                std::size_t element_limit) {
  check_limit(g, vertex_limit);
  AutomorphismGroup group;
  for_each_isomorphism(g, g, [&](const Permutation& p) {
    if (group.elements.size() >= element_limit) {
      throw Error("automorphism group exceeds " +
                  std::to_string(element_limit) + " elements");
    }
    group.elements.push_back(p);
    return true;
  });
  std::sort(group.elements.begin(), group.elements.end());
  group.order = static_cast<long long>(group.elements.size());

  std::set<Permutation> closure{group.elements.front()};
  for (const Permutation& p : group.elements) {
    if (closure.count(p)) continue;
    group.generators.push_back(p);
    std::vector<Permutation> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      std::vector<Permutation> fresh;
      for (const Permutation& x : frontier) {
        for (const Permutation& s : group.generators) {
          Permutation y = compose(s, x);
          if (closure.insert(y).second) fresh.push_back(std::move(y));
        }
      }
      frontier = std::move(fresh);
    }
  }
  return group;
}

PropertyReport is_kn_transitive(const SignedGraph& g, int n,
                                int vertex_limit) {
  if (n < 1 || n > 3) throw Error("K_n-transitivity is supported for n = 1, 2, 3");
  check_limit(g, vertex_limit);
  const AutomorphismGroup group = automorphisms(g, vertex_limit);

  // Ordered cliques grouped by the signs of their pairs.
  std::map<std::vector<int>, std::vector<std::vector<int>>> classes;
  std::vector<int> tuple;
  std::function<void()> grow = [&] {
    if (static_cast<int>(tuple.size()) == n) {
      std::vector<int> key;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) key.push_back(g.sign_code(tuple[i], tuple[j]));
      }
      classes[key].push_back(tuple);
      return;
    }
    for (int v = 0; v < g.order(); ++v) {
      bool ok = true;
      for (int w : tuple) ok = ok && g.sign_code(v, w) != 0;
      if (!ok) continue;
      tuple.push_back(v);
      grow();
      tuple.pop_back();
    }
  };
  grow();

  PropertyReport r;
  r.kind = "K" + std::to_string(n) + "_transitive";
  r.n = n;
  r.count = static_cast<int>(group.order);
  r.holds = true;
  for (const auto& [key, tuples] : classes) {
    std::set<std::vector<int>> orbit;
    for (const Permutation& p : group.elements) {
      std::vector<int> image;
      for (int v : tuples.front()) image.push_back(p[v]);
      orbit.insert(std::move(image));
    }
    if (orbit.size() == tuples.size()) continue;
    r.holds = false;
    for (const auto& t : tuples) {
      if (!orbit.count(t)) {
        r.tuple = t;
        break;
      }
    }
    r.detail = "tuple not in the orbit of " +
               [&] {
                 std::string s;
                 for (int v : tuples.front()) s += (s.empty() ? "" : ",") + std::to_string(v);
                 return "(" + s + ")";
               }();
    break;
  }
  return r;
}

PropertyReport is_antiautomorphic(const SignedGraph& g, int vertex_limit) {
  check_limit(g, vertex_limit);
  PropertyReport r;
  r.kind = "antiautomorphic";
  const auto iso = find_isomorphism(g, g.negated());
  r.holds = iso.has_value();
  if (iso) r.tuple = *iso;
  return r;
}

}  // namespace signhom
