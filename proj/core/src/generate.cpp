#include "signhom/generate.hpp"

#include <algorithm>
#include <map>
#include <bit>
#include <numeric>

#include "signhom/isomorphism.hpp"

namespace signhom {

namespace {

// Isomorphism invariant: per vertex (degree, sorted neighbor degrees,
// triangles through it), sorted.
std::vector<int> invariant(const SignedGraph& g) {
  std::vector<std::vector<int>> rows;
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> row{g.degree(v)};
    std::vector<int> nd;
    int triangles = 0;
    const auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      nd.push_back(g.degree(nb[i]));
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j])) ++triangles;
      }
    }
    std::sort(nd.begin(), nd.end());
    row.insert(row.end(), nd.begin(), nd.end());
    row.push_back(-1 - triangles);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  std::vector<int> out{g.order(), g.size()};
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

class IsoClasses {
 public:
  // Adds g unless an isomorphic graph is already stored.
  void add(SignedGraph g) {
    auto& bucket = buckets_[invariant(g)];
    for (std::size_t i : bucket) {
      if (find_isomorphism(g, graphs_[i])) return;
    }
    bucket.push_back(graphs_.size());
    graphs_.push_back(std::move(g));
  }
  std::vector<SignedGraph> take() { return std::move(graphs_); }

 private:
  std::map<std::vector<int>, std::vector<std::size_t>> buckets_;
  std::vector<SignedGraph> graphs_;
};

}  // namespace

std::vector<SignedGraph> graphs_max_degree(int n, int max_degree,
                                           bool connected_only) {
  if (n < 0) throw Error("order must be non-negative");
  if (max_degree < 0) throw Error("maximum degree must be non-negative");
  std::vector<SignedGraph> level{SignedGraph(0)};
  for (int order = 1; order <= n; ++order) {
    IsoClasses next;
    const int v = order - 1;
    for (const SignedGraph& g : level) {
      std::vector<int> open;
      for (int x = 0; x < g.order(); ++x) {
        if (g.degree(x) < max_degree) open.push_back(x);
      }
      const int k = static_cast<int>(open.size());
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        if (std::popcount(mask) > max_degree) continue;
        std::vector<Edge> edges = g.edges();
        for (int i = 0; i < k; ++i) {
          if (mask >> i & 1u) edges.push_back({open[i], v, Sign::kPositive});
        }
        next.add(SignedGraph(order, edges));
      }
    }
    level = next.take();
  }
  std::vector<SignedGraph> out;
  for (std::size_t i = 0; i < level.size(); ++i) {
    if (connected_only && !is_connected(level[i])) continue;
    out.push_back(level[i].with_name("G" + std::to_string(n) + "_" +
                                     std::to_string(out.size())));
  }
  return out;
}

SignedGraph with_signature(const SignedGraph& g, std::uint64_t mask) {
  auto edges = g.edges();
  if (edges.size() > 63) throw Error("too many edges for a 64-bit signature");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    edges[i].sign = mask >> i & 1u ? Sign::kNegative : Sign::kPositive;
  }
  return SignedGraph(g.order(), edges, g.name());
}

SignedGraph random_signature(const SignedGraph& g, std::mt19937_64& rng) {
  auto edges = g.edges();
  std::bernoulli_distribution coin(0.5);
  for (Edge& e : edges) e.sign = coin(rng) ? Sign::kNegative : Sign::kPositive;
  return SignedGraph(g.order(), edges, g.name());
}

SignedGraph random_connected_cubic(int n, std::mt19937_64& rng) {
  if (n < 4 || n % 2 != 0) throw Error("cubic graphs need an even order >= 4");
  std::vector<int> points(3 * n);
  while (true) {
    std::iota(points.begin(), points.end(), 0);
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Edge> edges;
    std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      const int u = points[i] / 3;
      const int v = points[i + 1] / 3;
      if (u == v || seen[u * n + v]) {
        simple = false;
        break;
      }
      seen[u * n + v] = seen[v * n + u] = 1;
      edges.push_back({std::min(u, v), std::max(u, v), Sign::kPositive});
    }
    if (!simple) continue;
    SignedGraph g(n, edges);
    if (is_connected(g)) return g;
  }
}

SignedGraph random_signed_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(p);
  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) {
        edges.push_back({u, v, coin(rng) ? Sign::kNegative : Sign::kPositive});
      }
    }
  }
  return SignedGraph(n, edges);
}

}  // namespace signhom
