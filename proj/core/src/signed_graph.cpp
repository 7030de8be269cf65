#include "signhom/signed_graph.hpp"

#include <algorithm>
#include <queue>

namespace signhom {

SignedGraph::SignedGraph(int order, std::string name)
    : n_(order), name_(std::move(name)) {
  if (order < 0) throw Error("graph order must be non-negative");
  matrix_.assign(static_cast<std::size_t>(n_) * n_, 0);
  adj_.assign(n_, {});
}

SignedGraph::SignedGraph(int order, std::span<const Edge> edges,
                         std::string name)
    : SignedGraph(order, std::move(name)) {
  for (const Edge& e : edges) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) {
      throw Error("loop at vertex " + std::to_string(e.u));
    }
    if (sign_code(e.u, e.v) != 0) {
      throw Error("duplicate edge {" + std::to_string(e.u) + "," +
                  std::to_string(e.v) + "}");
    }
    add_edge_unchecked(e.u, e.v, e.sign);
  }
  finalize();
}

void SignedGraph::add_edge_unchecked(int u, int v, Sign s) {
  const auto code = static_cast<std::int8_t>(to_int(s));
  matrix_[static_cast<std::size_t>(u) * n_ + v] = code;
  matrix_[static_cast<std::size_t>(v) * n_ + u] = code;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++edge_count_;
}

void SignedGraph::finalize() {
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

void SignedGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw Error("vertex " + std::to_string(v) + " out of range for order " +
                std::to_string(n_));
  }
}

bool SignedGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return sign_code(u, v) != 0;
}

std::optional<Sign> SignedGraph::sign(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const int c = sign_code(u, v);
  if (c == 0) return std::nullopt;
  return sign_from_int(c);
}

std::span<const int> SignedGraph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int SignedGraph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

int SignedGraph::degree(int v, Sign s) const {
  check_vertex(v);
  const int code = to_int(s);
  return static_cast<int>(std::count_if(
      adj_[v].begin(), adj_[v].end(),
      [&](int w) { return sign_code(v, w) == code; }));
}

int SignedGraph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max<int>(best, list.size());
  return best;
}

int SignedGraph::min_degree() const {
  if (n_ == 0) return 0;
  int best = n_;
  for (const auto& list : adj_) best = std::min<int>(best, list.size());
  return best;
}

std::vector<Edge> SignedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.push_back({u, v, sign_from_int(sign_code(u, v))});
    }
  }
  return out;
}

int SignedGraph::count_edges(Sign s) const {
  int count = 0;
  for (const Edge& e : edges()) count += e.sign == s ? 1 : 0;
  return count;
}

bool SignedGraph::is_complete() const {
  return 2 * static_cast<long long>(edge_count_) ==
         static_cast<long long>(n_) * (n_ - 1);
}

SignedGraph SignedGraph::with_name(std::string name) const {
  SignedGraph copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

SignedGraph SignedGraph::negated() const {
  SignedGraph copy = *this;
  for (auto& c : copy.matrix_) c = static_cast<std::int8_t>(-c);
  return copy;
}

SignedGraph SignedGraph::induced(std::span<const int> vertices) const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i]);
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const int c = sign_code(vertices[i], vertices[j]);
      if (c != 0) {
        out.push_back({static_cast<int>(i), static_cast<int>(j),
                       sign_from_int(c)});
      }
    }
  }
  return SignedGraph(static_cast<int>(vertices.size()), out);
}

SignedGraph SignedGraph::without_edge(int u, int v) const {
  if (!has_edge(u, v)) {
    throw Error("no edge {" + std::to_string(u) + "," + std::to_string(v) +
                "} to remove");
  }
  std::vector<Edge> out = edges();
  std::erase_if(out, [&](const Edge& e) {
    return (e.u == u && e.v == v) || (e.u == v && e.v == u);
  });
  return SignedGraph(n_, out, name_);
}

SignedGraph SignedGraph::with_edge(int u, int v, Sign s) const {
  std::vector<Edge> out = edges();
  out.push_back({u, v, s});
  return SignedGraph(n_, out, name_);
}

std::vector<std::vector<int>> connected_components(const SignedGraph& g) {
  const int n = g.order();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<int> comp;
    std::queue<int> queue;
    queue.push(root);
    seen[root] = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      comp.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const SignedGraph& g) {
  return connected_components(g).size() <= 1;
}

SignedGraph disjoint_union(const SignedGraph& a, const SignedGraph& b) {
  std::vector<Edge> out = a.edges();
  for (Edge e : b.edges()) {
    e.u += a.order();
    e.v += a.order();
    out.push_back(e);
  }
  return SignedGraph(a.order() + b.order(), out);
}

SignedGraph make_path(std::span<const Sign> signs) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    out.push_back({static_cast<int>(i), static_cast<int>(i + 1), signs[i]});
  }
  return SignedGraph(static_cast<int>(signs.size()) + 1, out);
}

SignedGraph make_cycle(std::span<const Sign> signs) {
  const int n = static_cast<int>(signs.size());
  if (n < 3) throw Error("a cycle needs at least 3 vertices");
  std::vector<Edge> out;
  for (int i = 0; i < n; ++i) out.push_back({i, (i + 1) % n, signs[i]});
  return SignedGraph(n, out);
}

SignedGraph make_complete(int n, Sign s) {
  std::vector<Edge> out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) out.push_back({u, v, s});
  }
  return SignedGraph(n, out);
}

}  // namespace signhom
