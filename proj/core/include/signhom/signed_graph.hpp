#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace signhom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Sign : std::int8_t { kNegative = -1, kPositive = 1 };

constexpr Sign operator-(Sign s) {
  return s == Sign::kPositive ? Sign::kNegative : Sign::kPositive;
}
constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::kPositive : Sign::kNegative;
}
constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr char to_char(Sign s) { return s == Sign::kPositive ? '+' : '-'; }
constexpr Sign sign_from_int(int v) {
  return v < 0 ? Sign::kNegative : Sign::kPositive;
}

struct Edge {
  int u = 0;
  int v = 0;
  Sign sign = Sign::kPositive;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple graph with a sign on every edge. Vertices are the dense indices
/// 0..order()-1. Values are immutable once constructed; every transformation
/// returns a new graph.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(int order, std::string name = {});
  /// Throws Error on loops, parallel edges or out-of-range endpoints.
  SignedGraph(int order, std::span<const Edge> edges, std::string name = {});

  int order() const { return n_; }
  int size() const { return edge_count_; }
  const std::string& name() const { return name_; }

  bool has_edge(int u, int v) const;
  std::optional<Sign> sign(int u, int v) const;
  /// Unchecked lookup for hot loops: 0 for a non-edge, +1 or -1 otherwise.
  int sign_code(int u, int v) const {
    return matrix_[static_cast<std::size_t>(u) * n_ + v];
  }

  /// Sorted ascending.
  std::span<const int> neighbors(int v) const;
  int degree(int v) const;
  int degree(int v, Sign s) const;
  int max_degree() const;
  int min_degree() const;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  int count_edges(Sign s) const;

  bool is_complete() const;

  SignedGraph with_name(std::string name) const;
  /// Same underlying graph with every sign reversed.
  SignedGraph negated() const;
  /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  SignedGraph induced(std::span<const int> vertices) const;
  SignedGraph without_edge(int u, int v) const;
  SignedGraph with_edge(int u, int v, Sign s) const;

  void check_vertex(int v) const;

  /// Compares order and signed edge sets; the name is metadata and ignored.
  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.n_ == b.n_ && a.matrix_ == b.matrix_;
  }

 private:
  void add_edge_unchecked(int u, int v, Sign s);
  void finalize();

  int n_ = 0;
  int edge_count_ = 0;
  std::vector<std::int8_t> matrix_;
  std::vector<std::vector<int>> adj_;
  std::string name_;
};

/// Connected components, each sorted, ordered by their smallest vertex.
std::vector<std::vector<int>> connected_components(const SignedGraph& g);
bool is_connected(const SignedGraph& g);

/// Vertices of `b` are shifted by a.order().
SignedGraph disjoint_union(const SignedGraph& a, const SignedGraph& b);

SignedGraph make_path(std::span<const Sign> signs);
SignedGraph make_cycle(std::span<const Sign> signs);
/// Complete graph whose signs are all `s`.
SignedGraph make_complete(int n, Sign s);

}  // namespace signhom
