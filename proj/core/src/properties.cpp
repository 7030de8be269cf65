#include "signhom/properties.hpp"

#include <algorithm>
#include <limits>

namespace signhom {

namespace {

struct Candidate {
  int vertex;
  unsigned mask;  // bit i set when the edge to the i-th clique vertex is negative
};

class PkSearch {
 public:
  PkSearch(const SignedGraph& g, int k) : g_(g), k_(k), counts_(1u << k) {}

  PkMinimum run() {
    std::vector<Candidate> all;
    for (int v = 0; v < g_.order(); ++v) all.push_back({v, 0});
    extend(all, 0);
    return best_;
  }

 private:
  void extend(const std::vector<Candidate>& common, int depth) {
    const int last = chosen_.empty() ? -1 : chosen_.back();
    for (const Candidate& c : common) {
      if (c.vertex <= last) continue;
      const int v = c.vertex;
      chosen_.push_back(v);
      if (depth + 1 == k_) {
        // Last level: count directly instead of materializing the list.
        std::fill(counts_.begin(), counts_.end(), 0);
        for (const Candidate& w : common) {
          const int code = g_.sign_code(v, w.vertex);
          if (code != 0) ++counts_[w.mask | (code < 0 ? 1u << depth : 0u)];
        }
        record();
        chosen_.pop_back();
        continue;
      }
      std::vector<Candidate> next;
      next.reserve(common.size());
      for (const Candidate& w : common) {
        const int code = g_.sign_code(v, w.vertex);
        if (code == 0) continue;
        next.push_back({w.vertex, w.mask | (code < 0 ? 1u << depth : 0u)});
      }
      extend(next, depth + 1);
      chosen_.pop_back();
    }
  }

  void record() {
    for (unsigned mask = 0; mask < counts_.size(); ++mask) {
      if (!best_.any_clique || counts_[mask] < best_.count) {
        best_.any_clique = true;
        best_.count = counts_[mask];
        best_.tuple = chosen_;
        best_.signs.clear();
        for (int i = 0; i < k_; ++i) {
          best_.signs.push_back(mask >> i & 1u ? Sign::kNegative
                                               : Sign::kPositive);
        }
      }
    }
  }

  const SignedGraph& g_;
  int k_;
  std::vector<int> counts_;
  std::vector<int> chosen_;
  PkMinimum best_;
};

void check_k(const SignedGraph& g, int k) {
  if (k < 1) throw Error("k must be at least 1");
  if (k > g.order()) {
    throw Error("k = " + std::to_string(k) + " exceeds the order " +
                std::to_string(g.order()));
  }
  if (k > 16) throw Error("k above 16 is not supported");
}

}  // namespace

PkMinimum p_k_minimum(const SignedGraph& g, int k) {
  check_k(g, k);
  return PkSearch(g, k).run();
}

PropertyReport check_p_kn(const SignedGraph& g, int k, int n) {
  if (n < 0) throw Error("n must be non-negative");
  const PkMinimum m = p_k_minimum(g, k);
  PropertyReport r;
  r.kind = "P_k_n";
  r.k = k;
  r.n = n;
  r.holds = !m.any_clique || m.count >= n;
  r.tuple = m.tuple;
  r.signs = m.signs;
  r.count = m.count;
  if (!m.any_clique) r.detail = "no clique of this size";
  return r;
}

std::optional<int> max_p_n(const SignedGraph& g, int k) {
  const PkMinimum m = p_k_minimum(g, k);
  if (!m.any_clique) return std::nullopt;
  return m.count;
}

std::vector<int> common_signed_neighbors(const SignedGraph& g, int u, int v,
                                         Sign s1, Sign s2) {
  g.check_vertex(u);
  g.check_vertex(v);
  std::vector<int> out;
  for (int w = 0; w < g.order(); ++w) {
    if (w == u || w == v) continue;
    if (g.sign_code(u, w) == to_int(s1) && g.sign_code(v, w) == to_int(s2)) {
      out.push_back(w);
    }
  }
  return out;
}

PropertyReport check_p22_star(const SignedGraph& g) {
  if (!g.is_complete()) throw Error("P*_{2,2} is defined on complete graphs");
  PropertyReport r;
  r.kind = "P22_star";
  r.k = 2;
  r.n = 2;
  r.holds = true;
  r.count = std::numeric_limits<int>::max();
  constexpr Sign kSigns[] = {Sign::kPositive, Sign::kNegative};
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (u == v) continue;
      const int s = g.sign_code(u, v);
      for (Sign s1 : kSigns) {
        for (Sign s2 : kSigns) {
          if (to_int(s1) == s && to_int(s2) == s) continue;
          const int c =
              static_cast<int>(common_signed_neighbors(g, u, v, s1, s2).size());
          if (c < r.count) {
            r.count = c;
            r.tuple = {u, v};
            r.signs = {s1, s2};
          }
        }
      }
    }
  }
  if (r.tuple.empty()) r.count = 0;
  r.holds = r.tuple.empty() || r.count >= 2;
  return r;
}

PropertyReport is_2ec_clique(const SignedGraph& g) {
  PropertyReport r;
  r.kind = "2ec_clique";
  r.holds = true;
  for (int u = 0; u < g.order() && r.holds; ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.sign_code(u, v) != 0) continue;
      bool mixed = false;
      for (int w : g.neighbors(u)) {
        const int b = g.sign_code(v, w);
        if (b != 0 && b != g.sign_code(u, w)) {
          mixed = true;
          break;
        }
      }
      if (!mixed) {
        r.holds = false;
        r.pair = {u, v};
        r.detail = "no 2-path with one positive and one negative edge";
        break;
      }
    }
  }
  return r;
}

PropertyReport is_signed_clique(const SignedGraph& g) {
  PropertyReport r;
  r.kind = "signed_clique";
  r.holds = true;
  for (int u = 0; u < g.order() && r.holds; ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.sign_code(u, v) != 0) continue;
      // Two 2-paths u-a-v and u-b-v close an unbalanced C4 exactly when
      // their sign products differ.
      bool positive_path = false;
      bool negative_path = false;
      for (int w : g.neighbors(u)) {
        const int b = g.sign_code(v, w);
        if (b == 0) continue;
        (b * g.sign_code(u, w) > 0 ? positive_path : negative_path) = true;
      }
      if (!(positive_path && negative_path)) {
        r.holds = false;
        r.pair = {u, v};
        r.detail = "pair lies on no unbalanced 4-cycle";
        break;
      }
    }
  }
  return r;
}

}  // namespace signhom
