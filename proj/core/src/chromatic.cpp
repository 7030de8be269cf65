#include "signhom/chromatic.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>

namespace signhom {

namespace {

// Pairs (i, j), i < j, in lexicographic order. The sign string of a complete
// graph reads these pairs most significant first; a set bit means negative.
struct PairIndex {
  explicit PairIndex(int n) : n(n), index(n * n, -1) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        index[i * n + j] = index[j * n + i] = static_cast<int>(pairs.size());
        pairs.emplace_back(i, j);
      }
    }
  }
  int bit(int i, int j) const {
    return static_cast<int>(pairs.size()) - 1 - index[i * n + j];
  }

  int n;
  std::vector<int> index;
  std::vector<std::pair<int, int>> pairs;
};

SignedGraph graph_from_code(const PairIndex& pi, unsigned code,
                            const std::string& name) {
  std::vector<Edge> edges;
  for (const auto& [i, j] : pi.pairs) {
    edges.push_back({i, j, code >> pi.bit(i, j) & 1u ? Sign::kNegative
                                                      : Sign::kPositive});
  }
  return SignedGraph(pi.n, edges, name);
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// True when no relabeling yields a smaller sign string.
bool is_canonical_2ec(const PairIndex& pi, unsigned code,
                      const std::vector<std::vector<int>>& perms) {
  for (const auto& p : perms) {
    // Relabeled graph: pair (a, b) gets the sign of (p[a], p[b]). Compare
    // from the most significant pair down and stop at the first difference.
    for (const auto& [a, b] : pi.pairs) {
      const unsigned mine = code >> pi.bit(a, b) & 1u;
      const unsigned theirs = code >> pi.bit(p[a], p[b]) & 1u;
      if (theirs < mine) return false;
      if (theirs > mine) break;
    }
  }
  return true;
}

// Relabels by p, switches the star of vertex 0 positive, and encodes.
unsigned switched_code(const PairIndex& pi, unsigned code,
                       const std::vector<int>& p) {
  const int n = pi.n;
  auto negative = [&](int a, int b) { return code >> pi.bit(p[a], p[b]) & 1u; };
  std::vector<unsigned> flip(n, 0);
  for (int v = 1; v < n; ++v) flip[v] = negative(0, v);
  unsigned out = 0;
  for (const auto& [a, b] : pi.pairs) {
    const unsigned bit = negative(a, b) ^ flip[a] ^ flip[b];
    out |= bit << pi.bit(a, b);
  }
  return out;
}

std::vector<SignedGraph> enumerate_2ec(int n) {
  std::vector<SignedGraph> out;
  const PairIndex pi(n);
  const auto perms = all_permutations(n);
  const unsigned count = 1u << pi.pairs.size();
  for (unsigned code = 0; code < count; ++code) {
    if (is_canonical_2ec(pi, code, perms)) {
      out.push_back(graph_from_code(pi, code,
                                    "K" + std::to_string(n) + "_" +
                                        std::to_string(out.size())));
    }
  }
  return out;
}

std::vector<SignedGraph> enumerate_signed(int n) {
  std::vector<SignedGraph> out;
  const PairIndex pi(n);
  const auto perms = all_permutations(n);
  unsigned star_mask = 0;
  for (int v = 1; v < n; ++v) star_mask |= 1u << pi.bit(0, v);
  const unsigned count = 1u << pi.pairs.size();
  for (unsigned code = 0; code < count; ++code) {
    if (code & star_mask) continue;  // star(0) must be positive
    bool canonical = true;
    for (const auto& p : perms) {
      if (switched_code(pi, code, p) < code) {
        canonical = false;
        break;
      }
    }
    if (canonical) {
      out.push_back(graph_from_code(pi, code,
                                    "S" + std::to_string(n) + "_" +
                                        std::to_string(out.size())));
    }
  }
  return out;
}

void check_order(int n) {
  if (n < 0 || n > kMaxChromaticOrder) {
    throw Error("complete targets are enumerated for orders 0.." +
                std::to_string(kMaxChromaticOrder));
  }
}

template <typename Enumerate>
const std::vector<SignedGraph>& cached(int n, Enumerate enumerate,
                                       std::array<std::once_flag, 7>& flags,
                                       std::array<std::vector<SignedGraph>, 7>& lists) {
  check_order(n);
  std::call_once(flags[n], [&] { lists[n] = enumerate(n); });
  return lists[n];
}

template <typename Targets, typename Search>
ChromaticResult chromatic(const SignedGraph& g, int max_order, Targets targets,
                          Search search) {
  check_order(max_order);
  ChromaticResult result;
  if (g.order() == 0) {
    result.value = 0;
    return result;
  }
  for (int n = 1; n <= max_order; ++n) {
    OrderLog log{n, 0, false};
    for (const SignedGraph& t : targets(n)) {
      ++log.targets_tested;
      if (auto hom = search(g, t)) {
        log.found = true;
        result.value = n;
        result.target = t;
        result.hom = std::move(*hom);
        break;
      }
    }
    result.per_order_log.push_back(log);
    if (log.found) break;
  }
  return result;
}

}  // namespace

const std::vector<SignedGraph>& complete_targets_2ec(int n) {
  static std::array<std::once_flag, 7> flags;
  static std::array<std::vector<SignedGraph>, 7> lists;
  return cached(n, enumerate_2ec, flags, lists);
}

const std::vector<SignedGraph>& complete_targets_signed(int n) {
  static std::array<std::once_flag, 7> flags;
  static std::array<std::vector<SignedGraph>, 7> lists;
  return cached(n, enumerate_signed, flags, lists);
}

ChromaticResult chromatic_2ec(const SignedGraph& g, int max_order) {
  return chromatic(g, max_order, complete_targets_2ec,
                   [](const SignedGraph& a, const SignedGraph& b) {
                     return find_hom_2ec(a, b);
                   });
}

ChromaticResult chromatic_signed(const SignedGraph& g, int max_order) {
  return chromatic(g, max_order, complete_targets_signed, find_hom_signed);
}

}  // namespace signhom
