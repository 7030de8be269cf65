#include "signhom/hom.hpp"

#include <bit>
#include <cstdint>
#include <functional>

#include "signhom/constructions.hpp"

namespace signhom {

namespace {

using Word = std::uint64_t;

class HomSearch {
 public:
  HomSearch(const SignedGraph& g, const SignedGraph& h)
      : g_(g), h_(h), n_(g.order()), words_((h.order() + 63) / 64) {
    const int m = h.order();
    pos_.assign(static_cast<std::size_t>(m) * words_, 0);
    neg_.assign(static_cast<std::size_t>(m) * words_, 0);
    for (int x = 0; x < m; ++x) {
      for (int y : h.neighbors(x)) {
        Word* row = (h.sign_code(x, y) > 0 ? pos_ : neg_).data() + x * words_;
        row[y / 64] |= Word{1} << (y % 64);
      }
    }
    domain_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (int v = 0; v < n_; ++v) {
      for (int x = 0; x < m; ++x) set(domain(v), x);
    }
    color_.assign(n_, -1);
    colored_neighbors_.assign(n_, 0);
  }

  bool pin(int v, int x) {
    g_.check_vertex(v);
    h_.check_vertex(x);
    if (!test(domain(v), x)) return false;
    Word* d = domain(v);
    std::fill(d, d + words_, 0);
    set(d, x);
    return true;
  }

  std::optional<std::vector<int>> run() {
    if (n_ > 0 && h_.order() == 0) return std::nullopt;
    if (!solve(0)) return std::nullopt;
    return color_;
  }

  // Calls visit on every solution until it returns false.
  void run_all(const HomVisitor& visit) {
    if (n_ > 0 && h_.order() == 0) return;
    visit_ = &visit;
    solve(0);
    visit_ = nullptr;
  }

 private:
  Word* domain(int v) { return domain_.data() + static_cast<std::size_t>(v) * words_; }
  const Word* nb(int x, int sign) const {
    return (sign > 0 ? pos_ : neg_).data() + static_cast<std::size_t>(x) * words_;
  }
  static void set(Word* bits, int x) { bits[x / 64] |= Word{1} << (x % 64); }
  static bool test(const Word* bits, int x) { return bits[x / 64] >> (x % 64) & 1; }

  int pick() const {
    int best = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      if (best < 0 || colored_neighbors_[v] > colored_neighbors_[best] ||
          (colored_neighbors_[v] == colored_neighbors_[best] &&
           g_.degree(v) > g_.degree(best))) {
        best = v;
      }
    }
    return best;
  }

  // Returns true when the search should stop.
  bool solve(int assigned) {
    if (assigned == n_) return visit_ == nullptr || !(*visit_)(color_);
    const int u = pick();
    const std::vector<Word> choices(domain(u), domain(u) + words_);
    for (int wi = 0; wi < words_; ++wi) {
      Word bits = choices[wi];
      while (bits) {
        const int x = wi * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        const std::size_t mark = trail_.size();
        if (assign(u, x) && solve(assigned + 1)) return true;
        undo(u, mark);
      }
    }
    return false;
  }

  // Colors u with x and narrows the domains of u's uncolored neighbors.
  bool assign(int u, int x) {
    color_[u] = x;
    for (int w : g_.neighbors(u)) ++colored_neighbors_[w];
    for (int w : g_.neighbors(u)) {
      if (color_[w] >= 0) continue;
      const Word* allowed = nb(x, g_.sign_code(u, w));
      Word* d = domain(w);
      bool changed = false;
      bool empty = true;
      for (int i = 0; i < words_; ++i) {
        const Word next = d[i] & allowed[i];
        changed = changed || next != d[i];
        empty = empty && next == 0;
      }
      if (!changed) continue;
      trail_.push_back({w, std::vector<Word>(d, d + words_)});
      for (int i = 0; i < words_; ++i) d[i] &= allowed[i];
      if (empty) return false;
    }
    return true;
  }

  void undo(int u, std::size_t mark) {
    while (trail_.size() > mark) {
      auto& [w, saved] = trail_.back();
      std::copy(saved.begin(), saved.end(), domain(w));
      trail_.pop_back();
    }
    for (int w : g_.neighbors(u)) --colored_neighbors_[w];
    color_[u] = -1;
  }

  const SignedGraph& g_;
  const SignedGraph& h_;
  int n_;
  int words_;
  std::vector<Word> pos_;
  std::vector<Word> neg_;
  std::vector<Word> domain_;
  std::vector<int> color_;
  std::vector<int> colored_neighbors_;
  std::vector<std::pair<int, std::vector<Word>>> trail_;
  const HomVisitor* visit_ = nullptr;
};

}  // namespace

const char* to_string(HomMode mode) {
  return mode == HomMode::k2ec ? "2ec" : "signed";
}

bool verify_hom(const SignedGraph& g, const SignedGraph& h,
                const Homomorphism& hom) {
  if (static_cast<int>(hom.map.size()) != g.order()) {
    throw Error("map has " + std::to_string(hom.map.size()) +
                " entries, source has " + std::to_string(g.order()) +
                " vertices");
  }
  for (int x : hom.map) h.check_vertex(x);
  const SignedGraph source = hom.mode == HomMode::kSigned
                                 ? switch_vertices(g, hom.switch_witness)
                                 : g;
  for (const Edge& e : source.edges()) {
    if (h.sign_code(hom.map[e.u], hom.map[e.v]) != to_int(e.sign)) return false;
  }
  return true;
}

std::optional<Homomorphism> find_hom_2ec(
    const SignedGraph& g, const SignedGraph& h,
    std::span<const std::pair<int, int>> fixed) {
  HomSearch search(g, h);
  for (const auto& [v, x] : fixed) {
    if (!search.pin(v, x)) return std::nullopt;
  }
  auto map = search.run();
  if (!map) return std::nullopt;
  return Homomorphism{HomMode::k2ec, std::move(*map), {}};
}

std::size_t for_each_hom_2ec(const SignedGraph& g, const SignedGraph& h,
                             const HomVisitor& visit) {
  HomSearch search(g, h);
  std::size_t count = 0;
  search.run_all([&](const std::vector<int>& map) {
    ++count;
    return visit(map);
  });
  return count;
}

std::optional<Homomorphism> find_hom_signed(const SignedGraph& g,
                                            const SignedGraph& h) {
  const SignedGraph rho = build_rho(h).graph;
  auto found = find_hom_2ec(g, rho);
  if (!found) return std::nullopt;
  const int m = h.order();
  Homomorphism hom{HomMode::kSigned, {}, {}};
  std::vector<int> switched;
  for (int v = 0; v < g.order(); ++v) {
    const int x = found->map[v];
    hom.map.push_back(x % m);
    if (x >= m) switched.push_back(v);
  }
  hom.switch_witness = SwitchSet(std::move(switched));
  return hom;
}

bool brute_force_hom_exists(const SignedGraph& g, const SignedGraph& h) {
  const int n = g.order();
  const int m = h.order();
  if (n == 0) return true;
  if (m == 0) return false;
  const auto edges = g.edges();
  std::vector<int> map(n, 0);
  while (true) {
    bool ok = true;
    for (const Edge& e : edges) {
      if (h.sign_code(map[e.u], map[e.v]) != to_int(e.sign)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    int i = 0;
    while (i < n && ++map[i] == m) map[i++] = 0;
    if (i == n) return false;
  }
}

}  // namespace signhom
