#pragma once

#include <random>
#include <vector>

#include "signhom/signed_graph.hpp"
#include "signhom/switching.hpp"

namespace signhom::testing {

inline std::vector<Sign> signs(const char* pattern) {
  std::vector<Sign> out;
  for (const char* c = pattern; *c; ++c) {
    out.push_back(*c == '-' ? Sign::kNegative : Sign::kPositive);
  }
  return out;
}

inline SignedGraph cycle(const char* pattern) { return make_cycle(signs(pattern)); }
inline SignedGraph path(const char* pattern) { return make_path(signs(pattern)); }

inline SwitchSet subset(unsigned mask, int n) {
  std::vector<int> members;
  for (int v = 0; v < n; ++v) {
    if (mask >> v & 1u) members.push_back(v);
  }
  return SwitchSet(members);
}

}  // namespace signhom::testing
