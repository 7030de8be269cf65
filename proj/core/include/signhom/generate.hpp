#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "signhom/signed_graph.hpp"

namespace signhom {

/// All-positive graphs on n vertices with maximum degree at most max_degree,
/// one per isomorphism class, built by vertex extension. Output order is
/// deterministic.
std::vector<SignedGraph> graphs_max_degree(int n, int max_degree,
                                           bool connected_only = false);

/// Same underlying graph with edge i (in edges() order) negative iff bit i of
/// mask is set. Throws Error if the graph has more than 63 edges.
SignedGraph with_signature(const SignedGraph& g, std::uint64_t mask);

/// Uniformly random signs on the edges of g.
SignedGraph random_signature(const SignedGraph& g, std::mt19937_64& rng);

/// Random connected cubic graph on n vertices (n even, n >= 4) by the
/// pairing model with rejection. Signs are all positive.
SignedGraph random_connected_cubic(int n, std::mt19937_64& rng);

/// Erdos-Renyi graph with edge probability p and uniformly random signs.
SignedGraph random_signed_graph(int n, double p, std::mt19937_64& rng);

}  // namespace signhom
