#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sigcolor/core.hpp"

namespace sigcolor {

// Named graphs. Every edge gets `sign`; negative is the ordinary-graph case.
SignedGraph complete_graph(int n, Sign sign = Sign::kNegative);
SignedGraph cycle_graph(int n, Sign sign = Sign::kNegative);
SignedGraph path_graph(int n, Sign sign = Sign::kNegative);
SignedGraph star_graph(int leaves, Sign sign = Sign::kNegative);
SignedGraph complete_bipartite(int a, int b, Sign sign = Sign::kNegative);
SignedGraph petersen_graph(Sign sign = Sign::kNegative);
/// C_k × K_2: outer cycle 0..k-1, inner cycle k..2k-1, spokes i to k+i.
SignedGraph prism_graph(int k, Sign sign = Sign::kNegative);
SignedGraph cube_graph(Sign sign = Sign::kNegative);
/// Cycle of length 2k plus the k long diagonals.
SignedGraph moebius_ladder(int k, Sign sign = Sign::kNegative);

/// G(n, p) with each present edge independently negative with probability
/// `negative_probability`.
SignedGraph random_signed_graph(int n, double edge_probability, std::mt19937_64& rng,
                                double negative_probability = 0.5);
/// Same underlying graph, uniformly random signature.
SignedGraph random_signature(const SignedGraph& g, std::mt19937_64& rng);
/// Signature from the low m bits of mask: bit e set makes edge e negative.
SignedGraph signature_from_mask(const SignedGraph& g, std::uint64_t mask);
/// Uniformly random vertex subset.
VertexSet random_vertex_set(int n, std::mt19937_64& rng);

/// Every graph on n vertices (labeled), all edges negative, edges listed in
/// lexicographic order. n ≤ 6.
std::vector<SignedGraph> labeled_graphs(int n);
/// One representative per isomorphism class on exactly n vertices. n ≤ 6.
std::vector<SignedGraph> unlabeled_graphs(int n);
/// One representative per isomorphism class of connected graphs with
/// between 1 and max_edges edges and no isolated vertices. max_edges ≤ 8.
std::vector<SignedGraph> connected_graphs_up_to(int max_edges);

/// Isomorphism-invariant code of the underlying graph (signs ignored).
/// n ≤ 9.
std::vector<std::uint8_t> canonical_code(const SignedGraph& g);

}  // namespace sigcolor
