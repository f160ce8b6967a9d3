#pragma once

#include <span>
#include <vector>

#include "sigcolor/coloring.hpp"
#include "sigcolor/core.hpp"

namespace sigcolor {

/// A graph with a sign on every incidence. tau[e] holds the signs at
/// edge(e).u and edge(e).v. The signs stored on the underlying graph are
/// ignored; signed_of derives them from tau.
struct BidirectedGraph {
  SignedGraph underlying;
  std::vector<std::array<Sign, 2>> tau;

  Sign at(Vertex v, EdgeId e) const { return tau.at(e)[underlying.end_index(e, v)]; }
  /// -tau(u,e) * tau(v,e)
  Sign edge_sign(EdgeId e) const { return -(tau.at(e)[0] * tau.at(e)[1]); }
};

/// Negative edges get (+,+); positive edges get + at the lower vertex id and
/// - at the higher one.
BidirectedGraph orient(const SignedGraph& g);
SignedGraph signed_of(const BidirectedGraph& b);
/// Flips both incidence signs of edge e; the derived signature is unchanged.
BidirectedGraph reorient(const BidirectedGraph& b, EdgeId e);

/// Line graph of b: vertex i is edge i of b, one edge per pair of edges
/// sharing a vertex (listed in lexicographic pair order), and each new
/// incidence carries the sign of the old incidence at the shared vertex.
BidirectedGraph bidirected_line_graph(const BidirectedGraph& b);
/// signed_of(bidirected_line_graph(orient(g))): one representative of the
/// line graph's switching class.
SignedGraph line_graph(const SignedGraph& g);

/// One color from M_n per vertex.
struct VertexColoring {
  int num_colors = 1;
  std::vector<Color> colors;
  friend bool operator==(const VertexColoring&, const VertexColoring&) = default;
};

/// First edge xy with c(x) = σ(xy)·c(y), or -1 when c is proper.
struct VertexVerdict {
  EdgeId edge = -1;
  bool proper() const noexcept { return edge < 0; }
};
/// Throws GraphError(kWrongGraph) when the color count does not match the
/// vertex count, PreconditionError for a color outside M_n.
VertexVerdict validate_vertex_coloring(const SignedGraph& g, const VertexColoring& c);
inline bool is_proper_vertex_coloring(const SignedGraph& g, const VertexColoring& c) {
  return validate_vertex_coloring(g, c).proper();
}

/// c(e) = τ(u,e)·γ(u,e) through the orientation b. gamma must satisfy the
/// edge law on signed_of(b). The result lives on -signed_of(L(b)).
VertexColoring edge_to_vertex_coloring(const BidirectedGraph& b,
                                       const EdgeColoring& gamma);
EdgeColoring vertex_to_edge_coloring(const BidirectedGraph& b,
                                     const VertexColoring& c);
/// Both through the canonical orientation of g.
VertexColoring edge_to_vertex_coloring(const SignedGraph& g, const EdgeColoring& gamma);
EdgeColoring vertex_to_edge_coloring(const SignedGraph& g, const VertexColoring& c);

}  // namespace sigcolor
