#include "sigcolor/linegraph.hpp"

#include <string>

namespace sigcolor {

BidirectedGraph orient(const SignedGraph& g) {
  BidirectedGraph b{g, std::vector<std::array<Sign, 2>>(g.num_edges())};
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.sign == Sign::kNegative) {
      b.tau[e] = {Sign::kPositive, Sign::kPositive};
    } else if (ed.u < ed.v) {
      b.tau[e] = {Sign::kPositive, Sign::kNegative};
    } else {
      b.tau[e] = {Sign::kNegative, Sign::kPositive};
    }
  }
  return b;
}

SignedGraph signed_of(const BidirectedGraph& b) {
  std::vector<Sign> sig(b.underlying.num_edges());
  for (EdgeId e = 0; e < b.underlying.num_edges(); ++e) sig[e] = b.edge_sign(e);
  return b.underlying.with_signature(sig);
}

BidirectedGraph reorient(const BidirectedGraph& b, EdgeId e) {
  BidirectedGraph out = b;
  out.tau.at(e) = {-b.tau[e][0], -b.tau[e][1]};
  return out;
}

BidirectedGraph bidirected_line_graph(const BidirectedGraph& b) {
  const SignedGraph& g = b.underlying;
  std::vector<Edge> edges;
  std::vector<std::array<Sign, 2>> tau;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    for (EdgeId f = e + 1; f < g.num_edges(); ++f) {
      const Edge& x = g.edge(e);
      const Edge& y = g.edge(f);
      Vertex shared = -1;
      if (x.u == y.u || x.u == y.v) shared = x.u;
      if (x.v == y.u || x.v == y.v) shared = x.v;
      if (shared < 0) continue;
      const std::array<Sign, 2> t{b.at(shared, e), b.at(shared, f)};
      edges.push_back({e, f, -(t[0] * t[1])});
      tau.push_back(t);
    }
  }
  return {SignedGraph(g.num_edges(), std::move(edges)), std::move(tau)};
}

SignedGraph line_graph(const SignedGraph& g) {
  return signed_of(bidirected_line_graph(orient(g)));
}

VertexVerdict validate_vertex_coloring(const SignedGraph& g, const VertexColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.num_vertices()) {
    throw GraphError(GraphError::Kind::kWrongGraph,
                     "vertex coloring has " + std::to_string(c.colors.size()) +
                         " entries, graph has " + std::to_string(g.num_vertices()));
  }
  const ColorSet set(c.num_colors);
  for (Color x : c.colors) {
    if (!set.contains(x)) {
      throw PreconditionError("color " + std::to_string(x) + " is not in M_" +
                              std::to_string(c.num_colors));
    }
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (c.colors[ed.u] == to_int(ed.sign) * c.colors[ed.v]) return {e};
  }
  return {};
}

VertexColoring edge_to_vertex_coloring(const BidirectedGraph& b,
                                       const EdgeColoring& gamma) {
  const SignedGraph& g = b.underlying;
  if (gamma.num_edges() != g.num_edges()) {
    throw GraphError(GraphError::Kind::kWrongGraph,
                     "coloring does not belong to this graph");
  }
  VertexColoring out{gamma.num_colors(), std::vector<Color>(g.num_edges())};
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const EndColors& ec = gamma.ends(e);
    const Color at_u = to_int(b.tau[e][0]) * ec[0];
    const Color at_v = to_int(b.tau[e][1]) * ec[1];
    if (at_u != at_v) {
      throw PreconditionError("edge " + std::to_string(e) +
                              " breaks the edge law for this orientation");
    }
    out.colors[e] = at_u;
  }
  return out;
}

EdgeColoring vertex_to_edge_coloring(const BidirectedGraph& b, const VertexColoring& c) {
  const SignedGraph& g = b.underlying;
  if (static_cast<int>(c.colors.size()) != g.num_edges()) {
    throw GraphError(GraphError::Kind::kWrongGraph,
                     "one line-graph vertex per edge expected");
  }
  std::vector<EndColors> ends(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    ends[e] = {to_int(b.tau[e][0]) * c.colors[e], to_int(b.tau[e][1]) * c.colors[e]};
  }
  return EdgeColoring(c.num_colors, std::move(ends));
}

VertexColoring edge_to_vertex_coloring(const SignedGraph& g, const EdgeColoring& gamma) {
  return edge_to_vertex_coloring(orient(g), gamma);
}

EdgeColoring vertex_to_edge_coloring(const SignedGraph& g, const VertexColoring& c) {
  return vertex_to_edge_coloring(orient(g), c);
}

}  // namespace sigcolor
