#include "sigcolor/coloring.hpp"

#include <algorithm>
#include <string>

namespace sigcolor {

ColorSet::ColorSet(int n) : n_(n) {
  if (n < 1) {
    throw PreconditionError("a signed color set needs at least one color");
  }
}

std::vector<Color> ColorSet::members() const {
  std::vector<Color> out;
  out.reserve(n_);
  for (int a = max_magnitude(); a >= 1; --a) out.push_back(-a);
  if (has_zero()) out.push_back(0);
  for (int a = 1; a <= max_magnitude(); ++a) out.push_back(a);
  return out;
}

ColorSet make_color_set(int n) { return ColorSet(n); }

int span_of(std::span<const Color> colors) {
  int k = 0;
  bool zero = false;
  for (Color c : colors) {
    k = std::max(k, magnitude(c));
    zero = zero || c == 0;
  }
  return 2 * k + (zero ? 1 : 0);
}

EdgeColoring::EdgeColoring(int n, std::vector<EndColors> ends)
    : n_(n), ends_(std::move(ends)) {
  const ColorSet set(n_);
  for (const EndColors& ec : ends_) {
    for (Color c : ec) {
      if (!set.contains(c)) {
        throw PreconditionError("color " + std::to_string(c) +
                                " is not in M_" + std::to_string(n_));
      }
    }
  }
}

EdgeColoring EdgeColoring::from_first_ends(const SignedGraph& g, int n,
                                           std::span<const Color> first_end) {
  if (static_cast<int>(first_end.size()) != g.num_edges()) {
    throw GraphError(GraphError::Kind::kWrongGraph,
                     "one color per edge expected");
  }
  std::vector<EndColors> ends(first_end.size());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    ends[e] = {first_end[e], -to_int(g.sign(e)) * first_end[e]};
  }
  return EdgeColoring(n, std::move(ends));
}

int EdgeColoring::span() const {
  std::vector<Color> all;
  all.reserve(2 * ends_.size());
  for (const EndColors& ec : ends_) {
    all.push_back(ec[0]);
    all.push_back(ec[1]);
  }
  return span_of(all);
}

Verdict validate(const SignedGraph& g, const EdgeColoring& gamma) {
  if (gamma.num_edges() != g.num_edges()) {
    throw GraphError(GraphError::Kind::kWrongGraph,
                     "coloring has " + std::to_string(gamma.num_edges()) +
                         " edges, graph has " + std::to_string(g.num_edges()));
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const EndColors& ec = gamma.ends(e);
    if (ec[0] != -to_int(g.sign(e)) * ec[1]) {
      Verdict v;
      v.kind = Verdict::Kind::kInvalidEdgeLaw;
      v.edge = e;
      v.vertex = g.edge(e).u;
      v.color = ec[0];
      return v;
    }
  }
  const int k = gamma.num_colors() / 2;
  const int width = 2 * k + 1;
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()) * width, 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const int first = ed.u < ed.v ? 0 : 1;
    for (int side : {first, 1 - first}) {
      const Vertex v = side == 0 ? ed.u : ed.v;
      const Color c = gamma.ends(e)[side];
      char& slot = seen[static_cast<std::size_t>(v) * width + (c + k)];
      if (slot) {
        Verdict out;
        out.kind = Verdict::Kind::kImproper;
        out.edge = e;
        out.vertex = v;
        out.color = c;
        return out;
      }
      slot = 1;
    }
  }
  return {};
}

EdgeColoring switch_coloring(const SignedGraph& g, const EdgeColoring& gamma,
                             std::span<const Vertex> x) {
  if (!is_proper(g, gamma)) {
    throw PreconditionError("switch_coloring expects a proper coloring");
  }
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : x) {
    if (v < 0 || v >= g.num_vertices()) {
      throw GraphError(GraphError::Kind::kUnknownVertex,
                       "switching set names vertex " + std::to_string(v));
    }
    in[v] = 1;
  }
  std::vector<EndColors> ends(gamma.all_ends().begin(), gamma.all_ends().end());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (in[g.edge(e).u]) ends[e][0] = -ends[e][0];
    if (in[g.edge(e).v]) ends[e][1] = -ends[e][1];
  }
  return EdgeColoring(gamma.num_colors(), std::move(ends));
}

std::vector<Color> present_colors(const SignedGraph& g,
                                  const EdgeColoring& gamma, Vertex v) {
  std::vector<Color> out;
  for (const Incidence& inc : g.incident(v)) {
    out.push_back(gamma.at(g, v, inc.edge));
  }
  return out;
}

bool MagnitudeSubgraph::is_balanced() const {
  return std::all_of(components.begin(), components.end(),
                     [](const MagnitudeComponent& c) {
                       return c.kind == MagnitudeComponent::Kind::kPath ||
                              c.positive;
                     });
}

int MagnitudeSubgraph::max_degree(const SignedGraph& g) const {
  std::vector<int> deg(g.num_vertices(), 0);
  int best = 0;
  for (EdgeId e : edges) {
    best = std::max(best, ++deg[g.edge(e).u]);
    best = std::max(best, ++deg[g.edge(e).v]);
  }
  return best;
}

MagnitudeSubgraph magnitude_subgraph(const SignedGraph& g,
                                     const EdgeColoring& gamma, int a) {
  if (gamma.num_edges() != g.num_edges()) {
    throw GraphError(GraphError::Kind::kWrongGraph,
                     "coloring does not belong to this graph");
  }
  const ColorSet set = gamma.color_set();
  if (a < 0 || !set.contains(a)) {
    throw PreconditionError("magnitude " + std::to_string(a) +
                            " is not used by M_" +
                            std::to_string(gamma.num_colors()));
  }
  MagnitudeSubgraph out;
  out.magnitude = a;
  std::vector<std::vector<EdgeId>> at(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (magnitude(gamma.ends(e)[0]) != a) continue;
    out.edges.push_back(e);
    at[g.edge(e).u].push_back(e);
    at[g.edge(e).v].push_back(e);
  }
  const std::size_t cap = a == 0 ? 1 : 2;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (at[v].size() > cap) {
      throw PreconditionError("magnitude " + std::to_string(a) +
                              " has degree " + std::to_string(at[v].size()) +
                              " at vertex " + std::to_string(v));
    }
  }

  std::vector<char> used(g.num_edges(), 0);
  auto walk = [&](Vertex start, MagnitudeComponent& comp) {
    Vertex cur = start;
    comp.vertices.push_back(cur);
    for (;;) {
      EdgeId next = -1;
      for (EdgeId e : at[cur]) {
        if (!used[e]) {
          next = e;
          break;
        }
      }
      if (next < 0) break;
      used[next] = 1;
      comp.edges.push_back(next);
      if (g.sign(next) == Sign::kNegative) comp.positive = !comp.positive;
      cur = g.other_end(next, cur);
      if (cur == start) {
        comp.kind = MagnitudeComponent::Kind::kCircle;
        break;
      }
      comp.vertices.push_back(cur);
    }
  };
  // Paths first, started from their degree-1 ends; what remains are circles.
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (at[v].size() == 1 && !used[at[v][0]]) {
      MagnitudeComponent comp;
      walk(v, comp);
      out.components.push_back(std::move(comp));
    }
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (EdgeId e : at[v]) {
      if (!used[e]) {
        MagnitudeComponent comp;
        walk(v, comp);
        out.components.push_back(std::move(comp));
      }
    }
  }
  return out;
}

bool has_magnitude_structure(const SignedGraph& g, const EdgeColoring& gamma) {
  if (!is_proper(g, gamma)) return false;
  const int k = gamma.color_set().max_magnitude();
  for (int a = gamma.color_set().has_zero() ? 0 : 1; a <= k; ++a) {
    const MagnitudeSubgraph sub = magnitude_subgraph(g, gamma, a);
    if (sub.max_degree(g) > (a == 0 ? 1 : 2)) return false;
    if (a != 0 && !sub.is_balanced()) return false;
  }
  return true;
}

}  // namespace sigcolor
