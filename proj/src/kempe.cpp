#include <algorithm>
#include <string>

#include "sigcolor/vizing.hpp"

namespace sigcolor {

KempeChain kempe_chain(const PartialColoring& pc, Vertex v0, Color absent_color,
                       Color present_color) {
  if (pc.present(v0, absent_color)) {
    throw PreconditionError("chain color " + std::to_string(absent_color) +
                            " is present at vertex " + std::to_string(v0));
  }
  if (!pc.present(v0, present_color)) {
    throw PreconditionError("chain color " + std::to_string(present_color) +
                            " is absent at vertex " + std::to_string(v0));
  }
  const SignedGraph& g = pc.graph();
  KempeChain chain;
  chain.absent_color = absent_color;
  chain.present_color = present_color;
  chain.trail.vertices.push_back(v0);
  chain.positive_prefix.push_back(0);

  std::vector<char> used(g.num_edges(), 0);
  Vertex v = v0;
  int parity = 1;  // (-1)^{t_i}
  Color leave = present_color;
  for (;;) {
    const auto e = pc.edge_with(v, parity * leave);
    if (!e || used[*e]) break;
    used[*e] = 1;
    const bool positive = pc.sign(*e) == Sign::kPositive;
    if (positive) parity = -parity;
    v = g.other_end(*e, v);
    chain.trail.edges.push_back(*e);
    chain.trail.vertices.push_back(v);
    chain.positive_prefix.push_back(chain.positive_prefix.back() + (positive ? 1 : 0));
    leave = leave == present_color ? absent_color : present_color;
  }
  return chain;
}

KempeChain kempe_chain(const SignedGraph& g, const EdgeColoring& gamma,
                       Vertex v0, Color absent_color, Color present_color) {
  const PartialColoring pc(g, gamma);
  return kempe_chain(pc, v0, absent_color, present_color);
}

void kempe_swap(PartialColoring& pc, const KempeChain& chain) {
  const Color a = chain.absent_color;
  const Color b = chain.present_color;
  if (a == 0 || b == 0) {
    throw PreconditionError("swapping a chain through color 0 breaks propriety");
  }
  auto exchange = [a, b](Color c) {
    if (c == a) return b;
    if (c == b) return a;
    if (c == -a) return -b;
    if (c == -b) return -a;
    return c;
  };
  const SignedGraph& g = pc.graph();
  std::vector<std::pair<EdgeId, Color>> recolor;
  recolor.reserve(chain.trail.edges.size());
  for (EdgeId e : chain.trail.edges) {
    const Vertex u = g.edge(e).u;
    recolor.emplace_back(e, exchange(pc.at(u, e)));
    pc.clear(e);
  }
  for (auto [e, c] : recolor) pc.assign(e, g.edge(e).u, c);
}

EdgeColoring kempe_swap(const SignedGraph& g, const EdgeColoring& gamma,
                        const KempeChain& chain) {
  PartialColoring pc(g, gamma);
  kempe_swap(pc, chain);
  return pc.to_coloring();
}

int Fan::index_of(EdgeId e) const {
  const auto it = std::find(edges.begin(), edges.end(), e);
  return it == edges.end() ? -1 : static_cast<int>(it - edges.begin());
}

Fan build_fan(PartialColoring& pc, EdgeId e0, Vertex hinge,
              std::optional<EdgeId> first_edge) {
  const SignedGraph& g = pc.graph();
  if (e0 < 0 || e0 >= g.num_edges()) {
    throw GraphError(GraphError::Kind::kUnknownEdge,
                     "edge " + std::to_string(e0) + " not in graph");
  }
  if (pc.colored(e0)) {
    throw PreconditionError("the initial edge of a fan must be uncolored");
  }
  Fan fan;
  fan.hinge = hinge;
  const Vertex v0 = g.other_end(e0, hinge);
  g.end_index(e0, hinge);  // throws when hinge is not an end of e0

  for (const Incidence& inc : g.incident(hinge)) {
    if (pc.sign(inc.edge) == Sign::kPositive) {
      fan.switched.push_back(inc.neighbor);
      pc.switch_vertex(inc.neighbor);
    }
  }

  fan.leaves.push_back(v0);
  fan.edges.push_back(e0);
  fan.base_colors.push_back(PartialColoring::kUncolored);
  std::vector<char> in_fan(g.num_vertices(), 0);
  in_fan[v0] = 1;

  auto qualifies = [&](EdgeId e) {
    const Vertex w = g.other_end(e, hinge);
    return pc.colored(e) && !in_fan[w] && pc.absent(fan.leaves.back(), pc.at(hinge, e));
  };
  auto append = [&](EdgeId e) {
    const Vertex w = g.other_end(e, hinge);
    fan.leaves.push_back(w);
    fan.edges.push_back(e);
    fan.base_colors.push_back(pc.at(hinge, e));
    in_fan[w] = 1;
  };

  if (first_edge) {
    if (!qualifies(*first_edge)) {
      throw InternalError("forced first fan edge " + std::to_string(*first_edge) +
                          " does not qualify");
    }
    append(*first_edge);
  }
  for (;;) {
    std::optional<EdgeId> next;
    for (const Incidence& inc : g.incident(hinge)) {
      if (qualifies(inc.edge)) {
        next = inc.edge;
        break;
      }
    }
    if (!next) break;
    append(*next);
  }
  return fan;
}

void undo_local_switching(PartialColoring& pc, const Fan& fan) {
  for (Vertex w : fan.switched) pc.switch_vertex(w);
}

namespace {

Color shifted_color(const Fan& fan, int shift, int j) {
  if (j == shift) return PartialColoring::kUncolored;
  return j < shift ? fan.base_colors[j + 1] : fan.base_colors[j];
}

}  // namespace

void shift_to(PartialColoring& pc, Fan& fan, int i) {
  if (i < 0 || i > fan.last()) {
    throw InternalError("shift index " + std::to_string(i) + " outside the fan");
  }
  for (int j = 0; j <= fan.last(); ++j) {
    const Color want = shifted_color(fan, fan.shift, j);
    const Color have = pc.colored(fan.edges[j]) ? pc.at(fan.hinge, fan.edges[j])
                                                : PartialColoring::kUncolored;
    if (want != have) {
      throw InternalError("fan edge e_" + std::to_string(j) +
                          " changed color outside a shift");
    }
  }
  for (EdgeId e : fan.edges) pc.clear(e);
  for (int j = 0; j <= fan.last(); ++j) {
    const Color c = shifted_color(fan, i, j);
    if (c != PartialColoring::kUncolored) pc.assign(fan.edges[j], fan.hinge, c);
  }
  fan.shift = i;
}

PartialColoring shifted_coloring(const PartialColoring& pc, const Fan& fan,
                                 int i) {
  PartialColoring copy = pc;
  Fan f = fan;
  shift_to(copy, f, i);
  return copy;
}

}  // namespace sigcolor
