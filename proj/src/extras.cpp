#include "sigcolor/extras.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sigcolor {

namespace {

void guard(bool ok, const std::string& what) {
  if (!ok) throw SizeGuardError(what);
}

/// Union-find over vertices carrying a ±1 potential relative to the root,
/// with undo. Joining u and v with sign s asks for pot(u)·pot(v) = s, which
/// is exactly balance of the joined edges.
class SignedUnionFind {
 public:
  explicit SignedUnionFind(int n) : parent_(n), parity_(n, 1), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  /// Returns false (and changes nothing) if the edge would close a circle
  /// whose sign differs from s.
  bool join(Vertex u, Vertex v, int s) {
    auto [ru, pu] = find(u);
    auto [rv, pv] = find(v);
    if (ru == rv) {
      history_.push_back(-1);
      return pu * pv == s;
    }
    if (size_[ru] < size_[rv]) {
      std::swap(ru, rv);
      std::swap(pu, pv);
    }
    parent_[rv] = ru;
    parity_[rv] = pu * pv * s;
    size_[ru] += size_[rv];
    history_.push_back(rv);
    return true;
  }

  bool connected(Vertex u, Vertex v) const { return find(u).first == find(v).first; }

  void undo() {
    const int rv = history_.back();
    history_.pop_back();
    if (rv < 0) return;
    const int ru = parent_[rv];
    size_[ru] -= size_[rv];
    parent_[rv] = rv;
    parity_[rv] = 1;
  }

 private:
  std::pair<int, int> find(Vertex v) const {
    int p = 1;
    while (parent_[v] != v) {
      p *= parity_[v];
      v = parent_[v];
    }
    return {v, p};
  }

  std::vector<int> parent_;
  std::vector<int> parity_;
  std::vector<int> size_;
  std::vector<int> history_;
};

/// Vertices by decreasing degree, ties by id.
std::vector<Vertex> by_degree(const SignedGraph& g) {
  std::vector<Vertex> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

/// Edges grouped around high-degree vertices first.
std::vector<EdgeId> edge_order(const SignedGraph& g) {
  std::vector<EdgeId> order;
  std::vector<char> seen(g.num_edges(), 0);
  for (Vertex v : by_degree(g)) {
    for (const Incidence& inc : g.incident(v)) {
      if (!seen[inc.edge]) {
        seen[inc.edge] = 1;
        order.push_back(inc.edge);
      }
    }
  }
  return order;
}

/// Zero-free colors of M_n that may go next given the largest magnitude so
/// far: old magnitudes with either sign, or the next magnitude positive.
std::vector<Color> next_colors(int n, int max_magnitude) {
  std::vector<Color> out;
  for (int a = 1; a <= std::min(n / 2, max_magnitude); ++a) {
    out.push_back(a);
    out.push_back(-a);
  }
  if (max_magnitude < n / 2) out.push_back(max_magnitude + 1);
  return out;
}

}  // namespace

// ---- reversibility -------------------------------------------------------

bool edge_reversible(const SignedGraph& g, const EdgeColoring& gamma, EdgeId e) {
  const int a = magnitude(gamma.ends(e)[0]);
  if (a == 0) return true;
  for (const MagnitudeComponent& c : magnitude_subgraph(g, gamma, a).components) {
    if (std::find(c.edges.begin(), c.edges.end(), e) != c.edges.end()) {
      return c.kind == MagnitudeComponent::Kind::kPath;
    }
  }
  throw InternalError("edge missing from its magnitude class");
}

bool is_completely_reversible(const SignedGraph& g, const EdgeColoring& gamma) {
  const int k = gamma.color_set().max_magnitude();
  for (int a = 1; a <= k; ++a) {
    for (const MagnitudeComponent& c : magnitude_subgraph(g, gamma, a).components) {
      if (c.kind == MagnitudeComponent::Kind::kCircle) return false;
    }
  }
  return true;
}

SignedGraph with_edge_negated(const SignedGraph& g, EdgeId e) {
  std::vector<Sign> sig = g.signature();
  sig.at(e) = -sig.at(e);
  return g.with_signature(sig);
}

EdgeColoring reverse_edge(const SignedGraph& g, const EdgeColoring& gamma, EdgeId e) {
  if (!is_proper(g, gamma)) throw PreconditionError("coloring is not proper");
  if (!edge_reversible(g, gamma, e)) {
    throw PreconditionError("edge " + std::to_string(e) + " lies on a circle of its class");
  }
  const SignedGraph h = with_edge_negated(g, e);
  std::vector<EndColors> ends(gamma.all_ends().begin(), gamma.all_ends().end());
  const int a = magnitude(gamma.ends(e)[0]);
  if (a != 0) {
    for (const MagnitudeComponent& c : magnitude_subgraph(g, gamma, a).components) {
      if (std::find(c.edges.begin(), c.edges.end(), e) == c.edges.end()) continue;
      // Keep the first incidence, then alternate ±a along the path under the
      // new signs.
      Color leave = gamma.at(g, c.vertices[0], c.edges[0]);
      for (std::size_t i = 0; i < c.edges.size(); ++i) {
        const EdgeId f = c.edges[i];
        const Vertex from = c.vertices[i];
        const int side = h.end_index(f, from);
        const Color arrive = -to_int(h.sign(f)) * leave;
        ends[f][side] = leave;
        ends[f][1 - side] = arrive;
        leave = -arrive;
      }
    }
  }
  EdgeColoring out(gamma.num_colors(), std::move(ends));
  if (!is_proper(h, out)) throw InternalError("path recoloring is not proper");
  return out;
}

int chi_R_exact(const SignedGraph& g) {
  guard(g.num_edges() <= kReversibleEdgeLimit, "reversible search limited to " +
                                                   std::to_string(kReversibleEdgeLimit) +
                                                   " edges");
  if (g.num_edges() == 0) return 0;
  const auto order = edge_order(g);
  const int delta = g.max_degree();
  for (int n = 2 * ((delta + 1) / 2);; n += 2) {
    const int k = n / 2;
    std::vector<std::vector<int>> used(g.num_vertices(), std::vector<int>(2 * k + 1, 0));
    std::vector<SignedUnionFind> forests(k + 1, SignedUnionFind(g.num_vertices()));
    auto place = [&](auto&& self, std::size_t i, int max_mag) -> bool {
      if (i == order.size()) return true;
      const EdgeId e = order[i];
      const Edge& ed = g.edge(e);
      for (Color c : next_colors(n, max_mag)) {
        const Color other = -to_int(ed.sign) * c;
        if (used[ed.u][c + k] || used[ed.v][other + k]) continue;
        const int a = magnitude(c);
        if (forests[a].connected(ed.u, ed.v)) continue;
        forests[a].join(ed.u, ed.v, 1);
        used[ed.u][c + k] = used[ed.v][other + k] = 1;
        if (self(self, i + 1, std::max(max_mag, a))) return true;
        used[ed.u][c + k] = used[ed.v][other + k] = 0;
        forests[a].undo();
      }
      return false;
    };
    if (place(place, 0, 0)) return n;
  }
}

int linear_arboricity_exact(const SignedGraph& g) {
  guard(g.num_edges() <= kReversibleEdgeLimit, "linear arboricity search limited to " +
                                                   std::to_string(kReversibleEdgeLimit) +
                                                   " edges");
  if (g.num_edges() == 0) return 0;
  const auto order = edge_order(g);
  for (int k = (g.max_degree() + 1) / 2;; ++k) {
    std::vector<std::vector<int>> deg(k, std::vector<int>(g.num_vertices(), 0));
    std::vector<SignedUnionFind> forests(k, SignedUnionFind(g.num_vertices()));
    auto place = [&](auto&& self, std::size_t i, int classes) -> bool {
      if (i == order.size()) return true;
      const Edge& ed = g.edge(order[i]);
      for (int f = 0; f < std::min(k, classes + 1); ++f) {
        if (deg[f][ed.u] == 2 || deg[f][ed.v] == 2 || forests[f].connected(ed.u, ed.v)) {
          continue;
        }
        forests[f].join(ed.u, ed.v, 1);
        ++deg[f][ed.u];
        ++deg[f][ed.v];
        if (self(self, i + 1, std::max(classes, f + 1))) return true;
        --deg[f][ed.u];
        --deg[f][ed.v];
        forests[f].undo();
      }
      return false;
    };
    if (place(place, 0, 0)) return k;
  }
}

// ---- antiproper colorings ------------------------------------------------

AntiproperVerdict check_antiproper(const SignedGraph& g, const EdgeColoring& gamma) {
  if (gamma.num_edges() != g.num_edges()) {
    throw GraphError(GraphError::Kind::kWrongGraph, "coloring does not belong to this graph");
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (gamma.ends(e)[0] != -to_int(g.sign(e)) * gamma.ends(e)[1]) {
      throw PreconditionError("edge " + std::to_string(e) + " breaks the edge law");
    }
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (gamma.at(g, v, inc[i].edge) == -gamma.at(g, v, inc[j].edge)) {
          return {v, inc[i].edge, inc[j].edge};
        }
      }
    }
  }
  return {};
}

bool magnitude_classes_antibalanced(const SignedGraph& g, const EdgeColoring& gamma) {
  const int k = gamma.color_set().max_magnitude();
  for (int a = 0; a <= k; ++a) {
    std::vector<EdgeId> drop;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (magnitude(gamma.ends(e)[0]) != a) drop.push_back(e);
    }
    if (!is_balanced(remove_edges(g, drop).graph, BalanceMode::kAntibalance)) return false;
  }
  return true;
}

int chi_star_exact(const SignedGraph& g) {
  guard(g.num_vertices() <= kChiStarVertexLimit,
        "vertex coloring search limited to " + std::to_string(kChiStarVertexLimit) +
            " vertices");
  if (g.num_edges() == 0) return 0;
  const auto order = by_degree(g);
  for (int n = 2;; n += 2) {
    std::vector<Color> c(g.num_vertices(), 0);  // 0 = not yet colored
    auto place = [&](auto&& self, std::size_t i, int max_mag) -> bool {
      if (i == order.size()) return true;
      const Vertex v = order[i];
      for (Color x : next_colors(n, max_mag)) {
        bool ok = true;
        for (const Incidence& inc : g.incident(v)) {
          const Color y = c[inc.neighbor];
          if (y != 0 && x == to_int(g.sign(inc.edge)) * y) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        c[v] = x;
        if (self(self, i + 1, std::max(max_mag, magnitude(x)))) return true;
        c[v] = 0;
      }
      return false;
    };
    if (place(place, 0, 0)) return n;
  }
}

int delta0_exact(const SignedGraph& g) {
  guard(g.num_edges() <= kDecompositionEdgeLimit,
        "balanced decomposition search limited to " +
            std::to_string(kDecompositionEdgeLimit) + " edges");
  if (g.num_edges() == 0) return 0;
  const auto order = edge_order(g);
  for (int k = 1;; ++k) {
    std::vector<SignedUnionFind> parts(k, SignedUnionFind(g.num_vertices()));
    auto place = [&](auto&& self, std::size_t i, int opened) -> bool {
      if (i == order.size()) return true;
      const Edge& ed = g.edge(order[i]);
      for (int p = 0; p < std::min(k, opened + 1); ++p) {
        const bool ok = parts[p].join(ed.u, ed.v, to_int(ed.sign));
        if (ok && self(self, i + 1, std::max(opened, p + 1))) return true;
        parts[p].undo();
      }
      return false;
    };
    if (place(place, 0, 0)) return k;
  }
}

int chi_A_exact(const SignedGraph& g) {
  guard(g.num_edges() <= kDecompositionEdgeLimit,
        "antiproper search limited to " + std::to_string(kDecompositionEdgeLimit) +
            " edges");
  if (g.num_edges() == 0) return 0;
  const auto order = edge_order(g);
  for (int n = 2;; n += 2) {
    const int k = n / 2;
    std::vector<std::vector<int>> count(g.num_vertices(), std::vector<int>(2 * k + 1, 0));
    auto place = [&](auto&& self, std::size_t i, int max_mag) -> bool {
      if (i == order.size()) return true;
      const Edge& ed = g.edge(order[i]);
      for (Color c : next_colors(n, max_mag)) {
        const Color other = -to_int(ed.sign) * c;
        if (count[ed.u][-c + k] > 0 || count[ed.v][-other + k] > 0) continue;
        ++count[ed.u][c + k];
        ++count[ed.v][other + k];
        if (self(self, i + 1, std::max(max_mag, magnitude(c)))) return true;
        --count[ed.u][c + k];
        --count[ed.v][other + k];
      }
      return false;
    };
    if (place(place, 0, 0)) return n;
  }
}

// ---- total colorings -----------------------------------------------------

TotalVerdict validate_total(const SignedGraph& g, const TotalColoring& mu, TotalMode mode) {
  if (static_cast<int>(mu.vertex_colors.size()) != g.num_vertices() ||
      mu.incidences.num_edges() != g.num_edges()) {
    throw GraphError(GraphError::Kind::kWrongGraph, "total coloring does not fit the graph");
  }
  if (mu.incidences.num_colors() != mu.num_colors) {
    throw PreconditionError("vertex and incidence parts use different color sets");
  }
  const ColorSet set(mu.num_colors);
  for (Color c : mu.vertex_colors) {
    if (!set.contains(c)) {
      throw PreconditionError("color " + std::to_string(c) + " is not in M_" +
                              std::to_string(mu.num_colors));
    }
  }
  const int flip = mode == TotalMode::kTotal ? -1 : 1;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (mu.vertex_colors[ed.u] == flip * to_int(ed.sign) * mu.vertex_colors[ed.v]) {
      return {TotalVerdict::Kind::kVertexClash, ed.u, e};
    }
  }
  const Verdict ev = validate(g, mu.incidences);
  if (ev.kind == Verdict::Kind::kInvalidEdgeLaw) {
    return {TotalVerdict::Kind::kEdgeInvalid, ev.vertex, ev.edge};
  }
  if (ev.kind == Verdict::Kind::kImproper) {
    return {TotalVerdict::Kind::kEdgeImproper, ev.vertex, ev.edge};
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    for (int side = 0; side < 2; ++side) {
      const Vertex v = side == 0 ? ed.u : ed.v;
      if (mu.vertex_colors[v] == mu.incidences.ends(e)[side]) {
        return {TotalVerdict::Kind::kIncidenceClash, v, e};
      }
    }
  }
  return {};
}

TotalColoring switch_total(const SignedGraph& g, const TotalColoring& mu,
                           std::span<const Vertex> x) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : x) {
    if (v < 0 || v >= g.num_vertices()) {
      throw GraphError(GraphError::Kind::kUnknownVertex,
                       "switching set names vertex " + std::to_string(v));
    }
    in[v] = 1;
  }
  TotalColoring out = mu;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) out.vertex_colors[v] = -out.vertex_colors[v];
  }
  std::vector<EndColors> ends(mu.incidences.all_ends().begin(), mu.incidences.all_ends().end());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (in[g.edge(e).u]) ends[e][0] = -ends[e][0];
    if (in[g.edge(e).v]) ends[e][1] = -ends[e][1];
  }
  out.incidences = EdgeColoring(mu.num_colors, std::move(ends));
  return out;
}

TotalResult chi_total_exact(const SignedGraph& g, TotalMode mode) {
  guard(g.num_vertices() <= kTotalVertexLimit,
        "total coloring search limited to " + std::to_string(kTotalVertexLimit) +
            " vertices");
  const int nv = g.num_vertices();
  const int flip = mode == TotalMode::kTotal ? -1 : 1;
  const auto vorder = by_degree(g);
  const auto eorder = edge_order(g);
  const int limit = 2 * (nv + g.num_edges()) + 1;
  for (int n = g.max_degree() + 1; n <= limit; ++n) {
    const int k = n / 2;
    const ColorSet set(n);
    const auto members = set.members();
    std::vector<Color> vc(nv, 0);
    std::vector<char> vset(nv, 0);
    std::vector<Color> first(g.num_edges(), 0);
    std::vector<std::vector<char>> used(nv, std::vector<char>(2 * k + 1, 0));
    // Candidates honoring the magnitude symmetry; 0 is always allowed.
    auto candidates = [&](int max_mag) {
      std::vector<Color> out;
      for (Color c : members) {
        const int a = magnitude(c);
        if (a > max_mag + 1 || (a == max_mag + 1 && c < 0)) continue;
        out.push_back(c);
      }
      return out;
    };
    auto place_edges = [&](auto&& self, std::size_t i, int max_mag) -> bool {
      if (i == eorder.size()) return true;
      const EdgeId e = eorder[i];
      const Edge& ed = g.edge(e);
      for (Color c : candidates(max_mag)) {
        const Color other = -to_int(ed.sign) * c;
        if (used[ed.u][c + k] || used[ed.v][other + k]) continue;
        if (vc[ed.u] == c || vc[ed.v] == other) continue;
        used[ed.u][c + k] = used[ed.v][other + k] = 1;
        first[e] = c;
        if (self(self, i + 1, std::max(max_mag, magnitude(c)))) return true;
        used[ed.u][c + k] = used[ed.v][other + k] = 0;
      }
      return false;
    };
    auto place_vertices = [&](auto&& self, std::size_t i, int max_mag) -> bool {
      if (i == vorder.size()) return place_edges(place_edges, 0, max_mag);
      const Vertex v = vorder[i];
      for (Color c : candidates(max_mag)) {
        bool ok = true;
        for (const Incidence& inc : g.incident(v)) {
          if (vset[inc.neighbor] &&
              c == flip * to_int(g.sign(inc.edge)) * vc[inc.neighbor]) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        vc[v] = c;
        vset[v] = 1;
        if (self(self, i + 1, std::max(max_mag, magnitude(c)))) return true;
        vset[v] = 0;
      }
      return false;
    };
    if (place_vertices(place_vertices, 0, 0)) {
      TotalColoring mu{n, vc, EdgeColoring::from_first_ends(g, n, first)};
      if (!validate_total(g, mu, mode).proper()) {
        throw InternalError("total coloring search produced an improper witness");
      }
      return {n, std::move(mu)};
    }
  }
  throw InternalError("no total coloring within the color limit");
}

}  // namespace sigcolor
