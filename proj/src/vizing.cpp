#include <algorithm>
#include <numeric>
#include <string>

#include "sigcolor/vizing.hpp"

namespace sigcolor {

namespace {

/// One extension job at a fixed hinge whose edges are all negative. Every
/// claim the case analysis relies on is checked before it is used; a failed
/// claim raises InternalError naming the branch.
class Extender {
 public:
  Extender(PartialColoring& pc, Vertex hinge, const ExtendOptions& opts)
      : pc_(pc), g_(pc.graph()), u_(hinge), opts_(opts),
        round_cap_(16 + 4 * pc.graph().num_edges()) {}

  void general_step(EdgeId e0);
  void fan_step(EdgeId e0);

 private:
  [[noreturn]] void fail(const std::string& where, const std::string& what) const {
    throw InternalError("extension at hinge " + std::to_string(u_) + ", " + where +
                        ": " + what);
  }

  void next_round(const char* where) {
    if (++rounds_ > round_cap_) fail(where, "round cap exceeded");
  }

  void finish(EdgeId e, Color c, const char* where) {
    const Vertex w = g_.other_end(e, u_);
    if (pc_.present(u_, c) || pc_.present(w, c)) {
      fail(where, "color " + std::to_string(c) + " not free on edge " +
                      std::to_string(e));
    }
    pc_.assign(e, u_, c);
    check(where);
  }

  KempeChain chain(Vertex v0, Color absent_color, Color present_color,
                   const char* where) const {
    if (pc_.present(v0, absent_color) || pc_.absent(v0, present_color)) {
      fail(where, "chain colors " + std::to_string(absent_color) + "/" +
                      std::to_string(present_color) + " not set up at vertex " +
                      std::to_string(v0));
    }
    return kempe_chain(pc_, v0, absent_color, present_color);
  }

  void swap(const KempeChain& c, const char* where) {
    kempe_swap(pc_, c);
    check(where);
  }

  void check(const char* where) const {
    if (opts_.verify_each_step && !pc_.consistent()) fail(where, "coloring corrupted");
  }

  /// Color absent at v0 with its same-magnitude partner choice, preference
  /// order 1, -1, 2, -2, ...
  std::optional<Color> first_common_absent(Vertex v0) const {
    for (Color c : pc_.absent_colors(u_)) {
      if (pc_.absent(v0, c)) return c;
    }
    return std::nullopt;
  }

  /// Fan, b, j for the common opening of both procedures. Returns true when
  /// the edge got colored on the way.
  struct Opening {
    Fan fan;
    Color b = 0;
    int j = 0;
    KempeChain chain;
  };
  bool open(EdgeId e0, Color a, std::optional<EdgeId> first_edge, Opening& op,
            const char* where);

  PartialColoring& pc_;
  const SignedGraph& g_;
  Vertex u_;
  ExtendOptions opts_;
  int rounds_ = 0;
  int round_cap_;
};

bool Extender::open(EdgeId e0, Color a, std::optional<EdgeId> first_edge,
                    Opening& op, const char* where) {
  op.fan = build_fan(pc_, e0, u_, first_edge);
  // All hinge edges are already negative, so build_fan switched nothing.
  if (!op.fan.switched.empty()) fail(where, "hinge edges not negative");
  Fan& fan = op.fan;
  const int s = fan.last();
  const Vertex vs = fan.leaves[s];
  const auto absent_at_vs = pc_.absent_colors(vs);
  if (absent_at_vs.empty()) fail(where, "no absent color at the last fan leaf");
  op.b = absent_at_vs.front();

  if (pc_.absent(u_, op.b)) {
    shift_to(pc_, fan, s);
    finish(fan.edges[s], op.b, where);
    return true;
  }
  op.j = -1;
  for (int i = 1; i <= s; ++i) {
    if (fan.base_colors[i] == op.b) op.j = i;
  }
  if (op.j < 0) fail(where, "color b present at the hinge outside the fan");

  shift_to(pc_, fan, s);
  if (pc_.absent(vs, a)) {
    finish(fan.edges[s], a, where);
    return true;
  }
  op.chain = chain(vs, op.b, a, where);
  const KempeChain& t = op.chain;
  const bool ends_with_b_at_hinge =
      t.end() == u_ && !t.trail.edges.empty() &&
      pc_.at(u_, t.trail.edges.back()) == op.b;
  if (!ends_with_b_at_hinge) {
    swap(t, where);
    finish(fan.edges[s], a, where);
    return true;
  }
  if (t.trail.edges.back() != fan.edges[op.j - 1]) {
    fail(where, "chain does not end on the b-colored fan edge");
  }
  return false;
}

void Extender::fan_step(EdgeId e0) {
  next_round("fan");
  const Vertex v0 = g_.other_end(e0, u_);
  if (auto c = first_common_absent(v0)) {
    finish(e0, *c, "fan, direct");
    return;
  }
  std::optional<Color> a;
  for (Color c : pc_.absent_colors(u_)) {
    if (pc_.absent(v0, -c)) {
      a = c;
      break;
    }
  }
  if (!a) fail("fan", "no same-magnitude pair absent at the hinge and v0");
  const auto minus_a_edge = pc_.edge_with(u_, -*a);
  if (!minus_a_edge) fail("fan", "-a not present at the hinge");

  Opening op;
  if (open(e0, *a, *minus_a_edge, op, "fan")) return;
  Fan& fan = op.fan;
  const Color b = op.b;
  const int top = op.j - 1;  // e_{j-1} carries b in the last shifted coloring
  const KempeChain& t = op.chain;

  std::vector<int> x;  // fan indices met by the chain, in chain order
  for (EdgeId e : t.trail.edges) {
    if (const int i = fan.index_of(e); i >= 0) x.push_back(i);
  }
  const bool top_is_highest =
      std::all_of(x.begin(), x.end(), [top](int i) { return i <= top; });

  if (top_is_highest) {
    shift_to(pc_, fan, top);
    const KempeChain back = chain(fan.leaves[top], b, *a, "fan, chain below top");
    swap(back, "fan, chain below top");
    finish(fan.edges[top], *a, "fan, chain below top");
    return;
  }

  // Otherwise the chain meets e_k (-b), e_0 (-a) and e_{j-1} (b), with k on top.
  if (x.size() != 3) fail("fan, chain past top", "chain meets the fan " +
                              std::to_string(x.size()) + " times");
  const int k = *std::max_element(x.begin(), x.end());
  const auto pos0 = std::find(x.begin(), x.end(), 0);
  const auto posk = std::find(x.begin(), x.end(), k);
  if (pos0 == x.end() || k <= top || x.back() != top ||
      pc_.at(u_, fan.edges[k]) != -b || pc_.at(u_, fan.edges[0]) != -*a) {
    fail("fan, chain past top", "unlisted intersection of chain and fan");
  }

  if (pos0 < posk) {
    // Chain runs v_s ... v_0 u v_k ... v_{j-1} u.
    shift_to(pc_, fan, top);
    const KempeChain back = chain(fan.leaves[top], b, *a, "fan, e_0 met first");
    swap(back, "fan, e_0 met first");
    finish(fan.edges[top], *a, "fan, e_0 met first");
    return;
  }

  // Chain runs v_s ... v_k u v_0 ... v_{j-1} u.
  shift_to(pc_, fan, k);
  const Vertex vk = fan.leaves[k];
  swap(chain(vk, -b, -*a, "fan, e_k met first"), "fan, e_k met first");
  if (pc_.absent(vk, *a)) {
    finish(fan.edges[k], *a, "fan, e_k met first");
    return;
  }
  const KempeChain alt = chain(vk, -*a, *a, "fan, e_k met first");
  if (alt.end() != u_) {
    swap(alt, "fan, e_k met first");
    finish(fan.edges[k], *a, "fan, e_k met first");
    return;
  }
  if (alt.trail.edges.back() != fan.edges[0]) {
    fail("fan, e_k met first", "-a/a chain reaches the hinge off e_0");
  }
  shift_to(pc_, fan, 0);
  swap(chain(v0, -*a, *a, "fan, e_k met first"), "fan, e_k met first");
  finish(fan.edges[0], *a, "fan, e_k met first");
}

void Extender::general_step(EdgeId e0) {
  next_round("general");
  const Vertex v0 = g_.other_end(e0, u_);
  for (Color c : pc_.absent_colors(u_)) {
    if (pc_.absent(v0, c) || pc_.absent(v0, -c)) {
      fan_step(e0);
      return;
    }
  }
  const auto absent_u = pc_.absent_colors(u_);
  if (absent_u.empty()) fail("general", "no absent color at the hinge");
  const Color a = absent_u.front();

  Opening op;
  if (open(e0, a, std::nullopt, op, "general")) return;
  Fan& fan = op.fan;
  const Color b = op.b;
  const int top = op.j - 1;
  const KempeChain& t = op.chain;

  int first_pos = -1;
  for (int p = 0; p < t.trail.length(); ++p) {
    if (fan.index_of(t.trail.edges[p]) >= 0) {
      first_pos = p;
      break;
    }
  }
  const int k = fan.index_of(t.trail.edges[first_pos]);
  const Vertex vk = fan.leaves[k];
  const Color ck = pc_.at(u_, fan.edges[k]);

  if (ck == b) {
    shift_to(pc_, fan, k);
    if (pc_.absent(vk, a)) {
      finish(fan.edges[k], a, "general, b");
      return;
    }
    swap(chain(vk, b, a, "general, b"), "general, b");
    finish(fan.edges[k], a, "general, b");
    return;
  }
  if (ck == -a) {
    shift_to(pc_, fan, k);
    fan_step(fan.edges[k]);
    return;
  }
  if (ck != -b) fail("general", "first fan edge on the chain has color " +
                                    std::to_string(ck));

  const bool enters_from_leaf = t.trail.vertices[first_pos] == vk;
  if (enters_from_leaf) {
    // T = (v_s, ..., v_k, u, ..., u)
    shift_to(pc_, fan, k);
    swap(chain(vk, -b, -a, "general, -b via v_k"), "general, -b via v_k");
    fan_step(fan.edges[k]);
    return;
  }
  // T = (v_s, ..., u, v_k, ..., v_{j-1}, u)
  if (k > top) {
    shift_to(pc_, fan, top);
    swap(chain(fan.leaves[top], b, a, "general, -b via u"), "general, -b via u");
    finish(fan.edges[top], a, "general, -b via u");
    return;
  }
  shift_to(pc_, fan, k);
  swap(chain(vk, -b, -a, "general, -b via u"), "general, -b via u");
  fan_step(fan.edges[k]);
}

void require_extendable(const PartialColoring& pc, EdgeId e0, Vertex hinge) {
  const SignedGraph& g = pc.graph();
  if (pc.num_colors() % 2 != 0) {
    throw PreconditionError("edge extension needs a zero-free color set");
  }
  if (pc.colored(e0)) {
    throw PreconditionError("edge " + std::to_string(e0) + " is already colored");
  }
  auto has_absent = [&](Vertex v) { return pc.colored_degree(v) < pc.num_colors(); };
  if (!has_absent(hinge)) {
    throw PreconditionError("no absent color at hinge " + std::to_string(hinge));
  }
  for (const Incidence& inc : g.incident(hinge)) {
    if (!has_absent(inc.neighbor)) {
      throw PreconditionError("no absent color at neighbor " +
                              std::to_string(inc.neighbor));
    }
  }
}

}  // namespace

void extend_one_edge(PartialColoring& pc, EdgeId e0, std::optional<Vertex> hinge,
                     const ExtendOptions& opts) {
  const SignedGraph& g = pc.graph();
  if (e0 < 0 || e0 >= g.num_edges()) {
    throw GraphError(GraphError::Kind::kUnknownEdge,
                     "edge " + std::to_string(e0) + " not in graph");
  }
  const Vertex u = hinge.value_or(g.edge(e0).u);
  g.end_index(e0, u);
  require_extendable(pc, e0, u);

  VertexSet switched;
  for (const Incidence& inc : g.incident(u)) {
    if (pc.sign(inc.edge) == Sign::kPositive) {
      switched.push_back(inc.neighbor);
      pc.switch_vertex(inc.neighbor);
    }
  }
  Extender ext(pc, u, opts);
  ext.general_step(e0);
  for (Vertex w : switched) pc.switch_vertex(w);
  if (opts.verify_each_step && !pc.consistent()) {
    throw InternalError("extension left an inconsistent coloring");
  }
}

EdgeColoring extend_one_edge(const SignedGraph& g, const PartialColoring& gamma0,
                             EdgeId e0, std::optional<Vertex> hinge) {
  if (&gamma0.graph() != &g) {
    throw GraphError(GraphError::Kind::kWrongGraph,
                     "partial coloring belongs to another graph");
  }
  PartialColoring pc = gamma0;
  pc.clear(e0);
  if (pc.num_colored() != g.num_edges() - 1) {
    throw PreconditionError("every edge except the initial one must be colored");
  }
  extend_one_edge(pc, e0, hinge);
  return pc.to_coloring();
}

namespace {

int zero_free_size(int max_degree) {
  return max_degree % 2 == 1 ? max_degree + 1 : max_degree + 2;
}

std::vector<EdgeId> id_order(int m) {
  std::vector<EdgeId> order(m);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

void check_order(const SignedGraph& g, std::span<const EdgeId> order) {
  std::vector<EdgeId> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != id_order(g.num_edges())) {
    throw PreconditionError("insertion order must list every edge exactly once");
  }
}

/// Zero-free coloring of g's edges with n colors, inserting `order` one edge
/// at a time at its first endpoint.
PartialColoring insert_all(const SignedGraph& g, int n,
                           std::span<const EdgeId> order) {
  PartialColoring pc(g, n);
  for (EdgeId e : order) extend_one_edge(pc, e);
  return pc;
}

}  // namespace

EdgeColoring zero_free_color(const SignedGraph& g, std::span<const EdgeId> order) {
  std::vector<EdgeId> seq;
  if (order.empty()) {
    seq = id_order(g.num_edges());
  } else {
    check_order(g, order);
    seq.assign(order.begin(), order.end());
  }
  return insert_all(g, zero_free_size(g.max_degree()), seq).to_coloring();
}

EdgeColoring delta_color_independent(const SignedGraph& g) {
  const int delta = g.max_degree();
  if (delta == 0 || delta % 2 != 0) {
    throw PreconditionError("Δ-coloring needs an even positive maximum degree");
  }
  if (max_degree_subgraph(g).graph.num_edges() != 0) {
    throw PreconditionError("maximum-degree vertices are not independent");
  }
  // One edge per maximum-degree vertex comes out; the rest has Δ - 1, odd,
  // and is colored from M_Δ. Each removed edge then goes back at its
  // maximum-degree end, whose neighbors all have degree below Δ.
  std::vector<char> removed(g.num_edges(), 0);
  std::vector<std::pair<EdgeId, Vertex>> reinsert;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != delta) continue;
    const EdgeId e = g.incident(v).front().edge;
    removed[e] = 1;
    reinsert.emplace_back(e, v);
  }
  PartialColoring pc(g, delta);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!removed[e]) extend_one_edge(pc, e);
  }
  for (auto [e, v] : reinsert) extend_one_edge(pc, e, v);
  return pc.to_coloring();
}

EdgeColoring color(const SignedGraph& g, std::span<const EdgeId> order) {
  const int delta = g.max_degree();
  if (delta == 0) return EdgeColoring(1, std::vector<EndColors>(g.num_edges()));
  if (delta % 2 == 1) return zero_free_color(g, order);

  // Greedy maximal matching among edges joining two maximum-degree vertices.
  std::vector<char> covered(g.num_vertices(), 0);
  std::vector<EdgeId> matching;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (g.degree(ed.u) == delta && g.degree(ed.v) == delta && !covered[ed.u] &&
        !covered[ed.v]) {
      covered[ed.u] = covered[ed.v] = 1;
      matching.push_back(e);
    }
  }
  if (matching.empty()) return delta_color_independent(g);

  const Subgraph rest = remove_edges(g, matching);
  EdgeColoring inner;
  if (rest.graph.max_degree() == delta - 1) {
    std::vector<EdgeId> sub_order;
    if (!order.empty()) {
      check_order(g, order);
      std::vector<EdgeId> host_to_sub(g.num_edges(), -1);
      for (EdgeId i = 0; i < rest.graph.num_edges(); ++i) host_to_sub[rest.edges[i]] = i;
      for (EdgeId e : order) {
        if (host_to_sub[e] >= 0) sub_order.push_back(host_to_sub[e]);
      }
    }
    inner = zero_free_color(rest.graph, sub_order);
  } else {
    inner = delta_color_independent(rest.graph);
  }
  std::vector<EndColors> ends(g.num_edges(), EndColors{0, 0});
  for (EdgeId i = 0; i < rest.graph.num_edges(); ++i) ends[rest.edges[i]] = inner.ends(i);
  return EdgeColoring(delta + 1, std::move(ends));
}

}  // namespace sigcolor
