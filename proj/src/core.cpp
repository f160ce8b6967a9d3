#include "sigcolor/core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <string>

namespace sigcolor {

namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

}  // namespace

SignedGraph::SignedGraph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 0) {
    throw GraphError(GraphError::Kind::kVertexOutOfRange,
                     "negative vertex count");
  }
  std::vector<std::pair<Vertex, Vertex>> seen;
  seen.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= num_vertices_ || e.v < 0 || e.v >= num_vertices_) {
      throw GraphError(GraphError::Kind::kVertexOutOfRange,
                       "edge " + edge_text(e) + " has an endpoint out of range");
    }
    if (e.u == e.v) {
      throw GraphError(GraphError::Kind::kLoop,
                       "edge " + edge_text(e) + " is a loop");
    }
    seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(seen.begin(), seen.end());
  if (auto it = std::adjacent_find(seen.begin(), seen.end()); it != seen.end()) {
    throw GraphError(GraphError::Kind::kDuplicateEdge,
                     "endpoint pair (" + std::to_string(it->first) + ", " +
                         std::to_string(it->second) + ") appears twice");
  }

  std::vector<int> deg(num_vertices_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(num_vertices_ + 1, 0);
  for (int v = 0; v < num_vertices_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  incidences_.resize(offsets_.back());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < num_edges(); ++id) {
    const Edge& e = edges_[id];
    incidences_[fill[e.u]++] = {id, e.v};
    incidences_[fill[e.v]++] = {id, e.u};
  }
  max_degree_ = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::vector<Sign> SignedGraph::signature() const {
  std::vector<Sign> s;
  s.reserve(edges_.size());
  for (const Edge& e : edges_) s.push_back(e.sign);
  return s;
}

std::span<const Incidence> SignedGraph::incident(Vertex v) const {
  if (v < 0 || v >= num_vertices_) {
    throw GraphError(GraphError::Kind::kUnknownVertex,
                     "vertex " + std::to_string(v) + " not in graph");
  }
  return std::span<const Incidence>(incidences_).subspan(
      offsets_[v], offsets_[v + 1] - offsets_[v]);
}

int SignedGraph::degree(Vertex v) const {
  return static_cast<int>(incident(v).size());
}

std::optional<EdgeId> SignedGraph::find_edge(Vertex a, Vertex b) const {
  for (const Incidence& inc : incident(a)) {
    if (inc.neighbor == b) return inc.edge;
  }
  return std::nullopt;
}

Vertex SignedGraph::other_end(EdgeId e, Vertex v) const {
  const Edge& ed = edge(e);
  return ed.u == v ? ed.v : ed.u;
}

int SignedGraph::end_index(EdgeId e, Vertex v) const {
  const Edge& ed = edge(e);
  if (ed.u == v) return 0;
  if (ed.v == v) return 1;
  throw GraphError(GraphError::Kind::kUnknownVertex,
                   "vertex " + std::to_string(v) + " is not an end of edge " +
                       std::to_string(e));
}

SignedGraph SignedGraph::with_signature(std::span<const Sign> signature) const {
  if (static_cast<int>(signature.size()) != num_edges()) {
    throw GraphError(GraphError::Kind::kWrongGraph,
                     "signature length does not match edge count");
  }
  SignedGraph out = *this;
  for (EdgeId e = 0; e < num_edges(); ++e) out.edges_[e].sign = signature[e];
  return out;
}

bool SignedGraph::same_underlying(const SignedGraph& other) const {
  if (num_vertices_ != other.num_vertices_ || num_edges() != other.num_edges()) {
    return false;
  }
  for (EdgeId e = 0; e < num_edges(); ++e) {
    if (edges_[e].u != other.edges_[e].u || edges_[e].v != other.edges_[e].v) {
      return false;
    }
  }
  return true;
}

bool is_trail(const SignedGraph& g, const Trail& t) {
  if (t.vertices.size() != t.edges.size() + 1) return false;
  std::vector<char> used(g.num_edges(), 0);
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const EdgeId e = t.edges[i];
    if (e < 0 || e >= g.num_edges() || used[e]) return false;
    used[e] = 1;
    const Edge& ed = g.edge(e);
    const Vertex a = t.vertices[i];
    const Vertex b = t.vertices[i + 1];
    if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) return false;
  }
  return true;
}

int positive_prefix_count(const SignedGraph& g, const Trail& t, int k) {
  int count = 0;
  for (int i = 0; i < k; ++i) {
    if (g.sign(t.edges.at(i)) == Sign::kPositive) ++count;
  }
  return count;
}

SignedGraph build_graph(int num_vertices, std::vector<Edge> edges) {
  return SignedGraph(num_vertices, std::move(edges));
}

SignedGraph switch_vertices(const SignedGraph& g, std::span<const Vertex> x) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : x) {
    if (v < 0 || v >= g.num_vertices()) {
      throw GraphError(GraphError::Kind::kUnknownVertex,
                       "switching set names vertex " + std::to_string(v));
    }
    in[v] = 1;
  }
  std::vector<Sign> s = g.signature();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (in[ed.u] != in[ed.v]) s[e] = -s[e];
  }
  return g.with_signature(s);
}

SignedGraph negate(const SignedGraph& g) {
  std::vector<Sign> s = g.signature();
  for (Sign& x : s) x = -x;
  return g.with_signature(s);
}

bool is_balanced(const SignedGraph& g, BalanceMode mode) {
  const bool anti = mode == BalanceMode::kAntibalance;
  // label[v] is the switching state that makes every tree edge positive.
  std::vector<int> label(g.num_vertices(), 0);
  std::queue<Vertex> q;
  for (Vertex root = 0; root < g.num_vertices(); ++root) {
    if (label[root] != 0) continue;
    label[root] = 1;
    q.push(root);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (const Incidence& inc : g.incident(v)) {
        int s = to_int(g.sign(inc.edge));
        if (anti) s = -s;
        const int want = label[v] * s;
        if (label[inc.neighbor] == 0) {
          label[inc.neighbor] = want;
          q.push(inc.neighbor);
        } else if (label[inc.neighbor] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<VertexSet> switching_equivalent(const SignedGraph& g1,
                                              const SignedGraph& g2) {
  if (!g1.same_underlying(g2)) {
    throw GraphError(GraphError::Kind::kUnderlyingMismatch,
                     "switching equivalence needs equal underlying graphs");
  }
  std::vector<int> state(g1.num_vertices(), -1);
  std::queue<Vertex> q;
  for (Vertex root = 0; root < g1.num_vertices(); ++root) {
    if (state[root] != -1) continue;
    state[root] = 0;
    q.push(root);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (const Incidence& inc : g1.incident(v)) {
        const int flip = g1.sign(inc.edge) != g2.sign(inc.edge) ? 1 : 0;
        if (state[inc.neighbor] == -1) {
          state[inc.neighbor] = state[v] ^ flip;
          q.push(inc.neighbor);
        }
      }
    }
  }
  for (EdgeId e = 0; e < g1.num_edges(); ++e) {
    const Edge& ed = g1.edge(e);
    const int flip = g1.sign(e) != g2.sign(e) ? 1 : 0;
    if ((state[ed.u] ^ state[ed.v]) != flip) return std::nullopt;
  }
  VertexSet x;
  for (Vertex v = 0; v < g1.num_vertices(); ++v) {
    if (state[v] == 1) x.push_back(v);
  }
  return x;
}

std::vector<int> connected_components(const SignedGraph& g) {
  std::vector<int> comp(g.num_vertices(), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.num_vertices(); ++root) {
    if (comp[root] != -1) continue;
    comp[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.incident(v)) {
        if (comp[inc.neighbor] == -1) {
          comp[inc.neighbor] = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  return comp;
}

int frustration_index(const SignedGraph& g) {
  const std::vector<int> comp = connected_components(g);
  const int num_comp =
      comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<Vertex>> members(num_comp);
  for (Vertex v = 0; v < g.num_vertices(); ++v) members[comp[v]].push_back(v);

  int total = 0;
  std::vector<char> flipped(g.num_vertices(), 0);
  for (const auto& vs : members) {
    if (static_cast<int>(vs.size()) > kFrustrationComponentLimit) {
      throw SizeGuardError("frustration index: component with " +
                           std::to_string(vs.size()) + " vertices exceeds " +
                           std::to_string(kFrustrationComponentLimit));
    }
    int negatives = 0;
    for (Vertex v : vs) {
      for (const Incidence& inc : g.incident(v)) {
        if (inc.neighbor > v && g.sign(inc.edge) == Sign::kNegative) ++negatives;
      }
    }
    // Gray-code walk over switchings of vs[1..]; vs[0] stays fixed.
    int best = negatives;
    const std::uint64_t steps = std::uint64_t{1} << (vs.size() - 1);
    for (std::uint64_t i = 1; i < steps; ++i) {
      const int bit = std::countr_zero(i);
      const Vertex w = vs[bit + 1];
      for (const Incidence& inc : g.incident(w)) {
        const bool neg_now = (g.sign(inc.edge) == Sign::kNegative) !=
                             (flipped[w] != flipped[inc.neighbor]);
        negatives += neg_now ? -1 : 1;
      }
      flipped[w] ^= 1;
      best = std::min(best, negatives);
    }
    total += best;
  }
  return total;
}

Subgraph induced_subgraph(const SignedGraph& g, std::span<const Vertex> keep) {
  std::vector<int> index(g.num_vertices(), -1);
  Subgraph out;
  for (Vertex v : keep) {
    if (v < 0 || v >= g.num_vertices()) {
      throw GraphError(GraphError::Kind::kUnknownVertex,
                       "vertex " + std::to_string(v) + " not in graph");
    }
    if (index[v] == -1) {
      index[v] = static_cast<int>(out.vertices.size());
      out.vertices.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (index[ed.u] >= 0 && index[ed.v] >= 0) {
      edges.push_back({index[ed.u], index[ed.v], ed.sign});
      out.edges.push_back(e);
    }
  }
  out.graph = SignedGraph(static_cast<int>(out.vertices.size()), std::move(edges));
  return out;
}

Subgraph max_degree_subgraph(const SignedGraph& g) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == g.max_degree()) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Subgraph remove_edges(const SignedGraph& g, std::span<const EdgeId> drop) {
  std::vector<char> gone(g.num_edges(), 0);
  for (EdgeId e : drop) gone.at(e) = 1;
  Subgraph out;
  out.vertices.resize(g.num_vertices());
  std::iota(out.vertices.begin(), out.vertices.end(), 0);
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (gone[e]) continue;
    edges.push_back(g.edge(e));
    out.edges.push_back(e);
  }
  out.graph = SignedGraph(g.num_vertices(), std::move(edges));
  return out;
}

}  // namespace sigcolor
