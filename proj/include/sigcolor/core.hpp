#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sigcolor/error.hpp"

namespace sigcolor {

using Vertex = int;
using EdgeId = int;

enum class Sign : std::int8_t { kNegative = -1, kPositive = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::kPositive ? Sign::kNegative : Sign::kPositive;
}
constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::kPositive : Sign::kNegative;
}

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Sign sign = Sign::kNegative;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// One entry of a vertex's incidence list.
struct Incidence {
  EdgeId edge = 0;
  Vertex neighbor = 0;
};

/// Simple undirected graph with a +/- signature on its edges.
///
/// Vertices are 0..n-1. Edge ids are the positions in the constructor's edge
/// list and stay stable through every signature-changing operation. The
/// incidence list of each vertex is ordered by edge id.
class SignedGraph {
 public:
  SignedGraph() = default;

  /// Throws GraphError on a loop, a repeated endpoint pair or an endpoint
  /// outside 0..num_vertices-1.
  SignedGraph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const noexcept { return num_vertices_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  Sign sign(EdgeId e) const { return edges_.at(e).sign; }
  std::vector<Sign> signature() const;

  std::span<const Incidence> incident(Vertex v) const;
  int degree(Vertex v) const;
  int max_degree() const noexcept { return max_degree_; }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  Vertex other_end(EdgeId e, Vertex v) const;
  /// 0 when v is the first-listed endpoint of e, 1 when it is the second.
  int end_index(EdgeId e, Vertex v) const;

  /// Same underlying graph, new signature (one sign per edge id).
  SignedGraph with_signature(std::span<const Sign> signature) const;
  bool same_underlying(const SignedGraph& other) const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }

 private:
  int num_vertices_ = 0;
  int max_degree_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Incidence> incidences_;
};

using VertexSet = std::vector<Vertex>;

/// Alternating vertex/edge sequence; edges[i] joins vertices[i] and
/// vertices[i + 1].
struct Trail {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  int length() const noexcept { return static_cast<int>(edges.size()); }
};

/// Checks that consecutive elements are incident and that no edge repeats.
bool is_trail(const SignedGraph& g, const Trail& t);

/// Number of positive edges among the first k edges of the trail, i.e.
/// between vertices[0] and vertices[k].
int positive_prefix_count(const SignedGraph& g, const Trail& t, int k);

/// Induced or edge-restricted subgraph with the maps back to the host.
struct Subgraph {
  SignedGraph graph;
  std::vector<Vertex> vertices;  // host id of each subgraph vertex
  std::vector<EdgeId> edges;     // host id of each subgraph edge
};

enum class BalanceMode { kBalance, kAntibalance };

SignedGraph build_graph(int num_vertices, std::vector<Edge> edges);

/// Negates every edge with exactly one endpoint in x.
SignedGraph switch_vertices(const SignedGraph& g, std::span<const Vertex> x);

SignedGraph negate(const SignedGraph& g);

bool is_balanced(const SignedGraph& g,
                 BalanceMode mode = BalanceMode::kBalance);

/// A set X with switch_vertices(g1, X) == g2, or nullopt when the two
/// signatures lie in different switching classes. In each component the
/// smallest vertex is left unswitched. Throws GraphError(kUnderlyingMismatch)
/// when the underlying graphs differ.
std::optional<VertexSet> switching_equivalent(const SignedGraph& g1,
                                              const SignedGraph& g2);

inline constexpr int kFrustrationComponentLimit = 24;

/// Exact frustration index by enumerating the switchings of each component.
/// Throws SizeGuardError for a component with more than 24 vertices.
int frustration_index(const SignedGraph& g);

/// Subgraph induced by the vertices of maximum degree.
Subgraph max_degree_subgraph(const SignedGraph& g);

Subgraph induced_subgraph(const SignedGraph& g, std::span<const Vertex> keep);

/// Keeps every vertex; drops the listed edges. Edge ids are renumbered in
/// increasing host order.
Subgraph remove_edges(const SignedGraph& g, std::span<const EdgeId> drop);

/// Component label per vertex, labels dense from 0 in order of the smallest
/// member.
std::vector<int> connected_components(const SignedGraph& g);

}  // namespace sigcolor
