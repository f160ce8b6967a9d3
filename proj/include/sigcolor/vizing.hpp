#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigcolor/coloring.hpp"
#include "sigcolor/core.hpp"

namespace sigcolor {

/// Working state of the extension engine: a proper coloring of the colored
/// edges of a graph whose remaining edges are uncolored, together with a
/// working signature that local switchings may change.
///
/// Holds a pointer to the graph; the graph must outlive the coloring.
class PartialColoring {
 public:
  PartialColoring(const SignedGraph& g, int num_colors);
  /// Every edge colored as in gamma. Throws PreconditionError if gamma is
  /// not proper on g.
  PartialColoring(const SignedGraph& g, const EdgeColoring& gamma);

  const SignedGraph& graph() const noexcept { return *graph_; }
  int num_colors() const noexcept { return n_; }
  Sign sign(EdgeId e) const { return signs_.at(e); }
  std::span<const Sign> signature() const noexcept { return signs_; }

  bool colored(EdgeId e) const { return colors_.at(e)[0] != kUncolored; }
  int num_colored() const noexcept { return num_colored_; }
  /// Color of edge e at its end v; e must be colored.
  Color at(Vertex v, EdgeId e) const;
  std::optional<EdgeId> edge_with(Vertex v, Color c) const;
  bool present(Vertex v, Color c) const { return edge_with(v, c).has_value(); }
  bool absent(Vertex v, Color c) const { return !present(v, c); }
  /// Absent colors at v in preference order 1, -1, 2, -2, ... (0 last).
  std::vector<Color> absent_colors(Vertex v) const;
  int colored_degree(Vertex v) const;

  /// Colors e with c at end v and the edge-law color at the other end.
  /// Throws InternalError if either color is already present there.
  void assign(EdgeId e, Vertex v, Color c);
  void clear(EdgeId e);
  /// Negates the working sign of every edge at w and every color at w.
  void switch_vertex(Vertex w);

  /// Throws PreconditionError unless every edge is colored.
  EdgeColoring to_coloring() const;
  /// Full recheck of the edge law, propriety and the color index.
  bool consistent() const;

  static constexpr Color kUncolored = 1 << 30;

 private:
  std::size_t slot(Vertex v, Color c) const {
    return static_cast<std::size_t>(v) * width_ + static_cast<std::size_t>(c + k_);
  }

  const SignedGraph* graph_;
  int n_;
  int k_;
  int width_;
  int num_colored_ = 0;
  std::vector<Sign> signs_;
  std::vector<EndColors> colors_;
  std::vector<EdgeId> index_;  // (vertex, color) -> edge or -1
};

/// A maximal signed Kempe chain. Colors follow the start vertex's view:
/// `absent_color` is missing at the start, `present_color` labels the first
/// edge there. positive_prefix[i] counts positive edges before vertex i.
struct KempeChain {
  Color absent_color = 0;
  Color present_color = 0;
  Trail trail;
  std::vector<int> positive_prefix;

  Vertex start() const { return trail.vertices.front(); }
  Vertex end() const { return trail.vertices.back(); }
};

/// Throws PreconditionError when absent_color is present at v0 or
/// present_color is absent there. Chains through 0 are built for inspection
/// and stop at their first self-intersection.
KempeChain kempe_chain(const PartialColoring& pc, Vertex v0, Color absent_color,
                       Color present_color);
KempeChain kempe_chain(const SignedGraph& g, const EdgeColoring& gamma,
                       Vertex v0, Color absent_color, Color present_color);

/// Interchanges a with b and -a with -b on every incidence of the chain.
/// Throws PreconditionError for a chain involving color 0.
void kempe_swap(PartialColoring& pc, const KempeChain& chain);
EdgeColoring kempe_swap(const SignedGraph& g, const EdgeColoring& gamma,
                        const KempeChain& chain);

/// Fan at a hinge. leaves[i] = v_i, edges[i] = e_i = hinge v_i, and
/// base_colors[i] = γ_0(e_i) (entry 0 unused: e_0 starts uncolored).
struct Fan {
  Vertex hinge = 0;
  std::vector<Vertex> leaves;
  std::vector<EdgeId> edges;
  std::vector<Color> base_colors;
  /// Neighbors switched so that every edge at the hinge is negative.
  VertexSet switched;
  /// Index of the shifted coloring the partial coloring currently holds.
  int shift = 0;

  int last() const { return static_cast<int>(leaves.size()) - 1; }
  /// Fan index of edge e, or -1.
  int index_of(EdgeId e) const;
};

/// Switches the hinge's positive neighbors (recorded in Fan::switched), then
/// grows the greedy maximal fan: each next edge is the smallest-id colored
/// edge at the hinge whose color is absent at the previous leaf. When
/// `first_edge` is given it is taken as e_1. e0 must be uncolored.
Fan build_fan(PartialColoring& pc, EdgeId e0, Vertex hinge,
              std::optional<EdgeId> first_edge = std::nullopt);

/// Reverts the switching recorded by build_fan.
void undo_local_switching(PartialColoring& pc, const Fan& fan);

/// Moves pc to the shifted coloring γ_i of the fan. Throws InternalError if
/// a fan edge no longer carries the color its current shift prescribes.
void shift_to(PartialColoring& pc, Fan& fan, int i);

/// γ_i as a standalone copy.
PartialColoring shifted_coloring(const PartialColoring& pc, const Fan& fan,
                                 int i);

struct ExtendOptions {
#ifdef NDEBUG
  bool verify_each_step = false;
#else
  bool verify_each_step = true;
#endif
};

/// Colors the uncolored edge e0 using the hinge (default: first endpoint),
/// keeping every other colored edge proper and the color set unchanged.
/// Requires a zero-free color set and an absent color at the hinge and at
/// each of its neighbors; violations raise PreconditionError. Unlisted
/// configurations in the case analysis raise InternalError.
void extend_one_edge(PartialColoring& pc, EdgeId e0,
                     std::optional<Vertex> hinge = std::nullopt,
                     const ExtendOptions& opts = {});

/// Whole-coloring convenience form: gamma0 colors every edge except e0 (its
/// entry is ignored); returns a proper coloring of all of g.
EdgeColoring extend_one_edge(const SignedGraph& g, const PartialColoring& gamma0,
                             EdgeId e0, std::optional<Vertex> hinge = std::nullopt);

/// Proper zero-free coloring with Δ+1 colors (Δ odd) or Δ+2 (Δ even),
/// inserting edges in id order, or in `order` when given.
EdgeColoring zero_free_color(const SignedGraph& g,
                             std::span<const EdgeId> order = {});

/// Proper zero-free Δ-coloring when Δ is even and the maximum-degree
/// vertices are pairwise non-adjacent; PreconditionError otherwise.
EdgeColoring delta_color_independent(const SignedGraph& g);

/// Proper coloring with at most Δ+1 colors. Edges of a maximal matching
/// inside the maximum-degree subgraph take color 0 when Δ is even.
EdgeColoring color(const SignedGraph& g, std::span<const EdgeId> order = {});

}  // namespace sigcolor
