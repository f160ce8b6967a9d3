#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sigcolor/coloring.hpp"
#include "sigcolor/core.hpp"
#include "sigcolor/linegraph.hpp"

namespace sigcolor {

inline constexpr int kReversibleEdgeLimit = 14;
inline constexpr int kChiStarVertexLimit = 10;
inline constexpr int kDecompositionEdgeLimit = 12;
inline constexpr int kTotalVertexLimit = 5;

// Reversible colorings

/// True when e lies on a path component of its magnitude class.
bool edge_reversible(const SignedGraph& g, const EdgeColoring& gamma, EdgeId e);
/// Every magnitude class other than 0 is a union of paths.
bool is_completely_reversible(const SignedGraph& g, const EdgeColoring& gamma);
/// Proper coloring of g with the sign of e negated, keeping every color
/// magnitude; only the path component holding e is recolored. Throws
/// PreconditionError if gamma is improper or e is not reversible.
EdgeColoring reverse_edge(const SignedGraph& g, const EdgeColoring& gamma, EdgeId e);
/// The graph that reverse_edge colors.
SignedGraph with_edge_negated(const SignedGraph& g, EdgeId e);

/// Fewest colors in a zero-free proper coloring whose magnitude classes are
/// linear forests. m ≤ 14.
int chi_R_exact(const SignedGraph& g);
/// Fewest linear forests covering the edges (signs ignored). m ≤ 14.
int linear_arboricity_exact(const SignedGraph& g);

// Antiproper colorings

/// First (vertex, edge, edge) with γ(v,e) = -γ(v,f), as a witness.
struct AntiproperVerdict {
  Vertex vertex = -1;
  EdgeId first = -1;
  EdgeId second = -1;
  bool antiproper() const noexcept { return vertex < 0; }
};
/// gamma must satisfy the edge law (PreconditionError otherwise).
AntiproperVerdict check_antiproper(const SignedGraph& g, const EdgeColoring& gamma);
inline bool is_antiproper(const SignedGraph& g, const EdgeColoring& gamma) {
  return check_antiproper(g, gamma).antiproper();
}
/// Every magnitude class, taken as a signed subgraph, is antibalanced.
bool magnitude_classes_antibalanced(const SignedGraph& g, const EdgeColoring& gamma);

/// Fewest colors of a zero-free Zaslavsky-proper vertex coloring; 0 when g
/// has no edges. n ≤ 10.
int chi_star_exact(const SignedGraph& g);
/// Fewest balanced edge sets partitioning the edges; 0 when g has no
/// edges. m ≤ 12.
int delta0_exact(const SignedGraph& g);
/// Fewest colors of a zero-free antiproper coloring; 0 when g has no edges.
/// m ≤ 12.
int chi_A_exact(const SignedGraph& g);

// Total colorings

/// Vertex colors plus incidence colors from one M_n.
struct TotalColoring {
  int num_colors = 1;
  std::vector<Color> vertex_colors;
  EdgeColoring incidences;
};

enum class TotalMode {
  kTotal,    // vertex part proper on -g
  kTwisted,  // vertex part proper on g
};

struct TotalVerdict {
  enum class Kind { kProper, kVertexClash, kEdgeInvalid, kEdgeImproper, kIncidenceClash };
  Kind kind = Kind::kProper;
  Vertex vertex = -1;
  EdgeId edge = -1;
  bool proper() const noexcept { return kind == Kind::kProper; }
};
/// Throws GraphError(kWrongGraph) on a size mismatch, PreconditionError for
/// colors outside M_n.
TotalVerdict validate_total(const SignedGraph& g, const TotalColoring& mu,
                            TotalMode mode = TotalMode::kTotal);
/// Negates the colors of every vertex in x and of every incidence at x.
TotalColoring switch_total(const SignedGraph& g, const TotalColoring& mu,
                           std::span<const Vertex> x);

struct TotalResult {
  int num_colors = 0;
  TotalColoring witness;
};
/// Fewest colors of a (twisted) total coloring. n ≤ 5.
TotalResult chi_total_exact(const SignedGraph& g, TotalMode mode = TotalMode::kTotal);

}  // namespace sigcolor
