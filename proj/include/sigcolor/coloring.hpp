#pragma once

#include <array>
#include <span>
#include <vector>

#include "sigcolor/core.hpp"

namespace sigcolor {

/// A signed color. Magnitude is the absolute value; 0 is its own opposite.
using Color = int;

inline constexpr int magnitude(Color c) noexcept { return c < 0 ? -c : c; }

/// M_n: {0, ±1, ..., ±k} for n = 2k + 1, {±1, ..., ±k} for n = 2k.
class ColorSet {
 public:
  explicit ColorSet(int n);

  int size() const noexcept { return n_; }
  int max_magnitude() const noexcept { return n_ / 2; }
  bool has_zero() const noexcept { return n_ % 2 == 1; }
  bool contains(Color c) const noexcept {
    return magnitude(c) <= max_magnitude() && (c != 0 || has_zero());
  }
  /// Ascending order: -k, ..., -1, [0,] 1, ..., k.
  std::vector<Color> members() const;

 private:
  int n_;
};

/// Throws PreconditionError for n = 0.
ColorSet make_color_set(int n);

/// Smallest n with every listed color in M_n.
int span_of(std::span<const Color> colors);

/// Colors at the two ends of one edge, indexed like Edge::u / Edge::v.
using EndColors = std::array<Color, 2>;

/// An n-edge coloring: one color per incidence.
///
/// The raw constructor accepts any per-incidence assignment inside M_n so
/// that files and tests can express colorings breaking the edge law; validate
/// reports those. from_first_ends derives the second end from the edge law.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  EdgeColoring(int n, std::vector<EndColors> ends);

  static EdgeColoring from_first_ends(const SignedGraph& g, int n,
                                      std::span<const Color> first_end);

  int num_colors() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(ends_.size()); }
  ColorSet color_set() const { return ColorSet(n_); }

  const EndColors& ends(EdgeId e) const { return ends_.at(e); }
  std::span<const EndColors> all_ends() const noexcept { return ends_; }
  Color at(const SignedGraph& g, Vertex v, EdgeId e) const {
    return ends_.at(e)[g.end_index(e, v)];
  }

  /// Smallest n with every used color in M_n.
  int span() const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  int n_ = 1;
  std::vector<EndColors> ends_;
};

struct Verdict {
  enum class Kind { kProper, kInvalidEdgeLaw, kImproper };

  Kind kind = Kind::kProper;
  EdgeId edge = -1;    // offending edge (edge law) or the second edge sharing
                       // the repeated color (improper)
  Vertex vertex = -1;  // vertex with the repeated color
  Color color = 0;

  bool proper() const noexcept { return kind == Kind::kProper; }
};

/// First violation in (edge id, vertex id) order. Throws
/// GraphError(kWrongGraph) when the coloring's edge count differs from g's.
Verdict validate(const SignedGraph& g, const EdgeColoring& gamma);

inline bool is_proper(const SignedGraph& g, const EdgeColoring& gamma) {
  return validate(g, gamma).proper();
}

/// Coloring of switch_vertices(g, x): every incidence at a vertex of x is
/// negated. Throws PreconditionError if gamma is not proper on g.
EdgeColoring switch_coloring(const SignedGraph& g, const EdgeColoring& gamma,
                             std::span<const Vertex> x);

/// Colors present at v, in incidence order.
std::vector<Color> present_colors(const SignedGraph& g,
                                  const EdgeColoring& gamma, Vertex v);

struct MagnitudeComponent {
  enum class Kind { kPath, kCircle };

  Kind kind = Kind::kPath;
  std::vector<Vertex> vertices;  // walk order; a circle does not repeat v0
  std::vector<EdgeId> edges;     // edges[i] joins vertices[i], vertices[i+1]
  bool positive = true;          // sign product over edges
};

/// Σ_a[γ]: edges colored ±a with their path/circle decomposition.
struct MagnitudeSubgraph {
  int magnitude = 0;
  std::vector<EdgeId> edges;
  std::vector<MagnitudeComponent> components;

  bool is_balanced() const;
  int max_degree(const SignedGraph& g) const;
};

/// Throws PreconditionError when a is not a magnitude of M_n or the edges of
/// magnitude a do not form paths and circles (gamma improper).
MagnitudeSubgraph magnitude_subgraph(const SignedGraph& g,
                                     const EdgeColoring& gamma, int a);

/// Checks every magnitude class of a proper coloring: Σ_0 is a matching and
/// each Σ_a (a ≠ 0) has maximum degree 2 with only positive circles.
bool has_magnitude_structure(const SignedGraph& g, const EdgeColoring& gamma);

}  // namespace sigcolor
