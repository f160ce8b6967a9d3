#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigcolor/coloring.hpp"
#include "sigcolor/core.hpp"

namespace sigcolor {

inline constexpr int kExactEdgeLimit = 20;
inline constexpr int kRatioEdgeLimit = 14;
inline constexpr int kMatchingVertexLimit = 16;

/// A proper coloring of g drawn from M_n, or nullopt when none exists.
/// Throws SizeGuardError when g has more than 20 edges.
std::optional<EdgeColoring> exact_coloring(const SignedGraph& g, int n);

/// Smallest n admitting a proper coloring from M_n, with a witness.
struct ExactResult {
  int num_colors = 0;
  EdgeColoring witness;
};
ExactResult exact_chromatic(const SignedGraph& g);
int exact_chromatic_index(const SignedGraph& g);

enum class EdgeClass { kClass1, kClass2 };
EdgeClass class_of(const SignedGraph& g);
/// True when g has a proper coloring from M_Δ.
bool is_delta_colorable(const SignedGraph& g);

/// numerator / denominator, kept unreduced with denominator 2^m.
struct ClassRatio {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  ClassRatio reduced() const;
  std::string to_string() const;  // "num/den"
  double value() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  friend bool operator==(const ClassRatio&, const ClassRatio&) = default;
};
/// Exact comparison of two ratios.
bool operator<(const ClassRatio& a, const ClassRatio& b);

enum class RatioMode {
  kFull,       // every one of the 2^m signatures; m ≤ 14
  kSwitching,  // one signature per switching class, scaled by the class size
};

/// Fraction of the signatures on g's underlying graph that are Δ-colorable.
/// g's own signs are ignored. Full mode needs m ≤ 14; switching mode needs
/// at most 14 edges outside a spanning forest. `jobs` bounds the worker
/// threads (values below 1 mean 1).
ClassRatio class_ratio(const SignedGraph& g, RatioMode mode = RatioMode::kFull,
                       int jobs = 1);

/// Signature on a connected cubic bridgeless graph with a 3-coloring: a
/// perfect matching is negative and colored 0, the remaining circles are
/// positive and colored ±1.
struct ThreeColorableSignature {
  SignedGraph graph;
  std::vector<EdgeId> matching;
  EdgeColoring witness;
};
/// Throws PreconditionError unless g is connected, 3-regular and bridgeless;
/// SizeGuardError above 16 vertices.
ThreeColorableSignature three_colorable_signature(const SignedGraph& g);

/// Perfect matching as edge ids, or nullopt. Exhaustive with memoization on
/// vertex subsets; at most 16 vertices.
std::optional<std::vector<EdgeId>> perfect_matching(const SignedGraph& g);

/// Edges whose removal disconnects their component.
std::vector<EdgeId> bridges(const SignedGraph& g);

}  // namespace sigcolor
