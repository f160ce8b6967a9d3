#pragma once

#include <initializer_list>
#include <tuple>
#include <vector>

#include "sigcolor/coloring.hpp"
#include "sigcolor/core.hpp"

namespace testing_support {

constexpr sigcolor::Sign P = sigcolor::Sign::kPositive;
constexpr sigcolor::Sign N = sigcolor::Sign::kNegative;

/// Graph from (u, v, sign) triples, 0-based.
inline sigcolor::SignedGraph graph(
    int n, std::initializer_list<std::tuple<int, int, sigcolor::Sign>> edges) {
  std::vector<sigcolor::Edge> es;
  for (auto [u, v, s] : edges) es.push_back({u, v, s});
  return sigcolor::SignedGraph(n, std::move(es));
}

/// Σ_0 is a matching and every other magnitude class consists of paths and
/// positive circles.
inline bool magnitude_classes_ok(const sigcolor::SignedGraph& g,
                                 const sigcolor::EdgeColoring& c) {
  using namespace sigcolor;
  const int k = c.color_set().max_magnitude();
  for (int a = c.color_set().has_zero() ? 0 : 1; a <= k; ++a) {
    const MagnitudeSubgraph sub = magnitude_subgraph(g, c, a);
    if (sub.max_degree(g) > (a == 0 ? 1 : 2)) return false;
    if (a != 0 && !sub.is_balanced()) return false;
    if (a == 0) {
      for (const auto& comp : sub.components) {
        if (comp.edges.size() != 1) return false;
      }
    }
  }
  return true;
}

}  // namespace testing_support
