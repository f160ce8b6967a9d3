#pragma once

// Structural checks on Kempe chains and swaps, shared by the unit tests and
// the acceptance binary.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sigcolor/vizing.hpp"

namespace kempe_checks {

using namespace sigcolor;

inline std::multiset<Color> present_at(const PartialColoring& pc, Vertex v) {
  std::multiset<Color> out;
  for (const Incidence& inc : pc.graph().incident(v)) {
    if (pc.colored(inc.edge)) out.insert(pc.at(v, inc.edge));
  }
  return out;
}

/// Empty string when the chain meets every clause; otherwise a reason.
inline std::string chain_problem(const PartialColoring& pc, const KempeChain& k) {
  const SignedGraph& g = pc.graph();
  const Color a = k.absent_color;
  const Color b = k.present_color;
  const auto& vs = k.trail.vertices;
  const auto& es = k.trail.edges;
  if (vs.size() != es.size() + 1 || k.positive_prefix.size() != vs.size()) {
    return "length mismatch";
  }
  if (!is_trail(g, k.trail)) return "not a trail";
  if (pc.present(vs[0], a) || !pc.present(vs[0], b)) return "bad start colors";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (k.positive_prefix[i] != positive_prefix_count(g, k.trail, static_cast<int>(i))) {
      return "positive prefix mismatch";
    }
  }
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (!pc.colored(es[i])) return "uncolored chain edge";
    const int want = magnitude(i % 2 == 0 ? b : a);
    if (magnitude(pc.at(vs[i], es[i])) != want) return "magnitudes do not alternate";
  }
  if (!es.empty() && pc.at(vs[0], es[0]) != b) return "first edge not colored b";
  // Interior visits and the stopping rule: the colors at v_i lie in
  // {s a, s b} with s = (-1)^{t_i}, entering on one and leaving on the other.
  for (std::size_t i = 1; i < vs.size(); ++i) {
    const int s = k.positive_prefix[i] % 2 == 0 ? 1 : -1;
    const Color in = pc.at(vs[i], es[i - 1]);
    if (in != s * a && in != s * b) return "entry color outside the pair";
    const Color out_color = in == s * a ? s * b : s * a;
    if (i + 1 < vs.size()) {
      if (pc.at(vs[i], es[i]) != out_color) return "exit color wrong";
    } else {
      const auto next = pc.edge_with(vs[i], out_color);
      if (next && std::find(es.begin(), es.end(), *next) == es.end()) {
        return "chain not maximal";
      }
    }
  }
  std::map<Vertex, std::vector<std::size_t>> visits;
  for (std::size_t i = 0; i < vs.size(); ++i) visits[vs[i]].push_back(i);
  for (const auto& [v, at] : visits) {
    if (at.size() > 2) return "vertex visited more than twice";
    if (at.size() == 2) {
      const int pos = k.positive_prefix[at[1]] - k.positive_prefix[at[0]];
      if (pos % 2 == 0) return "repeat subtrail with even positive count";
    }
  }
  if (a == 0 || b == 0) {
    // Zero chains stop at their first self-intersection.
    for (const auto& [v, at] : visits) {
      if (at.size() == 2 && at[1] != vs.size() - 1) return "zero chain runs past a repeat";
    }
  }
  return {};
}

/// Empty when the swap result is consistent and present colors changed only
/// at the chain's ends, as prescribed.
inline std::string swap_problem(const PartialColoring& before, const PartialColoring& after,
                                const KempeChain& k) {
  if (!after.consistent()) return "swap broke propriety";
  const SignedGraph& g = before.graph();
  const Vertex v0 = k.start();
  const Vertex vm = k.end();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (v == v0 || v == vm) continue;
    if (present_at(before, v) != present_at(after, v)) return "interior present set changed";
  }
  if (k.trail.edges.empty()) return {};
  if (v0 != vm) {
    auto want = present_at(before, v0);
    want.erase(want.find(k.present_color));
    want.insert(k.absent_color);
    if (present_at(after, v0) != want) return "start vertex changed wrongly";
    const int s = k.positive_prefix.back() % 2 == 0 ? 1 : -1;
    auto end_before = present_at(before, vm);
    auto end_after = present_at(after, vm);
    auto swap_end = [&](std::multiset<Color> m) {
      std::multiset<Color> out;
      for (Color c : m) {
        if (c == s * k.absent_color) out.insert(s * k.present_color);
        else if (c == s * k.present_color) out.insert(s * k.absent_color);
        else out.insert(c);
      }
      return out;
    };
    if (swap_end(end_before) != end_after) return "end vertex changed wrongly";
  }
  return {};
}

// Random absent/present pair at a random vertex, or false when the vertex
// has no usable pair.
inline bool pick_pair(const PartialColoring& pc, std::mt19937_64& rng, Vertex& v, Color& a,
                      Color& b) {
  const SignedGraph& g = pc.graph();
  v = static_cast<Vertex>(rng() % g.num_vertices());
  const auto absent = pc.absent_colors(v);
  std::vector<Color> present;
  for (const Incidence& inc : g.incident(v)) present.push_back(pc.at(v, inc.edge));
  if (absent.empty() || present.empty()) return false;
  a = absent[rng() % absent.size()];
  b = present[rng() % present.size()];
  return magnitude(a) != magnitude(b) || a == -b;
}

}  // namespace kempe_checks
