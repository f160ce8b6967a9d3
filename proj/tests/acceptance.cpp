// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "kempe_checks.hpp"
#include "oracles.hpp"
#include "sigcolor/coloring.hpp"
#include "sigcolor/exact.hpp"
#include "sigcolor/extras.hpp"
#include "sigcolor/generators.hpp"
#include "sigcolor/linegraph.hpp"
#include "sigcolor/vizing.hpp"

using namespace sigcolor;

namespace {

// Tolerances and sizes, fixed here.
constexpr int kRandomGraphs = 1000;
constexpr int kMaxRandomVertices = 30;
constexpr double kDensities[] = {0.2, 0.5, 0.8};
constexpr double kRandomBudgetSeconds = 30.0;
constexpr int kSandwichVertices = 5;
constexpr int kAllNegativeVertices = 6;
constexpr int kMinChains = 10000;
constexpr int kMaxChainVertices = 12;
constexpr int kLineGraphEdges = 6;
constexpr int kLineGraphColors = 4;
constexpr int kCatalogVertices = 6;
constexpr int kCatalogEdges = 8;
constexpr int kTotalVertices = 4;
constexpr int kSwitchPairs = 500;
// Full enumeration of the 1024 signatures of K_5.
constexpr ClassRatio kK5Ratio{496, 1024};

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Every coloring produced in the run passes through here.
struct MagnitudeTally {
  long seen = 0;
  long bad = 0;
  void note(const SignedGraph& g, const EdgeColoring& c) {
    if (g.num_edges() == 0) return;
    ++seen;
    if (!has_magnitude_structure(g, c) || !testing_support::magnitude_classes_ok(g, c)) ++bad;
  }
};
MagnitudeTally tally;

std::uint64_t all_masks(const SignedGraph& g) { return std::uint64_t{1} << g.num_edges(); }

SignedGraph all_negative(const SignedGraph& g) {
  return g.with_signature(std::vector<Sign>(g.num_edges(), Sign::kNegative));
}

int ceil_log2(int x) {
  int k = 0;
  while ((1 << k) < x) ++k;
  return k;
}

Outcome random_graphs_colored() {
  std::mt19937_64 rng(20240101);
  Outcome o;
  long colors = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < kRandomGraphs; ++i) {
    const int n = 1 + static_cast<int>(rng() % kMaxRandomVertices);
    const SignedGraph g = random_signed_graph(n, kDensities[i % 3], rng);
    const EdgeColoring c = color(g);
    tally.note(g, c);
    colors += c.num_colors();
    if (!validate(g, c).proper() || !oracle::proper(g, c)) {
      o.ok = false;
      o.detail = "improper coloring on graph " + std::to_string(i);
      return o;
    }
    if (c.num_colors() > g.max_degree() + 1) {
      o.ok = false;
      o.detail = "more than max degree + 1 colors on graph " + std::to_string(i);
      return o;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > kRandomBudgetSeconds) o.ok = false;
  std::ostringstream s;
  s << kRandomGraphs << " graphs, " << colors << " colors in total, " << secs << " s";
  o.detail = s.str();
  return o;
}

Outcome sandwich_small_graphs() {
  Outcome o;
  long count = 0, at_delta = 0;
  for (int n = 1; n <= kSandwichVertices; ++n) {
    for (const SignedGraph& base : labeled_graphs(n)) {
      const int d = base.max_degree();
      for (std::uint64_t mask = 0; mask < all_masks(base); ++mask) {
        const SignedGraph g = signature_from_mask(base, mask);
        const ExactResult r = exact_chromatic(g);
        tally.note(g, r.witness);
        ++count;
        at_delta += r.num_colors == d;
        if (r.num_colors < d || r.num_colors > d + 1) {
          o.ok = false;
          o.detail = "index outside [D, D+1]";
          return o;
        }
      }
    }
  }
  o.detail = std::to_string(count) + " signed graphs, " + std::to_string(at_delta) +
             " at max degree";
  return o;
}

Outcome all_negative_matches_ordinary() {
  Outcome o;
  long count = 0;
  for (int n = 1; n <= kAllNegativeVertices; ++n) {
    for (const SignedGraph& base : labeled_graphs(n)) {
      const SignedGraph g = all_negative(base);
      const ExactResult r = exact_chromatic(g);
      tally.note(g, r.witness);
      ++count;
      if (r.num_colors != oracle::ordinary_chromatic_index(g)) {
        o.ok = false;
        o.detail = "mismatch on a graph with " + std::to_string(g.num_edges()) + " edges";
        return o;
      }
    }
  }
  o.detail = std::to_string(count) + " labeled graphs";
  return o;
}

Outcome class_ratios() {
  Outcome o;
  std::ostringstream s;
  for (int n = 3; n <= 8; ++n) {
    const ClassRatio r = class_ratio(cycle_graph(n));
    if (r.reduced() != ClassRatio{1, 2}) {
      o.ok = false;
      s << "C" << n << "=" << r.to_string() << " ";
    }
  }
  const ClassRatio k4 = class_ratio(complete_graph(4));
  const ClassRatio k33 = class_ratio(complete_bipartite(3, 3));
  const ClassRatio k5 = class_ratio(complete_graph(5), RatioMode::kFull);
  if (k4.reduced() != ClassRatio{1, 1}) o.ok = false;
  if (k33 != ClassRatio{512, 512}) o.ok = false;
  if (!(k5 < ClassRatio{1, 2}) || k5 != kK5Ratio) o.ok = false;
  s << "C(C3..C8)=1/2, C(K4)=" << k4.to_string() << ", C(K3,3)=" << k33.to_string()
    << ", C(K5)=" << k5.to_string() << " (" << k5.value() << ")";
  o.detail = s.str();
  return o;
}

Outcome petersen() {
  Outcome o;
  const SignedGraph g = petersen_graph(Sign::kNegative);
  const ExactResult r = exact_chromatic(g);
  tally.note(g, r.witness);
  const ThreeColorableSignature t = three_colorable_signature(petersen_graph());
  tally.note(t.graph, t.witness);
  o.ok = r.num_colors == 4 && t.witness.num_colors() == 3 &&
         validate(t.graph, t.witness).proper() && oracle::proper(t.graph, t.witness);
  o.detail = "all-negative index " + std::to_string(r.num_colors) + ", witness signature uses " +
             std::to_string(t.witness.num_colors()) + " colors";
  return o;
}

Outcome kempe_chains() {
  Outcome o;
  std::mt19937_64 rng(77);
  long chains = 0, swaps = 0, zero_rejected = 0, repeats = 0;
  while (chains < kMinChains) {
    const int n = 2 + static_cast<int>(rng() % (kMaxChainVertices - 1));
    const SignedGraph g = random_signed_graph(n, 0.45, rng);
    if (g.num_edges() == 0) continue;
    PartialColoring pc(g, rng() % 2 ? color(g) : zero_free_color(g));
    for (int t = 0; t < 10; ++t) {
      Vertex v;
      Color a, b;
      if (!kempe_checks::pick_pair(pc, rng, v, a, b)) continue;
      const KempeChain k = kempe_chain(pc, v, a, b);
      ++chains;
      if (const std::string p = kempe_checks::chain_problem(pc, k); !p.empty()) {
        o.ok = false;
        o.detail = "chain " + std::to_string(chains) + ": " + p;
        return o;
      }
      std::vector<Vertex> vs = k.trail.vertices;
      std::sort(vs.begin(), vs.end());
      repeats += std::adjacent_find(vs.begin(), vs.end()) != vs.end();
      if (a == 0 || b == 0) {
        PartialColoring copy = pc;
        try {
          kempe_swap(copy, k);
          o.ok = false;
          o.detail = "swap through color 0 accepted";
          return o;
        } catch (const PreconditionError&) {
          ++zero_rejected;
        }
        continue;
      }
      PartialColoring after = pc;
      kempe_swap(after, k);
      ++swaps;
      if (const std::string p = kempe_checks::swap_problem(pc, after, k); !p.empty()) {
        o.ok = false;
        o.detail = "swap " + std::to_string(swaps) + ": " + p;
        return o;
      }
      pc = after;
      tally.note(g, pc.to_coloring());
    }
  }
  if (zero_rejected == 0 || repeats == 0) o.ok = false;
  std::ostringstream s;
  s << chains << " chains, " << swaps << " swaps, " << zero_rejected
    << " zero-chain swaps rejected, " << repeats << " self-intersecting";
  o.detail = s.str();
  return o;
}

Outcome line_graph_equivalence() {
  Outcome o;
  long graphs = 0, colorings = 0;
  for (const SignedGraph& base : connected_graphs_up_to(kLineGraphEdges)) {
    for (std::uint64_t mask = 0; mask < all_masks(base); ++mask) {
      const SignedGraph g = signature_from_mask(base, mask);
      const SignedGraph target = negate(line_graph(g));
      ++graphs;
      for (int n = 1; n <= kLineGraphColors && o.ok; ++n) {
        oracle::for_each_coloring(g, n, [&](const std::vector<EndColors>& ends) {
          if (!o.ok) return;
          const EdgeColoring gamma(n, ends);
          const VertexColoring c = edge_to_vertex_coloring(g, gamma);
          ++colorings;
          if (oracle::proper(g, ends) != is_proper_vertex_coloring(target, c) ||
              vertex_to_edge_coloring(g, c) != gamma) {
            o.ok = false;
          }
        });
      }
      if (!o.ok) {
        o.detail = "disagreement on a graph with " + std::to_string(g.num_edges()) + " edges";
        return o;
      }
    }
  }
  o.detail = std::to_string(graphs) + " signed connected graphs, " + std::to_string(colorings) +
             " colorings";
  return o;
}

Outcome antiproper_formulas() {
  Outcome o;
  long count = 0;
  for (int n = 1; n <= kCatalogVertices; ++n) {
    for (const SignedGraph& base : unlabeled_graphs(n)) {
      if (base.num_edges() < 1 || base.num_edges() > kCatalogEdges) continue;
      for (std::uint64_t mask = 0; mask < all_masks(base); ++mask) {
        const SignedGraph g = signature_from_mask(base, mask);
        const int a = chi_A_exact(g);
        const int d = delta0_exact(negate(g));
        const int s = chi_star_exact(g);
        ++count;
        if (a != 2 * d || a != 2 * ceil_log2(s)) {
          o.ok = false;
          o.detail = "chi_A " + std::to_string(a) + ", delta_0 " + std::to_string(d) +
                     ", chi* " + std::to_string(s);
          return o;
        }
      }
    }
  }
  o.detail = std::to_string(count) + " signed graphs";
  return o;
}

Outcome total_bounds() {
  Outcome o;
  long count = 0, at_lower = 0;
  for (int n = 1; n <= kTotalVertices; ++n) {
    for (const SignedGraph& base : labeled_graphs(n)) {
      for (std::uint64_t mask = 0; mask < all_masks(base); ++mask) {
        const SignedGraph g = signature_from_mask(base, mask);
        const TotalResult r = chi_total_exact(g);
        const int d = g.max_degree();
        ++count;
        at_lower += r.num_colors == d + 1;
        if (r.num_colors < d + 1 || r.num_colors > d + 2 ||
            !validate_total(g, r.witness).proper()) {
          o.ok = false;
          o.detail = "total number " + std::to_string(r.num_colors) + " at max degree " +
                     std::to_string(d);
          return o;
        }
      }
    }
  }
  o.detail = std::to_string(count) + " signed graphs, " + std::to_string(at_lower) +
             " at max degree + 1";
  return o;
}

Outcome switching_invariance() {
  Outcome o;
  std::mt19937_64 rng(99);
  int pairs = 0;
  auto fail = [&](const std::string& what) {
    o.ok = false;
    o.detail = what + " differs on pair " + std::to_string(pairs);
    return o;
  };
  while (pairs < kSwitchPairs) {
    const SignedGraph g = random_signed_graph(2 + static_cast<int>(rng() % 8), 0.5, rng);
    if (g.num_edges() == 0 || g.num_edges() > kExactEdgeLimit) continue;
    const VertexSet x = random_vertex_set(g.num_vertices(), rng);
    const SignedGraph h = switch_vertices(g, x);
    ++pairs;
    const EdgeColoring cg = color(g);
    const EdgeColoring ch = color(h);
    tally.note(g, cg);
    tally.note(h, ch);
    if (cg.num_colors() != ch.num_colors()) return fail("constructive color count");
    if (exact_chromatic_index(g) != exact_chromatic_index(h)) return fail("exact index");
    if (class_of(g) != class_of(h)) return fail("class");
    const EdgeColoring moved = switch_coloring(g, cg, x);
    tally.note(h, moved);
    if (!is_proper(h, moved)) return fail("switched coloring propriety");
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (edge_reversible(g, cg, e) != edge_reversible(h, moved, e)) {
        return fail("edge reversibility");
      }
    }
    if (is_completely_reversible(g, cg) != is_completely_reversible(h, moved)) {
      return fail("complete reversibility");
    }
  }
  o.detail = std::to_string(pairs) + " pairs";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "random graphs colored properly with at most D+1 colors", random_graphs_colored},
      {2, "exact index in {D, D+1} for every signed graph on <= 5 vertices",
       sandwich_small_graphs},
      {3, "all-negative exact index equals ordinary chromatic index, n <= 6",
       all_negative_matches_ordinary},
      {4, "class ratios of cycles, K4, K3,3 and K5", class_ratios},
      {5, "Petersen index 4 all-negative, 3-colorable signature found", petersen},
      {6, "Kempe chains well formed and swaps proper", kempe_chains},
      {8, "line-graph transport preserves propriety, n <= 4 colors, m <= 6",
       line_graph_equivalence},
      {9, "chi_A = 2 delta_0(-G) = 2 ceil(log2 chi*) for 1 <= m <= 8", antiproper_formulas},
      {10, "D+1 <= total chromatic number <= D+2 on <= 4 vertices", total_bounds},
      {11, "switching preserves counts, class and reversibility", switching_invariance},
  };
  std::vector<std::string> lines(12);
  int failures = 0;
  auto record = [&](int id, const char* name, const Outcome& o, double secs) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.2f s)", secs);
    lines[id] = std::string(o.ok ? "[PASS] " : "[FAIL] ") + std::to_string(id) + ". " + name +
                ": " + o.detail + buf;
    failures += !o.ok;
  };
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    record(c.id, c.name, o,
           std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  Outcome mag;
  mag.ok = tally.seen > 0 && tally.bad == 0;
  mag.detail = std::to_string(tally.seen) + " colorings checked, " + std::to_string(tally.bad) +
               " without magnitude structure";
  record(7, "magnitude classes are matchings, paths and positive circles", mag, 0.0);
  for (int id = 1; id <= 11; ++id) std::puts(lines[id].c_str());
  std::printf("%d of 11 criteria passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}
