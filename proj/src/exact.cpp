#include "sigcolor/exact.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <thread>

namespace sigcolor {

namespace {

/// Edges in the order a depth-first walk from each component's smallest
/// vertex first meets them.
std::vector<EdgeId> dfs_edge_order(const SignedGraph& g) {
  std::vector<EdgeId> order;
  order.reserve(g.num_edges());
  std::vector<char> seen_v(g.num_vertices(), 0), seen_e(g.num_edges(), 0);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.num_vertices(); ++root) {
    if (seen_v[root]) continue;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      if (seen_v[v]) continue;
      seen_v[v] = 1;
      for (const Incidence& inc : g.incident(v)) {
        if (!seen_e[inc.edge]) {
          seen_e[inc.edge] = 1;
          order.push_back(inc.edge);
        }
      }
      const auto inc = g.incident(v);
      for (auto it = inc.rbegin(); it != inc.rend(); ++it) {
        if (!seen_v[it->neighbor]) stack.push_back(it->neighbor);
      }
    }
  }
  return order;
}

class Backtracker {
 public:
  Backtracker(const SignedGraph& g, int n)
      : g_(g), n_(n), k_(n / 2), order_(dfs_edge_order(g)),
        used_(g.num_vertices(), 0), left_(g.num_vertices()),
        first_(g.num_edges(), 0) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) left_[v] = g.degree(v);
    const ColorSet set(n);
    candidates_ = set.members();
  }

  bool run() { return place(0, 0); }

  EdgeColoring coloring() const {
    return EdgeColoring::from_first_ends(g_, n_, first_);
  }

 private:
  std::uint32_t bit(Color c) const { return std::uint32_t{1} << (c + k_); }

  bool room(Vertex v) const {
    return n_ - std::popcount(used_[v]) >= left_[v];
  }

  bool place(std::size_t i, int max_magnitude) {
    if (i == order_.size()) return true;
    const EdgeId e = order_[i];
    const Edge& ed = g_.edge(e);
    const int s = to_int(ed.sign);
    for (Color c : candidates_) {
      const int mag = magnitude(c);
      // Magnitudes may be permuted and negated globally, so a new magnitude
      // enters as the next unused one with a positive first end.
      if (mag > max_magnitude + 1 || (mag == max_magnitude + 1 && c < 0)) continue;
      const Color other = -s * c;
      if ((used_[ed.u] & bit(c)) || (used_[ed.v] & bit(other))) continue;
      used_[ed.u] |= bit(c);
      used_[ed.v] |= bit(other);
      --left_[ed.u];
      --left_[ed.v];
      first_[e] = c;
      if (room(ed.u) && room(ed.v) && place(i + 1, std::max(max_magnitude, mag))) {
        return true;
      }
      used_[ed.u] &= ~bit(c);
      used_[ed.v] &= ~bit(other);
      ++left_[ed.u];
      ++left_[ed.v];
    }
    return false;
  }

  const SignedGraph& g_;
  int n_;
  int k_;
  std::vector<EdgeId> order_;
  std::vector<std::uint32_t> used_;
  std::vector<int> left_;
  std::vector<Color> first_;
  std::vector<Color> candidates_;
};

void guard_exact(const SignedGraph& g) {
  if (g.num_edges() > kExactEdgeLimit) {
    throw SizeGuardError("exact search limited to " + std::to_string(kExactEdgeLimit) +
                         " edges, graph has " + std::to_string(g.num_edges()));
  }
}

}  // namespace

std::optional<EdgeColoring> exact_coloring(const SignedGraph& g, int n) {
  guard_exact(g);
  if (n < 1) throw PreconditionError("need at least one color");
  if (n < g.max_degree()) return std::nullopt;
  Backtracker bt(g, n);
  if (!bt.run()) return std::nullopt;
  return bt.coloring();
}

ExactResult exact_chromatic(const SignedGraph& g) {
  guard_exact(g);
  if (g.num_edges() == 0) return {0, EdgeColoring(1, {})};
  for (int n = g.max_degree();; ++n) {
    if (auto c = exact_coloring(g, n)) return {n, std::move(*c)};
    if (n > g.max_degree() + 1) {
      throw InternalError("no coloring with Δ+1 colors found");
    }
  }
}

int exact_chromatic_index(const SignedGraph& g) {
  return exact_chromatic(g).num_colors;
}

bool is_delta_colorable(const SignedGraph& g) {
  guard_exact(g);
  if (g.num_edges() == 0) return true;
  return exact_coloring(g, g.max_degree()).has_value();
}

EdgeClass class_of(const SignedGraph& g) {
  return is_delta_colorable(g) ? EdgeClass::kClass1 : EdgeClass::kClass2;
}

ClassRatio ClassRatio::reduced() const {
  if (numerator == 0) return {0, 1};
  const std::uint64_t d = std::gcd(numerator, denominator);
  return {numerator / d, denominator / d};
}

std::string ClassRatio::to_string() const {
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

bool operator<(const ClassRatio& a, const ClassRatio& b) {
  // Both sides stay below 2^40 at the supported sizes.
  return static_cast<unsigned __int128>(a.numerator) * b.denominator <
         static_cast<unsigned __int128>(b.numerator) * a.denominator;
}

namespace {

/// Counts Δ-colorable signatures over masks [0, 2^free.size()), where bit i
/// of a mask makes free[i] negative and every other edge positive.
std::uint64_t count_colorable(const SignedGraph& g, const std::vector<EdgeId>& free,
                              int jobs) {
  const std::uint64_t total = std::uint64_t{1} << free.size();
  const auto workers = static_cast<std::uint64_t>(
      std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(jobs, 1)), 1, total));
  std::vector<std::uint64_t> counts(workers, 0);
  auto work = [&](std::uint64_t w) {
    std::vector<Sign> sig(g.num_edges(), Sign::kPositive);
    const std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      for (std::size_t i = 0; i < free.size(); ++i) {
        sig[free[i]] = (mask >> i) & 1 ? Sign::kNegative : Sign::kPositive;
      }
      if (is_delta_colorable(g.with_signature(sig))) ++counts[w];
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

}  // namespace

ClassRatio class_ratio(const SignedGraph& g, RatioMode mode, int jobs) {
  const int m = g.num_edges();
  if (m > 62) throw SizeGuardError("signature count does not fit 64 bits");
  ClassRatio out;
  out.denominator = std::uint64_t{1} << m;
  if (mode == RatioMode::kFull) {
    if (m > kRatioEdgeLimit) {
      throw SizeGuardError("full class-ratio enumeration limited to " +
                           std::to_string(kRatioEdgeLimit) + " edges");
    }
    std::vector<EdgeId> all(m);
    std::iota(all.begin(), all.end(), 0);
    out.numerator = count_colorable(g, all, jobs);
    return out;
  }

  // Each switching class has exactly one signature that is positive on a
  // fixed spanning forest, and every class has 2^(n - c) members.
  std::vector<char> in_forest(m, 0);
  std::vector<char> seen(g.num_vertices(), 0);
  int components = 0;
  for (Vertex root = 0; root < g.num_vertices(); ++root) {
    if (seen[root]) continue;
    ++components;
    std::vector<Vertex> queue{root};
    seen[root] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (const Incidence& inc : g.incident(queue[q])) {
        if (seen[inc.neighbor]) continue;
        seen[inc.neighbor] = 1;
        in_forest[inc.edge] = 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  std::vector<EdgeId> free;
  for (EdgeId e = 0; e < m; ++e) {
    if (!in_forest[e]) free.push_back(e);
  }
  if (static_cast<int>(free.size()) > kRatioEdgeLimit) {
    throw SizeGuardError("switching-class enumeration limited to " +
                         std::to_string(kRatioEdgeLimit) + " edges outside a forest");
  }
  out.numerator = count_colorable(g, free, jobs)
                  << (g.num_vertices() - components);
  return out;
}

std::vector<EdgeId> bridges(const SignedGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> out;
  int clock = 0;
  std::function<void(Vertex, EdgeId)> dfs = [&](Vertex v, EdgeId via) {
    disc[v] = low[v] = clock++;
    for (const Incidence& inc : g.incident(v)) {
      if (inc.edge == via) continue;
      if (disc[inc.neighbor] < 0) {
        dfs(inc.neighbor, inc.edge);
        low[v] = std::min(low[v], low[inc.neighbor]);
        if (low[inc.neighbor] > disc[v]) out.push_back(inc.edge);
      } else {
        low[v] = std::min(low[v], disc[inc.neighbor]);
      }
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    if (disc[v] < 0) dfs(v, -1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<EdgeId>> perfect_matching(const SignedGraph& g) {
  const int n = g.num_vertices();
  if (n > kMatchingVertexLimit) {
    throw SizeGuardError("perfect matching search limited to " +
                         std::to_string(kMatchingVertexLimit) + " vertices");
  }
  if (n % 2 != 0) return std::nullopt;
  std::vector<char> dead(std::size_t{1} << n, 0);
  std::vector<EdgeId> chosen;
  std::function<bool(std::uint32_t)> solve = [&](std::uint32_t open) {
    if (open == 0) return true;
    if (dead[open]) return false;
    const Vertex v = std::countr_zero(open);
    for (const Incidence& inc : g.incident(v)) {
      const std::uint32_t w = std::uint32_t{1} << inc.neighbor;
      if (!(open & w)) continue;
      chosen.push_back(inc.edge);
      if (solve(open & ~w & ~(std::uint32_t{1} << v))) return true;
      chosen.pop_back();
    }
    dead[open] = 1;
    return false;
  };
  const std::uint32_t all = n == 32 ? ~0u : (std::uint32_t{1} << n) - 1;
  if (!solve(all)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

ThreeColorableSignature three_colorable_signature(const SignedGraph& g) {
  if (g.num_vertices() > kMatchingVertexLimit) {
    throw SizeGuardError("perfect matching search limited to " +
                         std::to_string(kMatchingVertexLimit) + " vertices");
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 3) throw PreconditionError("graph is not 3-regular");
  }
  const auto comp = connected_components(g);
  if (g.num_vertices() == 0 ||
      std::any_of(comp.begin(), comp.end(), [](int c) { return c != 0; })) {
    throw PreconditionError("graph is not connected");
  }
  if (!bridges(g).empty()) throw PreconditionError("graph has a bridge");
  auto matching = perfect_matching(g);
  if (!matching) throw InternalError("no perfect matching in a cubic bridgeless graph");

  std::vector<char> in_matching(g.num_edges(), 0);
  for (EdgeId e : *matching) in_matching[e] = 1;
  std::vector<Sign> sig(g.num_edges(), Sign::kPositive);
  for (EdgeId e : *matching) sig[e] = Sign::kNegative;
  SignedGraph signed_graph = g.with_signature(sig);

  // What is left is 2-regular: walk each circle and give every edge +1 at
  // the end the walk leaves from.
  std::vector<EndColors> ends(g.num_edges(), EndColors{0, 0});
  std::vector<char> done(g.num_edges(), 0);
  for (EdgeId start = 0; start < g.num_edges(); ++start) {
    if (in_matching[start] || done[start]) continue;
    Vertex v = g.edge(start).u;
    EdgeId e = start;
    while (!done[e]) {
      done[e] = 1;
      const int side = g.end_index(e, v);
      ends[e][side] = 1;
      ends[e][1 - side] = -1;
      v = g.other_end(e, v);
      for (const Incidence& inc : g.incident(v)) {
        if (!in_matching[inc.edge] && inc.edge != e) {
          e = inc.edge;
          break;
        }
      }
    }
  }
  EdgeColoring witness(3, std::move(ends));
  if (!is_proper(signed_graph, witness)) {
    throw InternalError("matching-based witness is not proper");
  }
  return {std::move(signed_graph), std::move(*matching), std::move(witness)};
}

}  // namespace sigcolor
