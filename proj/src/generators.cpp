#include "sigcolor/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace sigcolor {

namespace {

SignedGraph make(int n, const std::vector<std::pair<int, int>>& pairs, Sign sign) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v, sign});
  return SignedGraph(n, std::move(edges));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

SignedGraph complete_graph(int n, Sign sign) {
  require(n >= 0, "negative vertex count");
  std::vector<std::pair<int, int>> p;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) p.emplace_back(u, v);
  }
  return make(n, p, sign);
}

SignedGraph cycle_graph(int n, Sign sign) {
  require(n >= 3, "a cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < n; ++i) p.emplace_back(i, (i + 1) % n);
  return make(n, p, sign);
}

SignedGraph path_graph(int n, Sign sign) {
  require(n >= 1, "a path needs a vertex");
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i + 1 < n; ++i) p.emplace_back(i, i + 1);
  return make(n, p, sign);
}

SignedGraph star_graph(int leaves, Sign sign) {
  require(leaves >= 0, "negative leaf count");
  std::vector<std::pair<int, int>> p;
  for (int i = 1; i <= leaves; ++i) p.emplace_back(0, i);
  return make(leaves + 1, p, sign);
}

SignedGraph complete_bipartite(int a, int b, Sign sign) {
  require(a >= 0 && b >= 0, "negative side size");
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) p.emplace_back(i, a + j);
  }
  return make(a + b, p, sign);
}

SignedGraph petersen_graph(Sign sign) {
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < 5; ++i) p.emplace_back(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) p.emplace_back(i, i + 5);
  for (int i = 0; i < 5; ++i) p.emplace_back(5 + i, 5 + (i + 2) % 5);
  return make(10, p, sign);
}

SignedGraph prism_graph(int k, Sign sign) {
  require(k >= 3, "a prism needs k ≥ 3");
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < k; ++i) p.emplace_back(i, (i + 1) % k);
  for (int i = 0; i < k; ++i) p.emplace_back(k + i, k + (i + 1) % k);
  for (int i = 0; i < k; ++i) p.emplace_back(i, k + i);
  return make(2 * k, p, sign);
}

SignedGraph cube_graph(Sign sign) {
  std::vector<std::pair<int, int>> p;
  for (int v = 0; v < 8; ++v) {
    for (int bit = 1; bit < 8; bit <<= 1) {
      if (!(v & bit)) p.emplace_back(v, v | bit);
    }
  }
  return make(8, p, sign);
}

SignedGraph moebius_ladder(int k, Sign sign) {
  require(k >= 2, "a Moebius ladder needs k ≥ 2");
  const int n = 2 * k;
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < n; ++i) p.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < k; ++i) p.emplace_back(i, i + k);
  return make(n, p, sign);
}

SignedGraph random_signed_graph(int n, double edge_probability, std::mt19937_64& rng,
                                double negative_probability) {
  std::bernoulli_distribution edge(edge_probability), negative(negative_probability);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) edges.push_back({u, v, negative(rng) ? Sign::kNegative : Sign::kPositive});
    }
  }
  return SignedGraph(n, std::move(edges));
}

SignedGraph random_signature(const SignedGraph& g, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Sign> sig(g.num_edges());
  for (Sign& s : sig) s = coin(rng) ? Sign::kNegative : Sign::kPositive;
  return g.with_signature(sig);
}

SignedGraph signature_from_mask(const SignedGraph& g, std::uint64_t mask) {
  std::vector<Sign> sig(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    sig[e] = (mask >> e) & 1 ? Sign::kNegative : Sign::kPositive;
  }
  return g.with_signature(sig);
}

VertexSet random_vertex_set(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (coin(rng)) out.push_back(v);
  }
  return out;
}

std::vector<SignedGraph> labeled_graphs(int n) {
  require(n >= 0 && n <= 6, "labeled catalog limited to 6 vertices");
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::vector<SignedGraph> out;
  const std::uint32_t total = std::uint32_t{1} << slots.size();
  out.reserve(total);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<std::pair<int, int>> p;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1) p.push_back(slots[i]);
    }
    out.push_back(make(n, p, Sign::kNegative));
  }
  return out;
}

std::vector<std::uint8_t> canonical_code(const SignedGraph& g) {
  const int n = g.num_vertices();
  require(n <= 9, "canonical code limited to 9 vertices");
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;

  // Vertex invariant: degree, then the sorted neighbor degrees.
  std::vector<std::vector<int>> key(n);
  for (Vertex v = 0; v < n; ++v) {
    key[v].push_back(g.degree(v));
    std::vector<int> nd;
    for (const Incidence& inc : g.incident(v)) nd.push_back(g.degree(inc.neighbor));
    std::sort(nd.begin(), nd.end());
    key[v].insert(key[v].end(), nd.begin(), nd.end());
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return key[a] < key[b]; });
  std::vector<std::pair<int, int>> blocks;  // [begin, end) in order
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && key[order[j]] == key[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  std::vector<std::uint8_t> best;
  std::vector<Vertex> at = order;  // at[position] = vertex
  auto encode = [&]() {
    std::vector<std::uint8_t> code;
    code.reserve(n * (n - 1) / 2 + 1);
    code.push_back(static_cast<std::uint8_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) code.push_back(adj[at[i]][at[j]]);
    }
    return code;
  };
  auto recurse = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      auto code = encode();
      if (best.empty() || code < best) best = std::move(code);
      return;
    }
    auto first = at.begin() + blocks[b].first;
    auto last = at.begin() + blocks[b].second;
    std::sort(first, last);
    do {
      self(self, b + 1);
    } while (std::next_permutation(first, last));
  };
  recurse(recurse, 0);
  if (best.empty()) best = encode();
  return best;
}

std::vector<SignedGraph> unlabeled_graphs(int n) {
  require(n >= 0 && n <= 6, "unlabeled catalog limited to 6 vertices");
  std::set<std::vector<std::uint8_t>> seen;
  std::vector<SignedGraph> out;
  for (SignedGraph& g : labeled_graphs(n)) {
    if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
  }
  return out;
}

std::vector<SignedGraph> connected_graphs_up_to(int max_edges) {
  require(max_edges >= 0 && max_edges <= 8, "connected catalog limited to 8 edges");
  std::vector<SignedGraph> out;
  if (max_edges == 0) return out;
  std::vector<SignedGraph> layer{make(2, {{0, 1}}, Sign::kNegative)};
  std::set<std::vector<std::uint8_t>> seen{canonical_code(layer.front())};
  for (int m = 1;; ++m) {
    out.insert(out.end(), layer.begin(), layer.end());
    if (m == max_edges) break;
    std::vector<SignedGraph> next;
    for (const SignedGraph& g : layer) {
      std::vector<Edge> base(g.edges().begin(), g.edges().end());
      const int n = g.num_vertices();
      auto offer = [&](int nv, Edge e) {
        std::vector<Edge> edges = base;
        edges.push_back(e);
        SignedGraph h(nv, std::move(edges));
        if (seen.insert(canonical_code(h)).second) next.push_back(std::move(h));
      };
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (!g.find_edge(u, v)) offer(n, {u, v, Sign::kNegative});
        }
        offer(n + 1, {u, n, Sign::kNegative});
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace sigcolor
