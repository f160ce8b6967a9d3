#include <algorithm>
#include <string>

#include "sigcolor/vizing.hpp"

namespace sigcolor {

PartialColoring::PartialColoring(const SignedGraph& g, int num_colors)
    : graph_(&g),
      n_(num_colors),
      k_(num_colors / 2),
      width_(2 * (num_colors / 2) + 1),
      signs_(g.signature()),
      colors_(g.num_edges(), EndColors{kUncolored, kUncolored}),
      index_(static_cast<std::size_t>(g.num_vertices()) * width_, -1) {
  if (num_colors < 1) throw PreconditionError("need at least one color");
}

PartialColoring::PartialColoring(const SignedGraph& g, const EdgeColoring& gamma)
    : PartialColoring(g, gamma.num_colors()) {
  if (!is_proper(g, gamma)) {
    throw PreconditionError("partial coloring seeded with an improper coloring");
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) assign(e, g.edge(e).u, gamma.ends(e)[0]);
}

Color PartialColoring::at(Vertex v, EdgeId e) const {
  const EndColors& c = colors_.at(e);
  if (c[0] == kUncolored) {
    throw InternalError("edge " + std::to_string(e) + " is uncolored");
  }
  return c[graph_->end_index(e, v)];
}

std::optional<EdgeId> PartialColoring::edge_with(Vertex v, Color c) const {
  if (magnitude(c) > k_ || (c == 0 && n_ % 2 == 0)) return std::nullopt;
  const EdgeId e = index_[slot(v, c)];
  if (e < 0) return std::nullopt;
  return e;
}

std::vector<Color> PartialColoring::absent_colors(Vertex v) const {
  std::vector<Color> out;
  for (int a = 1; a <= k_; ++a) {
    if (absent(v, a)) out.push_back(a);
    if (absent(v, -a)) out.push_back(-a);
  }
  if (n_ % 2 == 1 && absent(v, 0)) out.push_back(0);
  return out;
}

int PartialColoring::colored_degree(Vertex v) const {
  int d = 0;
  for (const Incidence& inc : graph_->incident(v)) d += colored(inc.edge) ? 1 : 0;
  return d;
}

void PartialColoring::assign(EdgeId e, Vertex v, Color c) {
  const Edge& ed = graph_->edge(e);
  const int side = graph_->end_index(e, v);
  const Color other = -to_int(signs_[e]) * c;
  const Color cu = side == 0 ? c : other;
  const Color cv = side == 0 ? other : c;
  if (magnitude(c) > k_ || (c == 0 && n_ % 2 == 0)) {
    throw InternalError("color " + std::to_string(c) + " outside M_" +
                        std::to_string(n_));
  }
  if (colored(e)) clear(e);
  const EdgeId at_u = index_[slot(ed.u, cu)];
  const EdgeId at_v = index_[slot(ed.v, cv)];
  if (at_u >= 0 || at_v >= 0) {
    throw InternalError("coloring edge " + std::to_string(e) + " with " +
                        std::to_string(cu) + "/" + std::to_string(cv) +
                        " clashes with edge " +
                        std::to_string(at_u >= 0 ? at_u : at_v));
  }
  colors_[e] = {cu, cv};
  index_[slot(ed.u, cu)] = e;
  index_[slot(ed.v, cv)] = e;
  ++num_colored_;
}

void PartialColoring::clear(EdgeId e) {
  if (!colored(e)) return;
  const Edge& ed = graph_->edge(e);
  index_[slot(ed.u, colors_[e][0])] = -1;
  index_[slot(ed.v, colors_[e][1])] = -1;
  colors_[e] = {kUncolored, kUncolored};
  --num_colored_;
}

void PartialColoring::switch_vertex(Vertex w) {
  std::vector<std::pair<EdgeId, Color>> recolor;
  for (const Incidence& inc : graph_->incident(w)) {
    signs_[inc.edge] = -signs_[inc.edge];
    if (colored(inc.edge)) {
      recolor.emplace_back(inc.edge, -at(w, inc.edge));
      clear(inc.edge);
    }
  }
  // Only the colors at w change; the far ends keep theirs, and the new
  // working sign makes the pair satisfy the edge law again.
  for (auto [e, c] : recolor) assign(e, w, c);
}

EdgeColoring PartialColoring::to_coloring() const {
  if (num_colored_ != graph_->num_edges()) {
    throw PreconditionError("coloring still has uncolored edges");
  }
  return EdgeColoring(n_, colors_);
}

bool PartialColoring::consistent() const {
  int count = 0;
  std::vector<EdgeId> rebuilt(index_.size(), -1);
  for (EdgeId e = 0; e < graph_->num_edges(); ++e) {
    if (!colored(e)) continue;
    ++count;
    const Edge& ed = graph_->edge(e);
    if (colors_[e][0] != -to_int(signs_[e]) * colors_[e][1]) return false;
    for (int side = 0; side < 2; ++side) {
      const std::size_t s = slot(side == 0 ? ed.u : ed.v, colors_[e][side]);
      if (rebuilt[s] >= 0) return false;
      rebuilt[s] = e;
    }
  }
  return count == num_colored_ && rebuilt == index_;
}

}  // namespace sigcolor
