#include "sigcolor/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace sigcolor {

namespace {

/// Whitespace-separated tokens of each non-blank, non-comment line.
struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) l.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!l.tokens.empty()) out.push_back(std::move(l));
  }
  return out;
}

int to_int_token(std::string_view tok, int line, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

SignedGraph parse_graph(std::string_view text, const GraphParseOptions& opts) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing header 'p sg <n> <m>'");
  const Line& head = lines.front();
  if (head.tokens.size() != 4 || head.tokens[0] != "p" || head.tokens[1] != "sg") {
    throw ParseError(head.number, "expected header 'p sg <n> <m>'");
  }
  const int n = to_int_token(head.tokens[2], head.number, "vertex count");
  const int m = to_int_token(head.tokens[3], head.number, "edge count");
  if (n < 0 || m < 0) throw ParseError(head.number, "negative count in header");

  std::vector<Edge> edges;
  std::set<std::pair<int, int>> pairs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const auto& t = l.tokens;
    if (t[0] != "e") throw ParseError(l.number, "expected an edge line 'e <u> <v> <sign>'");
    const bool has_sign = t.size() == 4;
    if (!(has_sign || (opts.unsigned_input && t.size() == 3))) {
      throw ParseError(l.number, "expected 'e <u> <v> <+|->'");
    }
    const int u = to_int_token(t[1], l.number, "vertex");
    const int v = to_int_token(t[2], l.number, "vertex");
    Sign s = Sign::kNegative;
    if (has_sign) {
      if (t[3] == "+") {
        s = Sign::kPositive;
      } else if (t[3] != "-") {
        throw ParseError(l.number, "sign must be + or -, got '" + std::string(t[3]) + "'");
      }
      if (opts.unsigned_input) s = Sign::kNegative;
    }
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(l.number, "vertex outside 1.." + std::to_string(n));
    }
    if (u == v) throw ParseError(l.number, "loop at vertex " + std::to_string(u));
    if (!pairs.insert({std::min(u, v), std::max(u, v)}).second) {
      throw ParseError(l.number, "repeated edge " + std::to_string(u) + " " +
                                     std::to_string(v));
    }
    if (static_cast<int>(edges.size()) == m) {
      throw ParseError(l.number, "more edge lines than the header's " + std::to_string(m));
    }
    edges.push_back({u - 1, v - 1, s});
  }
  if (static_cast<int>(edges.size()) != m) {
    throw ParseError(0, "header promises " + std::to_string(m) + " edges, found " +
                            std::to_string(edges.size()));
  }
  return SignedGraph(n, std::move(edges));
}

std::string emit_graph(const SignedGraph& g) {
  std::ostringstream out;
  out << "p sg " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.u + 1 << ' ' << e.v + 1 << ' '
        << (e.sign == Sign::kPositive ? '+' : '-') << '\n';
  }
  return out.str();
}

EdgeColoring parse_coloring(std::string_view text, const SignedGraph& g) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing header 's chi <n>'");
  const Line& head = lines.front();
  if (head.tokens.size() != 3 || head.tokens[0] != "s" || head.tokens[1] != "chi") {
    throw ParseError(head.number, "expected header 's chi <n>'");
  }
  const int n = to_int_token(head.tokens[2], head.number, "color count");
  if (n < 1) throw ParseError(head.number, "color count must be positive");
  const ColorSet set(n);

  std::vector<EndColors> ends(g.num_edges());
  std::vector<char> seen(g.num_edges(), 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 4 || l.tokens[0] != "c") {
      throw ParseError(l.number, "expected 'c <edge> <color> <color>'");
    }
    const int idx = to_int_token(l.tokens[1], l.number, "edge index");
    if (idx < 1 || idx > g.num_edges()) {
      throw ParseError(l.number, "edge index outside 1.." + std::to_string(g.num_edges()));
    }
    if (seen[idx - 1]) throw ParseError(l.number, "edge " + std::to_string(idx) + " colored twice");
    seen[idx - 1] = 1;
    for (int side = 0; side < 2; ++side) {
      const int c = to_int_token(l.tokens[2 + side], l.number, "color");
      if (!set.contains(c)) {
        throw ParseError(l.number, "color " + std::to_string(c) + " is not in M_" +
                                       std::to_string(n));
      }
      ends[idx - 1][side] = c;
    }
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!seen[e]) throw ParseError(0, "edge " + std::to_string(e + 1) + " has no color line");
  }
  return EdgeColoring(n, std::move(ends));
}

std::string emit_coloring(const EdgeColoring& gamma) {
  std::ostringstream out;
  out << "s chi " << gamma.num_colors() << '\n';
  for (EdgeId e = 0; e < gamma.num_edges(); ++e) {
    out << "c " << e + 1 << ' ' << gamma.ends(e)[0] << ' ' << gamma.ends(e)[1] << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace sigcolor
