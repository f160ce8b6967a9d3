#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "sigcolor/coloring.hpp"
#include "sigcolor/core.hpp"

namespace sigcolor {

/// Malformed graph or coloring text. line() is 1-based, 0 for problems that
/// belong to the file as a whole.
class ParseError : public std::invalid_argument {
 public:
  ParseError(int line, const std::string& what)
      : std::invalid_argument(line > 0 ? "line " + std::to_string(line) + ": " + what
                                       : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

struct GraphParseOptions {
  /// Edge lines may omit the sign; every sign is read as negative.
  bool unsigned_input = false;
};

/// Text of the form
///   p sg <n> <m>
///   e <u> <v> <+|->     (m lines, 1-based vertices)
/// with blank lines and `#` comments anywhere. Edge ids follow line order.
SignedGraph parse_graph(std::string_view text, const GraphParseOptions& opts = {});
std::string emit_graph(const SignedGraph& g);

/// Text of the form
///   s chi <n>
///   c <edge> <color at u> <color at v>   (one line per edge, 1-based)
/// where u is the endpoint listed first on the graph's edge line.
EdgeColoring parse_coloring(std::string_view text, const SignedGraph& g);
std::string emit_coloring(const EdgeColoring& gamma);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace sigcolor
