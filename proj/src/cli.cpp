#include "sigcolor/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "sigcolor/exact.hpp"
#include "sigcolor/extras.hpp"
#include "sigcolor/io.hpp"
#include "sigcolor/linegraph.hpp"
#include "sigcolor/vizing.hpp"

namespace sigcolor::cli {

namespace {

struct Options {
  std::string graph;
  std::string coloring;
  std::string output;
  std::string coloring_output;
  std::string vertex_set;
  std::string mode = "full";
  std::uint64_t seed = 0;
  int jobs = 1;
  bool emit_witness = false;
  bool unsigned_input = false;
};

/// Collects report lines; they become comments when the artifact itself goes
/// to stdout so that the stream stays parseable.
class Report {
 public:
  Report(std::ostream& out, bool as_comments) : out_(out), prefix_(as_comments ? "# " : "") {}
  template <typename T>
  void add(const std::string& key, const T& value) {
    out_ << prefix_ << key << ' ' << value << '\n';
  }

 private:
  std::ostream& out_;
  std::string prefix_;
};

void write_artifact(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
  } else {
    write_file(o.output, text);
  }
}

SignedGraph load_graph(const Options& o) {
  return parse_graph(read_file(o.graph), {o.unsigned_input});
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

VertexSet parse_vertex_set(const std::string& spec, int n) {
  VertexSet out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 1 || v > n) {
      throw PreconditionError("bad vertex '" + item + "' in switching set");
    }
    out.push_back(v - 1);
  }
  return out;
}

int cmd_color(const Options& o, bool seeded, std::ostream& out) {
  const SignedGraph g = load_graph(o);
  std::vector<EdgeId> order;
  if (seeded) {
    order.resize(g.num_edges());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(o.seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  const EdgeColoring gamma = color(g, order);
  if (!is_proper(g, gamma)) throw InternalError("color produced an improper coloring");
  write_artifact(o, out, emit_coloring(gamma));
  Report r(out, o.output.empty());
  r.add("vertices", g.num_vertices());
  r.add("edges", g.num_edges());
  r.add("max_degree", g.max_degree());
  r.add("colors_used", gamma.num_colors());
  r.add("proper", "yes");
  return kOk;
}

int cmd_color_exact(const Options& o, std::ostream& out) {
  const SignedGraph g = load_graph(o);
  const ExactResult res = exact_chromatic(g);
  write_artifact(o, out, emit_coloring(res.witness));
  Report r(out, o.output.empty());
  r.add("max_degree", g.max_degree());
  r.add("chromatic_index", res.num_colors);
  r.add("class", res.num_colors == g.max_degree() ? "class1" : "class2");
  return kOk;
}

int cmd_class(const Options& o, std::ostream& out) {
  const SignedGraph g = load_graph(o);
  const int chi = exact_chromatic_index(g);
  Report r(out, false);
  r.add("max_degree", g.max_degree());
  r.add("chromatic_index", chi);
  r.add("class", chi == g.max_degree() ? "class1" : "class2");
  return kOk;
}

int cmd_class_ratio(const Options& o, std::ostream& out) {
  const SignedGraph g = load_graph(o);
  RatioMode mode;
  if (o.mode == "full") {
    mode = RatioMode::kFull;
  } else if (o.mode == "switching") {
    mode = RatioMode::kSwitching;
  } else {
    throw PreconditionError("mode must be full or switching");
  }
  const ClassRatio ratio = class_ratio(g, mode, o.jobs);
  Report r(out, false);
  r.add("class_ratio", ratio.to_string());
  r.add("reduced", ratio.reduced().to_string());
  r.add("mode", o.mode);
  return kOk;
}

int cmd_linegraph(const Options& o, std::ostream& out) {
  const SignedGraph g = load_graph(o);
  const SignedGraph lg = line_graph(g);
  write_artifact(o, out, emit_graph(lg));
  Report r(out, o.output.empty());
  r.add("line_vertices", lg.num_vertices());
  r.add("line_edges", lg.num_edges());
  return kOk;
}

int cmd_frustration(const Options& o, std::ostream& out) {
  const SignedGraph g = load_graph(o);
  Report r(out, false);
  r.add("balanced", yes_no(is_balanced(g)));
  r.add("antibalanced", yes_no(is_balanced(g, BalanceMode::kAntibalance)));
  r.add("frustration_index", frustration_index(g));
  return kOk;
}

int cmd_switch(const Options& o, std::ostream& out) {
  const SignedGraph g = load_graph(o);
  const VertexSet x = parse_vertex_set(o.vertex_set, g.num_vertices());
  const SignedGraph h = switch_vertices(g, x);
  write_artifact(o, out, emit_graph(h));
  if (!o.coloring.empty()) {
    const EdgeColoring gamma = parse_coloring(read_file(o.coloring), g);
    const std::string text = emit_coloring(switch_coloring(g, gamma, x));
    if (o.coloring_output.empty()) {
      out << text;
    } else {
      write_file(o.coloring_output, text);
    }
  }
  Report r(out, o.output.empty() || (!o.coloring.empty() && o.coloring_output.empty()));
  r.add("switched_vertices", x.size());
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const SignedGraph g = load_graph(o);
  const EdgeColoring gamma = parse_coloring(read_file(o.coloring), g);
  const Verdict v = validate(g, gamma);
  Report r(out, false);
  switch (v.kind) {
    case Verdict::Kind::kProper:
      r.add("verdict", "proper");
      r.add("colors", gamma.num_colors());
      return kOk;
    case Verdict::Kind::kInvalidEdgeLaw:
      r.add("verdict", "invalid_edge_law");
      break;
    case Verdict::Kind::kImproper:
      r.add("verdict", "improper");
      break;
  }
  if (o.emit_witness) {
    r.add("witness_edge", v.edge + 1);
    r.add("witness_vertex", v.vertex + 1);
    r.add("witness_color", v.color);
  }
  return v.kind == Verdict::Kind::kImproper ? kImproper : kInvalidEdgeLaw;
}

int cmd_extras(const Options& o, std::ostream& out) {
  const SignedGraph g = load_graph(o);
  Report r(out, false);
  bool skipped = false;
  auto report = [&](const std::string& key, auto&& compute) {
    try {
      r.add(key, compute());
    } catch (const SizeGuardError&) {
      r.add(key, "size_guard");
      skipped = true;
    }
  };
  r.add("max_degree", g.max_degree());
  report("completely_reversible", [&] {
    return yes_no(is_completely_reversible(g, color(g)));
  });
  report("chi_R", [&] { return chi_R_exact(g); });
  report("linear_arboricity", [&] { return linear_arboricity_exact(g); });
  report("chi_star", [&] { return chi_star_exact(g); });
  report("delta0", [&] { return delta0_exact(g); });
  report("delta0_negated", [&] { return delta0_exact(negate(g)); });
  report("chi_A", [&] { return chi_A_exact(g); });
  report("chi_total", [&] { return chi_total_exact(g, TotalMode::kTotal).num_colors; });
  report("chi_total_twisted",
         [&] { return chi_total_exact(g, TotalMode::kTwisted).num_colors; });
  return skipped ? kSizeGuard : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed graph edge coloring"};
  app.require_subcommand(1);
  Options o;

  auto graph_arg = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph, "graph file")->required();
  };
  auto output_arg = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "write the result here instead of stdout");
  };

  CLI::App* color_cmd = app.add_subcommand("color", "color with at most Δ+1 colors");
  graph_arg(color_cmd);
  output_arg(color_cmd);
  CLI::Option* seed_opt =
      color_cmd->add_option("--seed", o.seed, "shuffle the edge insertion order");

  CLI::App* exact_cmd = app.add_subcommand("color-exact", "coloring with the fewest colors");
  graph_arg(exact_cmd);
  output_arg(exact_cmd);

  CLI::App* class_cmd = app.add_subcommand("class", "chromatic index and class");
  graph_arg(class_cmd);

  CLI::App* ratio_cmd = app.add_subcommand("class-ratio", "share of Δ-colorable signatures");
  graph_arg(ratio_cmd);
  ratio_cmd->add_flag("--unsigned", o.unsigned_input, "edge lines may omit signs");
  ratio_cmd->add_option("--mode", o.mode, "full or switching");
  ratio_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

  CLI::App* line_cmd = app.add_subcommand("linegraph", "signed line graph");
  graph_arg(line_cmd);
  output_arg(line_cmd);

  CLI::App* frus_cmd = app.add_subcommand("frustration", "balance and frustration index");
  graph_arg(frus_cmd);

  CLI::App* switch_cmd = app.add_subcommand("switch", "switch a vertex set");
  graph_arg(switch_cmd);
  output_arg(switch_cmd);
  switch_cmd->add_option("--set", o.vertex_set, "comma-separated 1-based vertices")
      ->required();
  switch_cmd->add_option("--coloring", o.coloring, "coloring to switch along");
  switch_cmd->add_option("--coloring-output", o.coloring_output,
                         "where the switched coloring goes");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check a coloring file");
  graph_arg(verify_cmd);
  verify_cmd->add_option("coloring", o.coloring, "coloring file")->required();
  verify_cmd->add_flag("--emit-witness", o.emit_witness, "print the first violation");

  CLI::App* extras_cmd = app.add_subcommand("extras", "reversible, antiproper, total numbers");
  graph_arg(extras_cmd);

  std::vector<const char*> argv{"sigcolor"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*color_cmd) return cmd_color(o, seed_opt->count() > 0, out);
    if (*exact_cmd) return cmd_color_exact(o, out);
    if (*class_cmd) return cmd_class(o, out);
    if (*ratio_cmd) return cmd_class_ratio(o, out);
    if (*line_cmd) return cmd_linegraph(o, out);
    if (*frus_cmd) return cmd_frustration(o, out);
    if (*switch_cmd) return cmd_switch(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*extras_cmd) return cmd_extras(o, out);
  } catch (const SizeGuardError& e) {
    err << "size guard: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace sigcolor::cli
