#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "json.hpp"
#include "oglab/closed_form.hpp"
#include "oglab/io.hpp"
#include "oglab/search.hpp"
#include "sweep.hpp"

namespace oglab::cli {

namespace {

/// Bad arguments or unusable files; maps to kExitError.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(fmt::format("cannot read '{}'", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content, Io io) {
  if (path.empty() || path == "-") {
    io.out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError(fmt::format("cannot write '{}'", path));
  file << content;
  if (!file) throw UsageError(fmt::format("write to '{}' failed", path));
}

int need(const std::optional<int>& v, const char* name) {
  if (!v) throw UsageError(fmt::format("--{} is required", name));
  return *v;
}

Graph generate(const GenArgs& a) {
  const auto& f = a.family;
  if (f == "ladder") return build_theorem1(need(a.n, "n"), need(a.m, "m"));
  if (f == "sub-ladder") return build_theorem2(need(a.n, "n"), need(a.m, "m"));
  if (f == "sub-tri-snake") return build_theorem3(need(a.k, "k"), need(a.m, "m"));
  if (f == "path") return path_graph(need(a.n, "n"));
  if (f == "cycle") return cycle_graph(need(a.n, "n"));
  if (f == "plain-ladder") return ladder(need(a.n, "n"));
  if (f == "tri-snake") return triangular_snake(need(a.k, "k"));
  if (f == "star") {
    return corona_pendants(path_graph(1), need(a.m, "m")).with_family(GenericFamily{fmt::format("star({})", *a.m)});
  }
  throw UsageError(fmt::format("unknown family '{}'", f));
}

TheoremInstance theorem_instance(const LabelArgs& a) {
  switch (a.theorem) {
    case 1:
    case 2: return {a.theorem, need(a.n, "n"), need(a.m, "m")};
    case 3: return {a.theorem, need(a.k, "k"), need(a.m, "m")};
    default: throw UsageError(fmt::format("--theorem must be 1, 2 or 3 (got {})", a.theorem));
  }
}

struct LoadedPair {
  Graph graph;
  Labeling labeling;
};

LoadedPair load_pair(const std::string& graph_path, const std::string& labeling_path) {
  Graph g = graph_from_json(read_file(graph_path));
  auto file = labeling_from_json(read_file(labeling_path));
  if (file.graph_fingerprint != fingerprint(g)) {
    throw UsageError(fmt::format("labeling '{}' was made for a different graph (fingerprint mismatch)", labeling_path));
  }
  if (file.labeling.size() != g.p()) {
    throw UsageError(fmt::format("labeling has {} entries, graph has {} vertices", file.labeling.size(), g.p()));
  }
  return {std::move(g), std::move(file.labeling)};
}

std::string dot_id(const std::string& tag) {
  static const std::regex plain("[A-Za-z_][A-Za-z0-9_]*");
  return std::regex_match(tag, plain) ? tag : fmt::format("\"{}\"", tag);
}

std::string to_dot(const Graph& g, const Labeling* l) {
  std::string name = "G";
  if (g.family()) {
    if (const auto* gen = std::get_if<GenericFamily>(&*g.family())) {
      name = gen->name;
    } else {
      name = family_kind(*g.family());
    }
  }
  std::string out = fmt::format("graph {} {{\n", dot_id(name));
  for (VertexId v = 0; v < g.p(); ++v) {
    const auto id = dot_id(g.tag(v).str());
    if (l && (*l)[v]) {
      out += fmt::format("  {} [xlabel={}];\n", id, *(*l)[v]);
    } else {
      out += fmt::format("  {};\n", id);
    }
  }
  for (const auto& e : g.edges()) {
    const auto a = dot_id(g.tag(e.first).str()), b = dot_id(g.tag(e.second).str());
    if (l && (*l)[e.first] && (*l)[e.second]) {
      out += fmt::format("  {} -- {} [label={}];\n", a, b, edge_label(*l, e));
    } else {
      out += fmt::format("  {} -- {};\n", a, b);
    }
  }
  out += "}\n";
  return out;
}

template <typename F>
int guarded(Io io, F&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    io.err << "error: " << e.what() << "\n";
  } catch (const FormatError& e) {
    io.err << "error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    io.err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace

int cmd_gen(const GenArgs& args, Io io) {
  return guarded(io, [&] {
    write_output(args.out, to_json(generate(args)), io);
    return kExitOk;
  });
}

int cmd_label(const LabelArgs& args, Io io) {
  return guarded(io, [&] {
    const auto inst = theorem_instance(args);
    const Graph g = build_theorem_graph(inst);
    const auto result = label_theorem(inst, {.apply_repairs = args.repair});
    write_output(args.out, labeling_to_json(g, result.labeling), io);

    std::string interp_path = args.interp_out;
    if (interp_path.empty() && !args.out.empty() && args.out != "-") {
      interp_path = std::filesystem::path(args.out).replace_extension(".interp.json").string();
    }
    if (!interp_path.empty()) {
      write_output(interp_path, to_json(result.interpretation), io);
    } else {
      io.err << to_json(result.interpretation);
    }
    if (!args.graph_out.empty()) write_output(args.graph_out, to_json(g), io);
    return kExitOk;
  });
}

int cmd_verify(const VerifyArgs& args, Io io) {
  return guarded(io, [&] {
    const auto pair = load_pair(args.graph_path, args.labeling_path);
    const auto report = verify_odd_graceful(pair.graph, pair.labeling);
    write_output(args.out, to_json(report, pair.graph), io);
    return report.ok ? kExitOk : kExitNegative;
  });
}

int cmd_search(const SearchArgs& args, Io io) {
  return guarded(io, [&] {
    const Graph g = graph_from_json(read_file(args.graph_path));
    SearchConfig cfg;
    cfg.node_budget = args.max_nodes;
    if (args.timeout_ms) cfg.time_budget = std::chrono::milliseconds(*args.timeout_ms);
    cfg.use_parity_prune = !args.no_parity_prune;
    cfg.use_complement_symmetry = !args.no_symmetry;
    const auto outcome = find_odd_graceful(g, cfg);
    write_output(args.out, to_json(outcome), io);
    switch (outcome.status) {
      case SearchStatus::Found: return kExitOk;
      case SearchStatus::ExhaustedNone: return kExitNegative;
      case SearchStatus::Inconclusive: return kExitInconclusive;
    }
    return kExitError;
  });
}

int cmd_sweep(const SweepArgs& args, Io io) {
  return guarded(io, [&] {
    const auto grid = parse_grid(args.grid);
    SweepOptions opts;
    opts.policy = parse_policy(args.policy);
    if (args.max_nodes) opts.node_budget = *args.max_nodes;
    if (args.timeout_ms) opts.time_budget = std::chrono::milliseconds(*args.timeout_ms);
    opts.search_max_edges = args.search_max_edges;
    opts.apply_repairs = args.repair;
    opts.record_timing = args.record_timing;
    opts.jobs = std::max(1u, args.jobs);
    std::optional<ExpectedTable> expected;
    if (!args.expected_path.empty()) expected = parse_expected(read_file(args.expected_path));

    const auto rows = run_sweep(grid, opts);
    write_output(args.out, to_csv(rows), io);
    if (!expected) return kExitOk;
    const auto mismatches = expectation_mismatches(rows, *expected);
    for (const auto& m : mismatches) io.err << "mismatch: " << m << "\n";
    return mismatches.empty() ? kExitOk : kExitNegative;
  });
}

int cmd_export(const ExportArgs& args, Io io) {
  return guarded(io, [&] {
    if (args.format != "dot" && args.format != "json") throw UsageError(fmt::format("unknown format '{}'", args.format));
    std::optional<LoadedPair> pair;
    if (!args.labeling_path.empty()) {
      pair = load_pair(args.graph_path, args.labeling_path);
    } else {
      pair = LoadedPair{graph_from_json(read_file(args.graph_path)), Labeling{}};
    }
    const Labeling* labels = args.labeling_path.empty() ? nullptr : &pair->labeling;
    if (args.format == "dot") {
      write_output(args.out, to_dot(pair->graph, labels), io);
      return kExitOk;
    }
    if (!labels) {
      write_output(args.out, to_json(pair->graph), io);
      return kExitOk;
    }
    auto doc = nlohmann::json::object();
    doc["graph"] = nlohmann::json::parse(to_json(pair->graph));
    doc["labels"] = nlohmann::json::parse(labeling_to_json(pair->graph, *labels))["labels"];
    auto edge_values = nlohmann::json::array();
    for (const auto& e : pair->graph.edges()) {
      if ((*labels)[e.first] && (*labels)[e.second]) {
        edge_values.push_back(edge_label(*labels, e));
      } else {
        edge_values.push_back(nullptr);
      }
    }
    doc["edge_labels"] = edge_values;
    write_output(args.out, doc.dump() + "\n", io);
    return kExitOk;
  });
}

int run(int argc, const char* const* argv, Io io) {
  CLI::App app{"Odd-graceful labeling laboratory: build, label, verify and search graph families"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Write a graph as canonical JSON");
  g->add_option("--family", gen.family,
                "ladder | sub-ladder | sub-tri-snake | path | cycle | plain-ladder | tri-snake | star")
      ->required();
  g->add_option("--n", gen.n);
  g->add_option("--k", gen.k);
  g->add_option("--m", gen.m);
  g->add_option("--out", gen.out, "Output path ('-' for stdout)");

  LabelArgs label;
  auto* l = app.add_subcommand("label", "Write the closed-form labeling of a theorem family");
  l->add_option("--theorem", label.theorem)->required();
  l->add_option("--n", label.n);
  l->add_option("--k", label.k);
  l->add_option("--m", label.m);
  l->add_option("--out", label.out);
  l->add_option("--graph-out", label.graph_out, "Also write the matching graph JSON");
  l->add_option("--interp-out", label.interp_out, "Formula interpretation sidecar path");
  l->add_flag("--repair", label.repair, "Experimental: apply documented candidate formula repairs");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check the odd-graceful conditions for a graph/labeling pair");
  v->add_option("graph", verify.graph_path)->required();
  v->add_option("labeling", verify.labeling_path)->required();
  v->add_option("--out", verify.out);

  SearchArgs search;
  auto* s = app.add_subcommand("search", "Exact backtracking search for an odd-graceful labeling");
  s->add_option("graph", search.graph_path)->required();
  s->add_option("--max-nodes", search.max_nodes);
  s->add_option("--timeout-ms", search.timeout_ms);
  s->add_flag("--no-parity-prune", search.no_parity_prune);
  s->add_flag("--no-symmetry", search.no_symmetry);
  s->add_option("--out", search.out);

  SweepArgs sweep;
  auto* w = app.add_subcommand("sweep", "Audit closed-form labelings over a parameter grid (CSV)");
  w->add_option("--grid", sweep.grid, "e.g. \"theorem1:n=2..10,m=1..5;theorem3:k=1..2,m=1\"")->required();
  w->add_option("--search-policy", sweep.policy, "never | on-fail | always");
  w->add_option("--expected", sweep.expected_path, "Expected-verdict table (CSV)");
  w->add_option("--out", sweep.out);
  w->add_option("--max-nodes", sweep.max_nodes);
  w->add_option("--timeout-ms", sweep.timeout_ms);
  w->add_option("--search-max-edges", sweep.search_max_edges, "Only search instances with q at most this");
  w->add_option("--jobs", sweep.jobs);
  w->add_flag("--repair", sweep.repair);
  w->add_flag("--record-timing", sweep.record_timing, "Fill elapsed_ms (makes output non-reproducible)");

  ExportArgs exp;
  auto* x = app.add_subcommand("export", "Render a graph (and optional labeling) as DOT or JSON");
  x->add_option("graph", exp.graph_path)->required();
  x->add_option("labeling", exp.labeling_path);
  x->add_option("--format", exp.format, "dot | json");
  x->add_option("--out", exp.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    io.out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << "\n";
    return kExitError;
  }

  if (g->parsed()) return cmd_gen(gen, io);
  if (l->parsed()) return cmd_label(label, io);
  if (v->parsed()) return cmd_verify(verify, io);
  if (s->parsed()) return cmd_search(search, io);
  if (w->parsed()) return cmd_sweep(sweep, io);
  if (x->parsed()) return cmd_export(exp, io);
  return kExitError;
}

}  // namespace oglab::cli
