#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <set>
#include <sstream>
#include <thread>

#include <fmt/core.h>

#include "oglab/io.hpp"
#include "oglab/search.hpp"

namespace oglab::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw FormatError(fmt::format("expected an integer in '{}'", context));
  }
  return value;
}

IntRange parse_range(std::string_view s, std::string_view context) {
  s = trim(s);
  auto dots = s.find("..");
  IntRange r{};
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_int(s, context);
  } else {
    r.lo = parse_int(s.substr(0, dots), context);
    r.hi = parse_int(s.substr(dots + 2), context);
  }
  if (r.lo > r.hi) throw FormatError(fmt::format("empty range in '{}'", context));
  return r;
}

int theorem_of(std::string_view family) {
  if (family == "theorem1" || family == "ladder") return 1;
  if (family == "theorem2" || family == "sub-ladder") return 2;
  if (family == "theorem3" || family == "sub-tri-snake") return 3;
  throw FormatError(fmt::format("unknown grid family '{}'", family));
}

std::string family_name(int theorem) {
  switch (theorem) {
    case 1: return "ladder";
    case 2: return "sub-ladder";
    default: return "sub-tri-snake";
  }
}

// Comma-free summary: Kind(label), or Kind(vertex-id) for missing labels.
std::string summarize(const Violation& v) { return fmt::format("{}({})", violation_kind(v), violation_value(v)); }

}  // namespace

std::vector<GridEntry> parse_grid(std::string_view spec) {
  std::vector<GridEntry> grid;
  for (auto block : split(spec, ';')) {
    block = trim(block);
    if (block.empty()) continue;
    auto colon = block.find(':');
    if (colon == std::string_view::npos) throw FormatError(fmt::format("grid block '{}' lacks ':'", block));
    GridEntry entry{};
    entry.theorem = theorem_of(trim(block.substr(0, colon)));
    bool have_size = false, have_m = false;
    for (auto assignment : split(block.substr(colon + 1), ',')) {
      auto eq = assignment.find('=');
      if (eq == std::string_view::npos) throw FormatError(fmt::format("grid term '{}' lacks '='", assignment));
      auto var = trim(assignment.substr(0, eq));
      auto range = parse_range(assignment.substr(eq + 1), block);
      const std::string_view size_var = entry.theorem == 3 ? "k" : "n";
      if (var == size_var) {
        entry.size = range;
        have_size = true;
      } else if (var == "m") {
        entry.m = range;
        have_m = true;
      } else {
        throw FormatError(fmt::format("unexpected variable '{}' in grid block '{}'", var, block));
      }
    }
    if (!have_size || !have_m) throw FormatError(fmt::format("grid block '{}' needs both size and m ranges", block));
    const int min_size = entry.theorem == 3 ? 1 : 2;
    if (entry.size.lo < min_size || entry.m.lo < 1) {
      throw FormatError(fmt::format("grid block '{}' leaves the family's parameter domain", block));
    }
    grid.push_back(entry);
  }
  if (grid.empty()) throw FormatError("empty grid");
  return grid;
}

SearchPolicy parse_policy(std::string_view text) {
  if (text == "never") return SearchPolicy::Never;
  if (text == "on-fail") return SearchPolicy::OnFail;
  if (text == "always") return SearchPolicy::Always;
  throw FormatError(fmt::format("unknown search policy '{}'", text));
}

SweepRow evaluate_instance(const TheoremInstance& inst, const SweepOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const Graph g = build_theorem_graph(inst);
  const auto out = label_theorem(inst, {.apply_repairs = opts.apply_repairs});
  const auto report = verify_odd_graceful(g, out.labeling);

  SweepRow row;
  row.family = family_name(inst.theorem);
  row.size = inst.size;
  row.m = inst.m;
  row.p = g.p();
  row.q = g.q();
  if (report.ok) {
    row.verdict = "pass";
  } else if (!out.interpretation.uncovered_vertices.empty()) {
    row.verdict = fmt::format("partial({})", out.interpretation.uncovered_vertices.size());
  } else {
    row.verdict = "fail";
  }
  for (const auto& v : report.violations) {
    if (std::holds_alternative<MissingVertexLabel>(v)) continue;
    row.first_violation = summarize(v);
    break;
  }

  const bool wanted = opts.policy == SearchPolicy::Always || (opts.policy == SearchPolicy::OnFail && !report.ok);
  if (wanted && g.q() <= opts.search_max_edges) {
    SearchConfig cfg;
    cfg.node_budget = opts.node_budget;
    cfg.time_budget = opts.time_budget;
    const auto result = find_odd_graceful(g, cfg);
    row.search_outcome = std::string(status_name(result.status));
    row.search_nodes = result.stats.nodes_expanded;
  } else {
    row.search_outcome = "skipped";
  }
  if (opts.record_timing) {
    row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  return row;
}

std::vector<SweepRow> run_sweep(const std::vector<GridEntry>& grid, const SweepOptions& opts) {
  std::set<std::tuple<int, int, int>> unique;
  for (const auto& e : grid) {
    for (int s = e.size.lo; s <= e.size.hi; ++s) {
      for (int m = e.m.lo; m <= e.m.hi; ++m) unique.emplace(e.theorem, s, m);
    }
  }
  std::vector<TheoremInstance> instances;
  for (auto [t, s, m] : unique) instances.push_back({t, s, m});

  std::vector<SweepRow> rows(instances.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(instances.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) rows[i] = evaluate_instance(instances[i], opts);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tie(a.family, a.size, a.m) < std::tie(b.family, b.size, b.m);
  });
  return rows;
}

std::string sweep_csv_header() {
  return "family,n_or_k,m,p,q,closed_form_verdict,first_violation,search_outcome,search_nodes,elapsed_ms";
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::string out = sweep_csv_header() + "\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", r.family, r.size, r.m, r.p, r.q, r.verdict,
                       r.first_violation, r.search_outcome, r.search_nodes, r.elapsed_ms);
  }
  return out;
}

ExpectedTable parse_expected(std::string_view text) {
  ExpectedTable table;
  bool header = true;
  for (auto line : split(text, '\n')) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (header) {
      header = false;
      if (line != "family,n_or_k,m,verdict") throw FormatError("expected-verdict table needs header family,n_or_k,m,verdict");
      continue;
    }
    auto cells = split(line, ',');
    if (cells.size() != 4) throw FormatError(fmt::format("bad expected-verdict row '{}'", line));
    std::string verdict(trim(cells[3]));
    if (verdict != "pass" && verdict != "fail" && verdict != "partial") {
      throw FormatError(fmt::format("unknown verdict '{}'", verdict));
    }
    std::string family(trim(cells[0]));
    table[{family_name(theorem_of(family)), parse_int(cells[1], line), parse_int(cells[2], line)}] = verdict;
  }
  if (header) throw FormatError("expected-verdict table is empty");
  return table;
}

std::string verdict_class(const std::string& verdict) {
  auto paren = verdict.find('(');
  return paren == std::string::npos ? verdict : verdict.substr(0, paren);
}

std::vector<std::string> expectation_mismatches(const std::vector<SweepRow>& rows, const ExpectedTable& table) {
  std::vector<std::string> out;
  for (const auto& r : rows) {
    auto it = table.find({r.family, r.size, r.m});
    if (it == table.end()) {
      out.push_back(fmt::format("{} ({},{}): no expected verdict", r.family, r.size, r.m));
    } else if (it->second != verdict_class(r.verdict)) {
      out.push_back(fmt::format("{} ({},{}): expected {}, got {}", r.family, r.size, r.m, it->second, r.verdict));
    }
  }
  return out;
}

}  // namespace oglab::cli
