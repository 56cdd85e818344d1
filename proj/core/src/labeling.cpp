#include "oglab/labeling.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include <fmt/core.h>

namespace oglab {

Labeling Labeling::from_values(std::span<const Label> values) {
  std::vector<std::optional<Label>> slots(values.begin(), values.end());
  return Labeling(std::move(slots));
}

bool Labeling::is_total() const {
  return std::all_of(labels_.begin(), labels_.end(), [](const auto& x) { return x.has_value(); });
}

std::vector<Label> Labeling::values() const {
  std::vector<Label> out;
  out.reserve(labels_.size());
  for (const auto& x : labels_) {
    if (!x) throw std::logic_error("labeling is not total");
    out.push_back(*x);
  }
  return out;
}

Label edge_label(const Labeling& l, const Edge& e) {
  if (e.first >= l.size() || e.second >= l.size() || !l[e.first] || !l[e.second]) {
    throw std::invalid_argument("edge endpoint has no label");
  }
  auto d = *l[e.first] - *l[e.second];
  return d < 0 ? -d : d;
}

std::string_view violation_kind(const Violation& v) {
  static constexpr std::string_view names[] = {"MissingVertexLabel", "VertexLabelOutOfRange",
                                               "DuplicateVertexLabel", "EdgeLabelEven",
                                               "DuplicateEdgeLabel",  "MissingOddEdgeLabel"};
  return names[v.index()];
}

Label violation_value(const Violation& v) {
  struct Visitor {
    Label operator()(const MissingVertexLabel& x) const { return x.vertex; }
    Label operator()(const VertexLabelOutOfRange& x) const { return x.label; }
    Label operator()(const DuplicateVertexLabel& x) const { return x.label; }
    Label operator()(const EdgeLabelEven& x) const { return x.label; }
    Label operator()(const DuplicateEdgeLabel& x) const { return x.label; }
    Label operator()(const MissingOddEdgeLabel& x) const { return x.label; }
  };
  return std::visit(Visitor{}, v);
}

std::string describe(const Violation& v, const Graph& g) {
  auto t = [&](VertexId id) { return id < g.p() ? g.tag(id).str() : fmt::format("#{}", id); };
  auto e = [&](const Edge& x) { return fmt::format("{}-{}", t(x.first), t(x.second)); };
  struct Visitor {
    decltype(t)& tag;
    decltype(e)& edge;
    std::string operator()(const MissingVertexLabel& x) const { return fmt::format("MissingVertexLabel({})", tag(x.vertex)); }
    std::string operator()(const VertexLabelOutOfRange& x) const {
      return fmt::format("VertexLabelOutOfRange({},{})", tag(x.vertex), x.label);
    }
    std::string operator()(const DuplicateVertexLabel& x) const {
      return fmt::format("DuplicateVertexLabel({},{},{})", tag(x.vertex_a), tag(x.vertex_b), x.label);
    }
    std::string operator()(const EdgeLabelEven& x) const { return fmt::format("EdgeLabelEven({},{})", edge(x.edge), x.label); }
    std::string operator()(const DuplicateEdgeLabel& x) const {
      return fmt::format("DuplicateEdgeLabel({},{},{})", edge(x.edge_a), edge(x.edge_b), x.label);
    }
    std::string operator()(const MissingOddEdgeLabel& x) const { return fmt::format("MissingOddEdgeLabel({})", x.label); }
  };
  return std::visit(Visitor{t, e}, v);
}

namespace {

using SortKey = std::tuple<std::size_t, VertexId, VertexId, VertexId, VertexId, Label>;

SortKey sort_key(const Violation& v) {
  struct Visitor {
    SortKey operator()(const MissingVertexLabel& x) const { return {0, x.vertex, 0, 0, 0, 0}; }
    SortKey operator()(const VertexLabelOutOfRange& x) const { return {1, x.vertex, 0, 0, 0, x.label}; }
    SortKey operator()(const DuplicateVertexLabel& x) const { return {2, x.vertex_a, x.vertex_b, 0, 0, x.label}; }
    SortKey operator()(const EdgeLabelEven& x) const { return {3, x.edge.first, x.edge.second, 0, 0, x.label}; }
    SortKey operator()(const DuplicateEdgeLabel& x) const {
      return {4, x.edge_a.first, x.edge_a.second, x.edge_b.first, x.edge_b.second, x.label};
    }
    SortKey operator()(const MissingOddEdgeLabel& x) const { return {5, 0, 0, 0, 0, x.label}; }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace

VerificationReport verify_odd_graceful(const Graph& g, const Labeling& l) {
  VerificationReport report;
  report.q = g.q();
  const Label q = static_cast<Label>(g.q());
  // With q = 0 the only admissible value is 0 (a lone vertex passes vacuously).
  const Label max_vertex_label = q == 0 ? 0 : 2 * q - 1;
  auto& out = report.violations;

  auto label_of = [&](VertexId v) -> std::optional<Label> { return v < l.size() ? l[v] : std::nullopt; };

  std::map<Label, std::vector<VertexId>> holders;
  for (VertexId v = 0; v < g.p(); ++v) {
    auto x = label_of(v);
    if (!x) {
      out.emplace_back(MissingVertexLabel{v});
      continue;
    }
    if (*x < 0 || *x > max_vertex_label) out.emplace_back(VertexLabelOutOfRange{v, *x});
    holders[*x].push_back(v);
  }
  for (const auto& [value, ids] : holders) {
    for (std::size_t i = 1; i < ids.size(); ++i) out.emplace_back(DuplicateVertexLabel{ids[0], ids[i], value});
  }

  std::map<Label, std::vector<Edge>> by_edge_label;
  for (const auto& e : g.edges()) {
    auto a = label_of(e.first), b = label_of(e.second);
    if (!a || !b) continue;
    Label d = *a > *b ? *a - *b : *b - *a;
    if (d % 2 == 0) {
      out.emplace_back(EdgeLabelEven{e, d});
    } else {
      by_edge_label[d].push_back(e);
    }
  }
  for (const auto& [value, edges] : by_edge_label) {
    for (std::size_t i = 1; i < edges.size(); ++i) out.emplace_back(DuplicateEdgeLabel{edges[0], edges[i], value});
  }
  for (Label odd = 1; odd <= 2 * q - 1; odd += 2) {
    if (!by_edge_label.contains(odd)) out.emplace_back(MissingOddEdgeLabel{odd});
  }

  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return sort_key(a) < sort_key(b); });
  report.ok = out.empty();
  return report;
}

Labeling complement_labeling(const Graph& g, const Labeling& l) {
  const Label top = 2 * static_cast<Label>(g.q()) - 1;
  Labeling out(l.size());
  for (VertexId v = 0; v < l.size(); ++v) {
    if (l[v]) out.set(v, top - *l[v]);
  }
  return out;
}

std::vector<Label> edge_labels(const Graph& g, const Labeling& l) {
  std::vector<Label> out;
  out.reserve(g.q());
  for (const auto& e : g.edges()) out.push_back(edge_label(l, e));
  return out;
}

std::optional<Label> max_label(const Labeling& l) {
  std::optional<Label> best;
  for (const auto& x : l.slots()) {
    if (x && (!best || *x > *best)) best = x;
  }
  return best;
}

}  // namespace oglab
