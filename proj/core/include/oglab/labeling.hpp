#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "oglab/graph.hpp"

namespace oglab {

using Label = std::int64_t;

/// Vertex labels indexed by VertexId. An empty slot means the vertex has not
/// been assigned a label (the verifier reports it).
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::size_t size) : labels_(size) {}
  explicit Labeling(std::vector<std::optional<Label>> labels) : labels_(std::move(labels)) {}
  static Labeling from_values(std::span<const Label> values);

  std::size_t size() const { return labels_.size(); }
  const std::optional<Label>& operator[](VertexId v) const { return labels_.at(v); }
  void set(VertexId v, Label value) { labels_.at(v) = value; }
  void clear(VertexId v) { labels_.at(v).reset(); }

  bool is_total() const;
  /// Throws std::logic_error if any slot is empty.
  std::vector<Label> values() const;
  const std::vector<std::optional<Label>>& slots() const { return labels_; }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<std::optional<Label>> labels_;
};

/// |l(a) - l(b)|; throws std::invalid_argument when an endpoint is unlabeled.
Label edge_label(const Labeling& l, const Edge& e);

struct MissingVertexLabel {
  VertexId vertex;
  friend bool operator==(const MissingVertexLabel&, const MissingVertexLabel&) = default;
};
struct VertexLabelOutOfRange {
  VertexId vertex;
  Label label;
  friend bool operator==(const VertexLabelOutOfRange&, const VertexLabelOutOfRange&) = default;
};
struct DuplicateVertexLabel {
  VertexId vertex_a;
  VertexId vertex_b;
  Label label;
  friend bool operator==(const DuplicateVertexLabel&, const DuplicateVertexLabel&) = default;
};
struct EdgeLabelEven {
  Edge edge;
  Label label;
  friend bool operator==(const EdgeLabelEven&, const EdgeLabelEven&) = default;
};
struct DuplicateEdgeLabel {
  Edge edge_a;
  Edge edge_b;
  Label label;
  friend bool operator==(const DuplicateEdgeLabel&, const DuplicateEdgeLabel&) = default;
};
struct MissingOddEdgeLabel {
  Label label;
  friend bool operator==(const MissingOddEdgeLabel&, const MissingOddEdgeLabel&) = default;
};

/// Alternative order is the canonical report order.
using Violation = std::variant<MissingVertexLabel, VertexLabelOutOfRange, DuplicateVertexLabel, EdgeLabelEven,
                               DuplicateEdgeLabel, MissingOddEdgeLabel>;

std::string_view violation_kind(const Violation& v);
/// The label value a violation is about; for MissingVertexLabel, the vertex id.
Label violation_value(const Violation& v);
/// Human-readable form using vertex tags, e.g. "DuplicateVertexLabel(u2,w1,23)".
std::string describe(const Violation& v, const Graph& g);

struct VerificationReport {
  bool ok = false;
  std::size_t q = 0;
  std::vector<Violation> violations;

  template <typename Kind>
  std::size_t count() const {
    std::size_t c = 0;
    for (const auto& v : violations) c += std::holds_alternative<Kind>(v) ? 1 : 0;
    return c;
  }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Checks every odd-graceful condition and lists all violations in canonical
/// order (by kind, then ids, then label). Never throws on labeling content; a
/// labeling shorter than the vertex set counts as missing labels.
VerificationReport verify_odd_graceful(const Graph& g, const Labeling& l);

/// x -> 2q-1-x on every assigned slot.
Labeling complement_labeling(const Graph& g, const Labeling& l);

/// Edge labels of `g` under a total labeling, in edge order.
std::vector<Label> edge_labels(const Graph& g, const Labeling& l);

/// Largest assigned label, if any.
std::optional<Label> max_label(const Labeling& l);

}  // namespace oglab
