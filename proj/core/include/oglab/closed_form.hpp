#pragma once

#include <string>
#include <vector>

#include "oglab/graph.hpp"
#include "oglab/labeling.hpp"

namespace oglab {

struct FormulaNote {
  std::string formula_id;
  std::string decision;
  friend bool operator==(const FormulaNote&, const FormulaNote&) = default;
};

/// How the printed formulas were mapped onto vertices. `uncovered_vertices`
/// lists vertices that no printed index range reaches; their labeling slots
/// are left empty.
struct FormulaInterpretation {
  std::vector<FormulaNote> notes;
  std::vector<VertexTag> uncovered_vertices;
};

struct ClosedFormOptions {
  /// Swap in documented candidate repairs for formulas known to fail as
  /// printed. Every repair applied adds a note.
  bool apply_repairs = false;
};

struct LabelerOutput {
  Labeling labeling;
  FormulaInterpretation interpretation;
};

// Each labeler indexes the graph returned by the matching build_theorem*.
// None of them verify their output.
LabelerOutput label_theorem1(int n, int m, ClosedFormOptions opts = {});
LabelerOutput label_theorem2(int n, int m, ClosedFormOptions opts = {});
LabelerOutput label_theorem3(int k, int m, ClosedFormOptions opts = {});

/// Theorem number (1, 2, 3) plus parameters, resolved to graph and labeling.
struct TheoremInstance {
  int theorem;
  int size;  // n for theorems 1 and 2, k for theorem 3
  int m;
};

Graph build_theorem_graph(const TheoremInstance& inst);
LabelerOutput label_theorem(const TheoremInstance& inst, ClosedFormOptions opts = {});

}  // namespace oglab
