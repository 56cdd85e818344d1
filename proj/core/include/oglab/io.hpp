#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "oglab/closed_form.hpp"
#include "oglab/graph.hpp"
#include "oglab/labeling.hpp"
#include "oglab/search.hpp"

namespace oglab {

/// Malformed or inconsistent file content.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All writers emit canonical JSON: sorted keys, no insignificant whitespace,
// one trailing newline.

std::string to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

/// Hex SHA-256 of the canonical graph JSON (trailing newline included).
std::string fingerprint(const Graph& g);

struct LabelingFile {
  std::string graph_fingerprint;
  Labeling labeling;
};

std::string labeling_to_json(const Graph& g, const Labeling& l);
LabelingFile labeling_from_json(std::string_view text);

std::string to_json(const FormulaInterpretation& interp);
std::string to_json(const VerificationReport& report, const Graph& g);
std::string to_json(const SearchOutcome& outcome);

}  // namespace oglab
