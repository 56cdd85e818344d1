#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "oglab/graph.hpp"
#include "oglab/labeling.hpp"

namespace oglab {

struct SearchConfig {
  /// Upper bound on vertex labels; clamped to 2q-1.
  std::optional<Label> max_label;
  std::optional<std::uint64_t> node_budget;
  std::optional<std::chrono::milliseconds> time_budget;
  /// Fix label parity from the 2-colouring once a component's first vertex is placed.
  bool use_parity_prune = true;
  /// Restrict the first vertex to labels <= q-1 (connected graphs only).
  bool use_complement_symmetry = true;
  /// Prune when the largest unused edge label can no longer be produced.
  bool use_reachability_prune = true;
};

enum class SearchStatus { Found, ExhaustedNone, Inconclusive };
enum class BudgetReason { NodeBudget, TimeBudget };

std::string_view status_name(SearchStatus s);  // "found" | "none" | "inconclusive"
std::string_view reason_name(BudgetReason r);  // "node-budget" | "time-budget"

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t backtracks = 0;
  std::chrono::milliseconds elapsed{0};
  std::size_t max_depth = 0;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Inconclusive;
  std::optional<Labeling> labeling;   // set iff Found
  std::optional<BudgetReason> reason;  // set iff Inconclusive
  SearchStats stats;
};

/// Complete depth-first search for an odd-graceful labeling. Vertices are
/// placed in BFS order from a maximum-degree vertex, labels tried ascending.
/// Throws DomainError on an empty graph.
SearchOutcome find_odd_graceful(const Graph& g, const SearchConfig& cfg = {});

inline constexpr std::size_t kExhaustiveMaxEdges = 6;

/// Unpruned enumeration of every injection into {0..2q-1}, each checked by
/// verify_odd_graceful. Throws DomainError when q > kExhaustiveMaxEdges or the
/// graph is empty.
SearchOutcome exhaustive_oracle(const Graph& g);

}  // namespace oglab
