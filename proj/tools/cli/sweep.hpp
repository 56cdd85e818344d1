#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "oglab/closed_form.hpp"

namespace oglab::cli {

struct IntRange {
  int lo;
  int hi;
};

/// One family block of a grid, e.g. "theorem1:n=2..10,m=1..5".
struct GridEntry {
  int theorem;
  IntRange size;
  IntRange m;
};

/// Blocks separated by ';'. Family is theorem1|theorem2|theorem3 or the
/// matching family keyword (ladder, sub-ladder, sub-tri-snake). Theorems 1
/// and 2 take n, theorem 3 takes k. A range is "a..b" or a single integer.
/// Throws oglab::FormatError on malformed input.
std::vector<GridEntry> parse_grid(std::string_view spec);

enum class SearchPolicy { Never, OnFail, Always };
SearchPolicy parse_policy(std::string_view text);

struct SweepOptions {
  SearchPolicy policy = SearchPolicy::OnFail;
  std::size_t search_max_edges = 30;
  std::uint64_t node_budget = 10'000'000;
  std::optional<std::chrono::milliseconds> time_budget;
  bool apply_repairs = false;
  bool record_timing = false;
  unsigned jobs = 1;
};

struct SweepRow {
  std::string family;
  int size = 0;
  int m = 0;
  std::size_t p = 0;
  std::size_t q = 0;
  std::string verdict;  // pass | fail | partial(N)
  std::string first_violation;
  std::string search_outcome;  // found | none | inconclusive | skipped
  std::uint64_t search_nodes = 0;
  std::int64_t elapsed_ms = 0;
};

SweepRow evaluate_instance(const TheoremInstance& inst, const SweepOptions& opts);

/// Every instance of the grid, sorted by (family, n/k, m), duplicates removed.
std::vector<SweepRow> run_sweep(const std::vector<GridEntry>& grid, const SweepOptions& opts);

std::string sweep_csv_header();
std::string to_csv(const std::vector<SweepRow>& rows);

/// (family, n/k, m) -> verdict class (pass | fail | partial).
using ExpectedTable = std::map<std::tuple<std::string, int, int>, std::string>;

/// CSV with header "family,n_or_k,m,verdict".
ExpectedTable parse_expected(std::string_view text);

/// Verdict class of a row: "partial(2)" -> "partial".
std::string verdict_class(const std::string& verdict);

/// Human-readable descriptions of rows whose verdict disagrees with the table
/// (or that have no entry in it).
std::vector<std::string> expectation_mismatches(const std::vector<SweepRow>& rows, const ExpectedTable& table);

}  // namespace oglab::cli
