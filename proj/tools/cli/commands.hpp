#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace oglab::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // violations found / no labeling exists / expectations mismatch
inline constexpr int kExitError = 2;     // bad arguments, unreadable or mismatched files
inline constexpr int kExitInconclusive = 3;

struct Io {
  std::ostream& out;
  std::ostream& err;
};

struct GenArgs {
  std::string family;
  std::optional<int> n, k, m;
  std::string out = "-";
};

struct LabelArgs {
  int theorem = 0;
  std::optional<int> n, k, m;
  std::string out = "-";
  std::string graph_out;   // optional companion graph file
  std::string interp_out;  // defaults to <out> with extension .interp.json
  bool repair = false;
};

struct VerifyArgs {
  std::string graph_path;
  std::string labeling_path;
  std::string out = "-";
};

struct SearchArgs {
  std::string graph_path;
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::int64_t> timeout_ms;
  bool no_parity_prune = false;
  bool no_symmetry = false;
  std::string out = "-";
};

struct SweepArgs {
  std::string grid;
  std::string policy = "on-fail";
  std::string expected_path;
  std::string out = "-";
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::int64_t> timeout_ms;
  std::size_t search_max_edges = 30;
  unsigned jobs = 1;
  bool repair = false;
  bool record_timing = false;
};

struct ExportArgs {
  std::string graph_path;
  std::string labeling_path;  // optional
  std::string format = "dot";
  std::string out = "-";
};

int cmd_gen(const GenArgs& args, Io io);
int cmd_label(const LabelArgs& args, Io io);
int cmd_verify(const VerifyArgs& args, Io io);
int cmd_search(const SearchArgs& args, Io io);
int cmd_sweep(const SweepArgs& args, Io io);
int cmd_export(const ExportArgs& args, Io io);

/// Parses argv and dispatches to the matching command.
int run(int argc, const char* const* argv, Io io);

}  // namespace oglab::cli
