#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "commands.hpp"
#include "json.hpp"
#include "oglab/io.hpp"
#include "sweep.hpp"

namespace oglab::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result oglab(std::vector<std::string> args) {
  args.insert(args.begin(), "oglab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), {out, err});
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / fmt_name();
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  static std::string fmt_name() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    return std::string("oglab_cli_") + info->name();
  }
  fs::path dir_;
};

TEST_F(Cli, GenCounts) {
  auto ladder = oglab({"gen", "--family", "ladder", "--n", "2", "--m", "1"});
  ASSERT_EQ(ladder.code, kExitOk);
  auto g = graph_from_json(ladder.out);
  EXPECT_EQ(g.p(), 8u);
  EXPECT_EQ(g.q(), 8u);

  g = graph_from_json(oglab({"gen", "--family", "sub-ladder", "--n", "3", "--m", "1"}).out);
  EXPECT_EQ(g.p(), 26u);
  EXPECT_EQ(g.q(), 27u);

  g = graph_from_json(oglab({"gen", "--family", "sub-tri-snake", "--k", "1", "--m", "1"}).out);
  EXPECT_EQ(g.p(), 12u);
  EXPECT_EQ(g.q(), 12u);
}

TEST_F(Cli, GenErrors) {
  auto r = oglab({"gen", "--family", "ladder", "--n", "1", "--m", "1"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(oglab({"gen", "--family", "ladder", "--n", "2"}).code, kExitError);
  EXPECT_EQ(oglab({"gen", "--family", "hypercube", "--n", "2"}).code, kExitError);
  EXPECT_EQ(oglab({"gen"}).code, kExitError);
  EXPECT_EQ(oglab({}).code, kExitError);
  EXPECT_EQ(oglab({"frobnicate"}).code, kExitError);
}

TEST_F(Cli, GenRoundTripByteIdentical) {
  const auto out = path("g.json");
  ASSERT_EQ(oglab({"gen", "--family", "sub-tri-snake", "--k", "3", "--m", "2", "--out", out}).code, kExitOk);
  const auto text = slurp(out);
  EXPECT_EQ(to_json(graph_from_json(text)), text);
  EXPECT_EQ(oglab({"export", out, "--format", "json"}).out, text);
}

TEST_F(Cli, LabelTheorem1) {
  const auto l = path("t1.json"), g = path("t1.graph.json");
  ASSERT_EQ(oglab({"label", "--theorem", "1", "--n", "2", "--m", "1", "--out", l, "--graph-out", g}).code, kExitOk);
  const auto j = json::parse(slurp(l));
  EXPECT_EQ(j.at("labels"), json::parse("[13,4,0,15,8,11,1,12]"));
  EXPECT_TRUE(fs::exists(path("t1.interp.json")));
  EXPECT_EQ(oglab({"verify", g, l}).code, kExitOk);
}

TEST_F(Cli, LabelTheorem2HasDuplicate23) {
  const auto l = path("t2.json"), g = path("t2.graph.json");
  ASSERT_EQ(oglab({"label", "--theorem", "2", "--n", "2", "--m", "1", "--out", l, "--graph-out", g}).code, kExitOk);
  int count23 = 0;
  const auto doc = json::parse(slurp(l));
  for (const auto& x : doc.at("labels")) count23 += x.get<Label>() == 23;
  EXPECT_EQ(count23, 2);

  auto r = oglab({"verify", g, l});
  EXPECT_EQ(r.code, kExitNegative);
  const auto report = json::parse(r.out);
  EXPECT_EQ(report.at("ok"), false);
  EXPECT_EQ(report.at("violations")[0].at("kind"), "DuplicateVertexLabel");
}

TEST_F(Cli, LabelTheorem3Sidecar) {
  const auto l = path("t3.json");
  ASSERT_EQ(oglab({"label", "--theorem", "3", "--k", "2", "--m", "1", "--out", l}).code, kExitOk);
  const auto side = json::parse(slurp(path("t3.interp.json")));
  EXPECT_EQ(side.at("uncovered"), json::parse(R"x(["p(y1,1)"])x"));
}

TEST_F(Cli, LabelErrors) {
  EXPECT_EQ(oglab({"label", "--theorem", "4", "--n", "2", "--m", "1"}).code, kExitError);
  EXPECT_EQ(oglab({"label", "--theorem", "3", "--n", "2", "--m", "1"}).code, kExitError);
  EXPECT_EQ(oglab({"label", "--theorem", "1", "--n", "2", "--m", "0"}).code, kExitError);
}

TEST_F(Cli, VerifyErrors) {
  const auto l = path("l.json"), g = path("g.json"), other = path("o.json");
  oglab({"label", "--theorem", "1", "--n", "2", "--m", "1", "--out", l, "--graph-out", g});
  oglab({"gen", "--family", "ladder", "--n", "3", "--m", "1", "--out", other});
  EXPECT_EQ(oglab({"verify", other, l}).code, kExitError);

  const auto text = slurp(l);
  spit(path("trunc.json"), text.substr(0, text.size() / 2));
  EXPECT_EQ(oglab({"verify", g, path("trunc.json")}).code, kExitError);
  EXPECT_EQ(oglab({"verify", g, path("missing.json")}).code, kExitError);

  auto doc = json::parse(text);
  doc["labels"].erase(doc["labels"].size() - 1);
  spit(path("short.json"), doc.dump() + "\n");
  EXPECT_EQ(oglab({"verify", g, path("short.json")}).code, kExitError);
}

TEST_F(Cli, SearchExitCodes) {
  const auto c4 = path("c4.json"), c3 = path("c3.json"), big = path("big.json");
  oglab({"gen", "--family", "cycle", "--n", "4", "--out", c4});
  oglab({"gen", "--family", "cycle", "--n", "3", "--out", c3});
  oglab({"gen", "--family", "sub-ladder", "--n", "5", "--m", "3", "--out", big});

  auto r = oglab({"search", c4});
  ASSERT_EQ(r.code, kExitOk);
  const auto found = json::parse(r.out);
  EXPECT_EQ(found.at("outcome"), "found");
  const auto labels = found.at("labels").get<std::vector<Label>>();
  EXPECT_TRUE(verify_odd_graceful(graph_from_json(slurp(c4)), Labeling::from_values(labels)).ok);

  EXPECT_EQ(oglab({"search", c3}).code, kExitNegative);
  EXPECT_EQ(oglab({"search", c3, "--no-parity-prune", "--no-symmetry"}).code, kExitNegative);
  r = oglab({"search", big, "--max-nodes", "10"});
  EXPECT_EQ(r.code, kExitInconclusive);
  EXPECT_EQ(json::parse(r.out).at("reason"), "node-budget");

  spit(path("bad.json"), "{\"vertices\":");
  EXPECT_EQ(oglab({"search", path("bad.json")}).code, kExitError);
}

TEST_F(Cli, ExportDot) {
  const auto g4 = path("l.json");
  oglab({"gen", "--family", "plain-ladder", "--n", "2", "--out", g4});
  auto r = oglab({"export", g4, "--format", "dot"});
  ASSERT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  int nodes = 0, edges = 0;
  for (std::string line; std::getline(lines, line);) {
    if (line.find(" -- ") != std::string::npos) {
      ++edges;
    } else if (line.ends_with(";")) {
      ++nodes;
    }
  }
  EXPECT_EQ(nodes, 4);
  EXPECT_EQ(edges, 4);

  EXPECT_EQ(oglab({"export", g4, "--format", "svg"}).code, kExitError);
  EXPECT_EQ(oglab({"export", path("nope.json")}).code, kExitError);
}

TEST_F(Cli, ExportDotWithLabels) {
  const auto l = path("t1.json"), g = path("t1.graph.json");
  oglab({"label", "--theorem", "1", "--n", "2", "--m", "1", "--out", l, "--graph-out", g});
  const auto r = oglab({"export", g, l});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("u1 [xlabel=13];"), std::string::npos);
  std::multiset<int> edge_values;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) {
    const auto at = line.find("[label=");
    if (at != std::string::npos) edge_values.insert(std::stoi(line.substr(at + 7)));
  }
  EXPECT_EQ(edge_values, (std::multiset<int>{1, 3, 5, 7, 9, 11, 13, 15}));

  const auto j = json::parse(oglab({"export", g, l, "--format", "json"}).out);
  EXPECT_EQ(j.at("edge_labels").size(), 8u);
}

TEST(Grid, Parse) {
  const auto grid = parse_grid("theorem1:n=2..10,m=1..5;theorem3:k=1..2,m=1");
  ASSERT_EQ(grid.size(), 2u);
  EXPECT_EQ(grid[0].theorem, 1);
  EXPECT_EQ(grid[0].size.hi, 10);
  EXPECT_EQ(grid[1].m.lo, 1);
  EXPECT_EQ(grid[1].m.hi, 1);
  EXPECT_EQ(parse_grid("sub-ladder:n=3,m=2")[0].theorem, 2);
  EXPECT_THROW(parse_grid("theorem1:n=2..x,m=1"), FormatError);
  EXPECT_THROW(parse_grid("theorem9:n=2,m=1"), FormatError);
  EXPECT_THROW(parse_grid("theorem1:k=2,m=1"), FormatError);
  EXPECT_THROW(parse_grid("theorem1:n=1..3,m=1"), FormatError);
  EXPECT_THROW(parse_grid(""), FormatError);
}

TEST_F(Cli, SweepTheorem1Grid) {
  auto r = oglab({"sweep", "--grid", "theorem1:n=2..10,m=1..5", "--search-policy", "never"});
  ASSERT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, sweep_csv_header());
  int rows = 0, pass = 0;
  for (std::string line; std::getline(lines, line);) {
    ++rows;
    pass += line.find(",pass,") != std::string::npos;
  }
  EXPECT_EQ(rows, 45);
  // Printed formulas verify for n <= 4 only (15 of 45 rows).
  EXPECT_EQ(pass, 15);
}

TEST_F(Cli, SweepTheorem2Rows) {
  const auto rows = run_sweep(parse_grid("theorem2:n=2..4,m=1"), {.policy = SearchPolicy::Never});
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].verdict, "fail");
  EXPECT_EQ(rows[0].first_violation, "DuplicateVertexLabel(23)");
  EXPECT_EQ(rows[1].verdict, "pass");
  // n = 4: w_4 and v_6 share 2q-5.
  EXPECT_EQ(rows[2].verdict, "fail");
  EXPECT_EQ(rows[2].search_outcome, "skipped");
}

TEST_F(Cli, SweepTheorem3Rows) {
  const auto rows = run_sweep(parse_grid("theorem3:k=1..2,m=1"), {.policy = SearchPolicy::Never});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].verdict, "pass");
  EXPECT_EQ(rows[0].first_violation, "");
  EXPECT_EQ(rows[1].verdict, "partial(1)");
  EXPECT_EQ(rows[1].first_violation, "DuplicateEdgeLabel(21)");
  EXPECT_EQ(rows[1].p, 22u);
}

TEST_F(Cli, SweepExpectedTable) {
  const auto table = path("expected.csv");
  spit(table, "family,n_or_k,m,verdict\ntheorem3,1,1,pass\ntheorem3,2,1,partial\n");
  EXPECT_EQ(oglab({"sweep", "--grid", "theorem3:k=1..2,m=1", "--expected", table, "--search-policy", "never"}).code, kExitOk);
  spit(table, "family,n_or_k,m,verdict\ntheorem3,1,1,pass\ntheorem3,2,1,pass\n");
  auto r = oglab({"sweep", "--grid", "theorem3:k=1..2,m=1", "--expected", table, "--search-policy", "never"});
  EXPECT_EQ(r.code, kExitNegative);
  EXPECT_NE(r.err.find("mismatch"), std::string::npos);
  spit(table, "family,n_or_k,m,verdict\ntheorem3,1,1,pass\n");
  EXPECT_EQ(oglab({"sweep", "--grid", "theorem3:k=1..2,m=1", "--expected", table, "--search-policy", "never"}).code, kExitNegative);
  spit(table, "fam,n,m\n");
  EXPECT_EQ(oglab({"sweep", "--grid", "theorem3:k=1..2,m=1", "--expected", table}).code, kExitError);
}

TEST_F(Cli, SweepErrors) {
  EXPECT_EQ(oglab({"sweep", "--grid", "theorem1:n=2"}).code, kExitError);
  EXPECT_EQ(oglab({"sweep", "--grid", "theorem1:n=2,m=1", "--search-policy", "sometimes"}).code, kExitError);
}

TEST_F(Cli, SweepSearchOnFail) {
  const auto rows = run_sweep(parse_grid("theorem1:n=4..5,m=1"), {});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].search_outcome, "skipped");
  EXPECT_EQ(rows[0].search_nodes, 0u);
  EXPECT_EQ(rows[1].search_outcome, "found");
  EXPECT_GT(rows[1].search_nodes, 0u);
  EXPECT_EQ(rows[1].elapsed_ms, 0);
}

TEST_F(Cli, SweepDeterministicAcrossJobs) {
  const std::vector<std::string> base{"sweep", "--grid", "theorem1:n=2..6,m=1..2;theorem3:k=1..3,m=1..2", "--max-nodes", "20000"};
  auto a = oglab(base);
  auto args = base;
  args.insert(args.end(), {"--jobs", "4"});
  auto b = oglab(args);
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, oglab(base).out);
}

}  // namespace
}  // namespace oglab::cli
