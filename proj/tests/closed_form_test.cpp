#include <gtest/gtest.h>

#include "oglab/closed_form.hpp"
#include "oglab/labeling.hpp"

namespace oglab {
namespace {

Label at(const Graph& g, const Labeling& l, const std::string& tag) { return l[g.id_of(VertexTag::parse(tag))].value(); }

void expect_labels(const Graph& g, const Labeling& l, const std::vector<std::pair<std::string, Label>>& expected) {
  for (const auto& [tag, value] : expected) EXPECT_EQ(at(g, l, tag), value) << tag;
}

// Hand-evaluated values of the printed formulas.

TEST(Theorem1, N2M1) {
  const auto g = build_theorem1(2, 1);
  const auto out = label_theorem1(2, 1);
  expect_labels(g, out.labeling,
                {{"v1", 0}, {"v2", 15}, {"u1", 13}, {"u2", 4}, {"p(v1,1)", 1}, {"p(v2,1)", 12}, {"p(u1,1)", 8}, {"p(u2,1)", 11}});
  EXPECT_TRUE(verify_odd_graceful(g, out.labeling).ok);
  EXPECT_TRUE(out.interpretation.uncovered_vertices.empty());
}

TEST(Theorem1, N3M1) {
  const auto g = build_theorem1(3, 1);
  const auto out = label_theorem1(3, 1);
  expect_labels(g, out.labeling,
                {{"v1", 0}, {"v2", 25}, {"v3", 2}, {"u1", 21}, {"u2", 6}, {"u3", 19}, {"p(v1,1)", 1}, {"p(v2,1)", 22},
                 {"p(v3,1)", 7}, {"p(u1,1)", 14}, {"p(u2,1)", 15}, {"p(u3,1)", 8}});
  EXPECT_TRUE(verify_odd_graceful(g, out.labeling).ok);
}

TEST(Theorem1, N2M2) {
  const auto g = build_theorem1(2, 2);
  const auto out = label_theorem1(2, 2);
  expect_labels(g, out.labeling,
                {{"v1", 0}, {"v2", 23}, {"u1", 21}, {"u2", 4}, {"p(v1,1)", 1}, {"p(v1,2)", 3}, {"p(v2,1)", 18},
                 {"p(v2,2)", 16}, {"p(u1,1)", 12}, {"p(u1,2)", 10}, {"p(u2,1)", 17}, {"p(u2,2)", 19}});
  EXPECT_TRUE(verify_odd_graceful(g, out.labeling).ok);
}

TEST(Theorem1, PrintedFormulasHoldUpToN4) {
  for (int n = 2; n <= 4; ++n) {
    for (int m = 1; m <= 5; ++m) {
      const auto g = build_theorem1(n, m);
      const auto l = label_theorem1(n, m).labeling;
      const auto r = verify_odd_graceful(g, l);
      EXPECT_TRUE(r.ok) << n << "," << m;
      EXPECT_EQ(max_label(l), static_cast<Label>(2 * g.q() - 1));
    }
  }
}

// From n = 5 the odd-i v-pendant edges (2m(i-1)+2j-i+2) collide with the
// even-i ones (2mi+2j-2m-1): at m = 1, i = 4 and i = 5 both give 7.
TEST(Theorem1, PrintedFormulasFailFromN5) {
  for (int n = 5; n <= 10; ++n) {
    for (int m = 1; m <= 5; ++m) {
      const auto g = build_theorem1(n, m);
      const auto r = verify_odd_graceful(g, label_theorem1(n, m).labeling);
      EXPECT_FALSE(r.ok) << n << "," << m;
      EXPECT_EQ(r.count<DuplicateVertexLabel>(), 0u);
      EXPECT_GT(r.count<DuplicateEdgeLabel>(), 0u);
    }
  }
  const auto g = build_theorem1(5, 1);
  const auto r = verify_odd_graceful(g, label_theorem1(5, 1).labeling);
  EXPECT_EQ(describe(r.violations.front(), g), "DuplicateEdgeLabel(v4-p(v4,1),v5-p(v5,1),7)");
}

TEST(Theorem1, CandidateRepairVerifiesEverywhere) {
  for (int n = 2; n <= 16; ++n) {
    for (int m = 1; m <= 6; ++m) {
      const auto g = build_theorem1(n, m);
      const auto out = label_theorem1(n, m, {.apply_repairs = true});
      EXPECT_TRUE(verify_odd_graceful(g, out.labeling).ok) << n << "," << m;
      ASSERT_EQ(out.interpretation.notes.size(), 2u);
      EXPECT_EQ(out.interpretation.notes[1].formula_id, "t1.v-pendant.odd.repair");
    }
  }
}

TEST(Theorem2, N3M1) {
  const auto g = build_theorem2(3, 1);
  const auto out = label_theorem2(3, 1);
  expect_labels(g, out.labeling,
                {{"v1", 0}, {"v2", 53}, {"v3", 2}, {"v4", 51}, {"v5", 4}, {"u1", 6}, {"u2", 39}, {"u3", 8}, {"u4", 37},
                 {"u5", 10}, {"w1", 41}, {"w2", 45}, {"w3", 49}, {"p(v1,1)", 1}, {"p(v2,1)", 50}, {"p(v3,1)", 7},
                 {"p(v4,1)", 44}, {"p(v5,1)", 13}, {"p(u1,1)", 23}, {"p(u2,1)", 20}, {"p(u3,1)", 29}, {"p(u4,1)", 14},
                 {"p(u5,1)", 35}, {"p(w1,1)", 26}, {"p(w2,1)", 32}, {"p(w3,1)", 38}});
  EXPECT_TRUE(verify_odd_graceful(g, out.labeling).ok);
}

TEST(Theorem2, N3AllM) {
  for (int m = 1; m <= 5; ++m) EXPECT_TRUE(verify_odd_graceful(build_theorem2(3, m), label_theorem2(3, m).labeling).ok);
}

TEST(Theorem2, N2CollisionOnU2W1) {
  for (int m = 1; m <= 5; ++m) {
    const auto g = build_theorem2(2, m);
    const auto l = label_theorem2(2, m).labeling;
    const Label expected = 2 * static_cast<Label>(g.q()) - 9;
    EXPECT_EQ(at(g, l, "u2"), expected);
    EXPECT_EQ(at(g, l, "w1"), expected);
    const auto r = verify_odd_graceful(g, l);
    ASSERT_EQ(r.count<DuplicateVertexLabel>(), 1u);
    EXPECT_EQ(r.violations.front(), Violation(DuplicateVertexLabel{g.id_of(VertexTag::parse("u2")),
                                                                   g.id_of(VertexTag::parse("w1")), expected}));
    // u1 neighbours both u2 and w1, so the collision repeats as an edge label.
    EXPECT_GE(r.count<DuplicateEdgeLabel>(), 1u);
  }
  EXPECT_EQ(at(build_theorem2(2, 1), label_theorem2(2, 1).labeling, "w1"), 23);
}

// phi(w_n) = 2q-5 = phi(v_6) whenever v_6 exists, i.e. n >= 4.
TEST(Theorem2, PrintedFormulasFailFromN4) {
  for (int n = 4; n <= 10; ++n) {
    for (int m = 1; m <= 5; ++m) {
      const auto g = build_theorem2(n, m);
      const auto l = label_theorem2(n, m).labeling;
      const Label value = 2 * static_cast<Label>(g.q()) - 5;
      EXPECT_EQ(at(g, l, "v6"), value);
      EXPECT_EQ(at(g, l, "w" + std::to_string(n)), value);
      const auto r = verify_odd_graceful(g, l);
      EXPECT_FALSE(r.ok);
      EXPECT_GE(r.count<DuplicateVertexLabel>(), 1u);
    }
  }
}

TEST(Theorem2, RepairFlagOnlyAddsNote) {
  const auto plain = label_theorem2(4, 2);
  const auto repaired = label_theorem2(4, 2, {.apply_repairs = true});
  EXPECT_EQ(plain.labeling, repaired.labeling);
  EXPECT_EQ(repaired.interpretation.notes.size(), plain.interpretation.notes.size() + 1);
}

TEST(Theorem3, K1M1) {
  const auto g = build_theorem3(1, 1);
  const auto out = label_theorem3(1, 1);
  expect_labels(g, out.labeling,
                {{"u1", 0}, {"u2", 8}, {"w1", 4}, {"v1", 23}, {"z1", 19}, {"y1", 7}, {"p(u1,1)", 3}, {"p(u2,1)", 17},
                 {"p(w1,1)", 21}, {"p(v1,1)", 2}, {"p(z1,1)", 6}, {"p(y1,1)", 12}});
  EXPECT_TRUE(verify_odd_graceful(g, out.labeling).ok);
}

TEST(Theorem3, K1M2) {
  const auto g = build_theorem3(1, 2);
  const auto out = label_theorem3(1, 2);
  expect_labels(g, out.labeling,
                {{"u1", 0}, {"u2", 12}, {"w1", 6}, {"v1", 35}, {"z1", 29}, {"y1", 11}, {"p(u1,1)", 3}, {"p(u1,2)", 5},
                 {"p(u2,1)", 27}, {"p(u2,2)", 25}, {"p(w1,1)", 33}, {"p(w1,2)", 31}, {"p(v1,1)", 2}, {"p(v1,2)", 4},
                 {"p(z1,1)", 8}, {"p(z1,2)", 10}, {"p(y1,1)", 20}, {"p(y1,2)", 18}});
  EXPECT_TRUE(verify_odd_graceful(g, out.labeling).ok);
}

TEST(Theorem3, K1AllM) {
  for (int m = 1; m <= 5; ++m) {
    const auto g = build_theorem3(1, m);
    const auto l = label_theorem3(1, m).labeling;
    EXPECT_TRUE(verify_odd_graceful(g, l).ok) << m;
    EXPECT_EQ(max_label(l), static_cast<Label>(2 * g.q() - 1));
  }
}

TEST(Theorem3, K2M1UncoveredAndCollision) {
  const auto g = build_theorem3(2, 1);
  const auto out = label_theorem3(2, 1);
  ASSERT_EQ(out.interpretation.uncovered_vertices.size(), 1u);
  EXPECT_EQ(out.interpretation.uncovered_vertices[0].str(), "p(y1,1)");
  EXPECT_FALSE(out.labeling[g.id_of(VertexTag::parse("p(y1,1)"))].has_value());

  const auto r = verify_odd_graceful(g, out.labeling);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.violations.front(), Violation(MissingVertexLabel{g.id_of(VertexTag::parse("p(y1,1)"))}));
  ASSERT_EQ(r.count<DuplicateEdgeLabel>(), 1u);
  for (const auto& v : r.violations) {
    if (const auto* d = std::get_if<DuplicateEdgeLabel>(&v)) {
      EXPECT_EQ(d->label, 21);
      EXPECT_EQ(describe(v, g), "DuplicateEdgeLabel(y2-p(y2,1),z2-p(z2,1),21)");
    }
  }
}

TEST(Theorem3, UncoveredYPendantsFollowPrintedRanges) {
  // k even leaves only y1; k odd also leaves y_{k-2} (odd, above k-3).
  auto uncovered_parents = [](int k) {
    std::vector<std::string> out;
    for (const auto& t : label_theorem3(k, 1).interpretation.uncovered_vertices) out.push_back(t.parent().str());
    return out;
  };
  EXPECT_TRUE(uncovered_parents(1).empty());
  EXPECT_EQ(uncovered_parents(2), std::vector<std::string>{"y1"});
  EXPECT_EQ(uncovered_parents(3), std::vector<std::string>{"y1"});
  EXPECT_EQ(uncovered_parents(4), std::vector<std::string>{"y1"});
  EXPECT_EQ(uncovered_parents(5), (std::vector<std::string>{"y1", "y3"}));
  EXPECT_EQ(uncovered_parents(7), (std::vector<std::string>{"y1", "y5"}));
  EXPECT_EQ(label_theorem3(3, 3).interpretation.uncovered_vertices.size(), 3u);
}

TEST(Theorem3, RepairCoversYButStillFails) {
  for (int k = 2; k <= 6; ++k) {
    const auto g = build_theorem3(k, 1);
    const auto out = label_theorem3(k, 1, {.apply_repairs = true});
    EXPECT_TRUE(out.interpretation.uncovered_vertices.empty()) << k;
    EXPECT_TRUE(out.labeling.is_total());
    EXPECT_FALSE(verify_odd_graceful(g, out.labeling).ok) << k;
  }
}

TEST(ClosedForm, DeterministicAndDispatch) {
  EXPECT_EQ(label_theorem({3, 4, 2}).labeling, label_theorem3(4, 2).labeling);
  EXPECT_EQ(label_theorem({1, 6, 3}).labeling, label_theorem1(6, 3).labeling);
  EXPECT_EQ(build_theorem_graph({2, 3, 1}), build_theorem2(3, 1));
  EXPECT_THROW(label_theorem({4, 2, 1}), DomainError);
  EXPECT_THROW(label_theorem1(1, 1), DomainError);
  EXPECT_THROW(label_theorem3(2, 0), DomainError);
}

}  // namespace
}  // namespace oglab
