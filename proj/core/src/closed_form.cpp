#include "oglab/closed_form.hpp"

#include <fmt/core.h>

namespace oglab {

namespace {

// Writes labels by tag into a labeling sized for `g`.
class TagWriter {
 public:
  explicit TagWriter(const Graph& g) : g_(g), labeling_(g.p()) {}

  void set(Role r, int i, Label value) { labeling_.set(g_.id_of(VertexTag::make(r, i)), value); }
  void set_pendant(Role r, int i, int j, Label value) {
    labeling_.set(g_.id_of(VertexTag::pendant_of(VertexTag::make(r, i), j)), value);
  }

  LabelerOutput finish(FormulaInterpretation interp) {
    for (VertexId v = 0; v < g_.p(); ++v) {
      if (!labeling_[v]) interp.uncovered_vertices.push_back(g_.tag(v));
    }
    return {std::move(labeling_), std::move(interp)};
  }

 private:
  const Graph& g_;
  Labeling labeling_;
};

bool odd(Label x) { return x % 2 != 0; }

}  // namespace

LabelerOutput label_theorem1(int n, int m, ClosedFormOptions opts) {
  const Graph g = build_theorem1(n, m);
  const Label N = n, M = m, q = static_cast<Label>(g.q());
  TagWriter out(g);
  FormulaInterpretation interp;
  interp.notes.push_back({"t1.v-pendant.i1", "formula 2j-1 is printed without an i-range; applied to the pendants of v1, "
                                             "the only v-pendants the odd-i formula (3 <= i <= n) leaves out"});
  if (opts.apply_repairs) {
    interp.notes.push_back({"t1.v-pendant.odd.repair",
                            "experimental: odd-i v-pendants use (2m+1)(i-1)+2j-1 in place of the printed "
                            "2m(i-1)+2j+1, whose edge labels collide with the even-i range once n >= 5"});
  }

  for (Label i = 1; i <= N; ++i) {
    out.set(Role::V, i, odd(i) ? i - 1 : 2 * q - i + 1);
    out.set(Role::U, i, odd(i) ? 2 * q - i - 2 * N + 2 : 2 * N + i - 2);
    for (Label j = 1; j <= M; ++j) {
      Label pv;
      if (opts.apply_repairs && odd(i)) {
        pv = (2 * M + 1) * (i - 1) + 2 * j - 1;
      } else if (i == 1) {
        pv = 2 * j - 1;
      } else if (odd(i)) {
        pv = 2 * M * (i - 1) + 2 * j + 1;
      } else {
        pv = 2 * q - (2 * M + 1) * i - 2 * j + 2 * M + 2;
      }
      out.set_pendant(Role::V, i, j, pv);

      Label pu = odd(i) ? 2 * q - (2 * M + 1) * i - 2 * j - (2 * M + 2) * N + 2 * M + 3
                        : 2 * q + (2 * M + 1) * i + 2 * j - (2 * M + 4) * N - 2 * M + 1;
      out.set_pendant(Role::U, i, j, pu);
    }
  }
  return out.finish(std::move(interp));
}

LabelerOutput label_theorem2(int n, int m, ClosedFormOptions opts) {
  const Graph g = build_theorem2(n, m);
  const Label N = n, M = m, q = static_cast<Label>(g.q());
  TagWriter out(g);
  FormulaInterpretation interp;
  interp.notes.push_back({"t2.rungs", "rungs exist only at odd path positions 2j-1; midpoint W(j) takes the "
                                      "w-formula at index j, 1 <= j <= n"});
  if (opts.apply_repairs) {
    interp.notes.push_back({"t2.repair", "no candidate repair is known; printed formulas applied unchanged"});
  }

  for (Label i = 1; i <= 2 * N - 1; ++i) {
    out.set(Role::V, i, odd(i) ? i - 1 : 2 * q - i + 1);
    out.set(Role::U, i, odd(i) ? i + 2 * N - 1 : 2 * q - i - 6 * N + 5);
    for (Label j = 1; j <= M; ++j) {
      out.set_pendant(Role::V, i, j,
                      odd(i) ? (2 * M + 1) * i + 2 * j - 2 * M - 2 : 2 * q - (2 * M + 1) * i - 2 * j + 2 * M + 2);
      out.set_pendant(Role::U, i, j,
                      odd(i) ? 2 * q + (2 * M + 1) * i + 2 * j - (4 * M + 10) * N + 6
                             : q - (2 * M + 1) * i - 2 * j - M * N + 2 * M + 2);
    }
  }
  for (Label i = 1; i <= N; ++i) {
    out.set(Role::W, i, 2 * q - 1 - 4 * N + 4 * (i - 1));
    for (Label j = 1; j <= M; ++j) out.set_pendant(Role::W, i, j, 2 * q + (2 * M + 4) * i + 2 * j - (6 * M + 6) * N);
  }
  return out.finish(std::move(interp));
}

LabelerOutput label_theorem3(int k, int m, ClosedFormOptions opts) {
  const Graph g = build_theorem3(k, m);
  const Label K = k, M = m, q = static_cast<Label>(g.q());
  const bool k_even = !odd(K);
  TagWriter out(g);
  FormulaInterpretation interp;
  interp.notes.push_back({"t3.f-is-phi", "the parity brackets use f for the labeling; read as the same function phi"});
  interp.notes.push_back({"t3.y-bracket", "second parity bracket is headed f(v_i^l) but v-pendants already have a "
                                          "formula; applied to interior y-pendants, matching the y-pendant edge ranges"});
  interp.notes.push_back({"t3.u1-pendant", "formula 2l+1 applied to the pendants of u1"});
  interp.notes.push_back({"t3.yk-pendant", "i-free y-pendant formula applied to the pendants of y_k"});
  if (opts.apply_repairs) {
    interp.notes.push_back({"t3.y-range.repair", "experimental: interior y-pendant parity branches extended to "
                                                 "cover every index 1 <= i <= k-1"});
  }

  for (Label i = 1; i <= K + 1; ++i) out.set(Role::U, i, (4 * M + 4) * (i - 1));
  for (Label i = 1; i <= K; ++i) {
    out.set(Role::W, i, (4 * M + 4) * i - 2 * M - 2);
    out.set(Role::V, i, 2 * q - (2 * M + 4) * i + 2 * M + 3);
    out.set(Role::Z, i, 2 * q - (2 * M + 4) * i + 1);
    out.set(Role::Y, i, (4 * M + 4) * K - (4 * M + 4) * i + 4 * M + 3);
  }

  for (Label l = 1; l <= M; ++l) {
    for (Label i = 1; i <= K; ++i) {
      out.set_pendant(Role::W, i, l, 2 * q - (2 * M + 4) * i - 2 * l + 2 * M + 3);
      out.set_pendant(Role::V, i, l, (4 * M + 4) * i + 2 * l - 4 * M - 4);
      out.set_pendant(Role::Z, i, l, (4 * M + 4) * i + 2 * l - 2 * M - 2);
    }
    out.set_pendant(Role::U, 1, l, 2 * l + 1);
    out.set_pendant(Role::U, K + 1, l, 2 * q - 2 * l - (2 * M + 4) * (K + 1) + 2 * M + 5);
    out.set_pendant(Role::Y, K, l, 2 * q - 2 * l - (2 * M + 4) * K - 2 * M - 2);

    // Interior u-pendants, 2 <= i <= k. The "-m-1" branch goes to i with the
    // same parity as k, the "-m+1" branch to the other parity.
    for (Label i = 2; i <= K; ++i) {
      const bool same_parity = odd(i) == odd(K);
      const Label tail = same_parity ? -M - 1 : -M + 1;
      out.set_pendant(Role::U, i, l, q + (2 * M + 2) * i - 2 * l - (3 * M + 4) * K + tail);
    }

    // Interior y-pendants. Printed ranges: k even: i even 2..k-2 (+2), i odd
    // 2..k-1 (+0); k odd: i even 2..k-1 (+0), i odd 2..k-3 (+2).
    const Label lo = opts.apply_repairs ? 1 : 2;
    for (Label i = lo; i <= K - 1; ++i) {
      const Label base = q - (2 * M + 2) * i + (K + 1) * M - 2 * l;
      bool covered;
      Label offset;
      if (k_even) {
        covered = odd(i) ? i <= K - 1 : i <= K - 2;
        offset = odd(i) ? 0 : 2;
      } else {
        covered = odd(i) ? i <= K - 3 : i <= K - 1;
        offset = odd(i) ? 2 : 0;
      }
      if (covered || opts.apply_repairs) out.set_pendant(Role::Y, i, l, base + offset);
    }
  }
  return out.finish(std::move(interp));
}

Graph build_theorem_graph(const TheoremInstance& inst) {
  switch (inst.theorem) {
    case 1: return build_theorem1(inst.size, inst.m);
    case 2: return build_theorem2(inst.size, inst.m);
    case 3: return build_theorem3(inst.size, inst.m);
    default: throw DomainError(fmt::format("unknown theorem {}", inst.theorem));
  }
}

LabelerOutput label_theorem(const TheoremInstance& inst, ClosedFormOptions opts) {
  switch (inst.theorem) {
    case 1: return label_theorem1(inst.size, inst.m, opts);
    case 2: return label_theorem2(inst.size, inst.m, opts);
    case 3: return label_theorem3(inst.size, inst.m, opts);
    default: throw DomainError(fmt::format("unknown theorem {}", inst.theorem));
  }
}

}  // namespace oglab
