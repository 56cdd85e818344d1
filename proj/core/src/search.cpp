#include "oglab/search.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace oglab {

std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::ExhaustedNone: return "none";
    case SearchStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string_view reason_name(BudgetReason r) { return r == BudgetReason::NodeBudget ? "node-budget" : "time-budget"; }

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kTimeCheckInterval = 4096;

/// BFS from the highest-degree unvisited vertex of each component.
std::vector<VertexId> placement_order(const Graph& g) {
  std::vector<VertexId> order;
  order.reserve(g.p());
  std::vector<bool> seen(g.p(), false);
  while (order.size() < g.p()) {
    VertexId start = 0;
    bool have = false;
    for (VertexId v = 0; v < g.p(); ++v) {
      if (!seen[v] && (!have || g.degree(v) > g.degree(start))) {
        start = v;
        have = true;
      }
    }
    std::queue<VertexId> frontier;
    frontier.push(start);
    seen[start] = true;
    while (!frontier.empty()) {
      auto x = frontier.front();
      frontier.pop();
      order.push_back(x);
      for (auto y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          frontier.push(y);
        }
      }
    }
  }
  return order;
}

class Searcher {
 public:
  Searcher(const Graph& g, const SearchConfig& cfg) : g_(g), cfg_(cfg) {
    const Label q = static_cast<Label>(g.q());
    top_ = q == 0 ? 0 : 2 * q - 1;
    if (cfg.max_label) top_ = std::min(top_, *cfg.max_label);
    order_ = placement_order(g);
    const auto p = g.p();
    position_.assign(p, 0);
    for (std::size_t t = 0; t < p; ++t) position_[order_[t]] = t;

    earlier_.assign(p, {});
    component_start_.assign(p, true);
    max_neighbor_pos_.assign(p, 0);
    for (std::size_t t = 0; t < p; ++t) {
      auto v = order_[t];
      for (auto y : g.neighbors(v)) {
        if (position_[y] < t) earlier_[t].push_back(position_[y]);
        max_neighbor_pos_[t] = std::max(max_neighbor_pos_[t], position_[y]);
      }
      component_start_[t] = earlier_[t].empty();
    }
    // Position of the component root for each placed position.
    root_of_.assign(p, 0);
    for (std::size_t t = 0; t < p; ++t) root_of_[t] = component_start_[t] ? t : root_of_[earlier_[t].front()];
    for (const auto& [a, b] : g.edges()) {
      latest_edge_start_ = std::max<std::ptrdiff_t>(latest_edge_start_,
                                                    static_cast<std::ptrdiff_t>(std::min(position_[a], position_[b])));
    }

    if (cfg.use_parity_prune) {
      if (auto colours = two_coloring(g)) {
        side_.resize(p);
        for (std::size_t t = 0; t < p; ++t) side_[t] = (*colours)[order_[t]];
      } else {
        non_bipartite_ = true;
      }
    }
    symmetry_ = cfg.use_complement_symmetry && g.q() > 0 && component_count(g) == 1;

    used_vertex_.assign(static_cast<std::size_t>(top_) + 1, false);
    used_edge_.assign(std::max<std::size_t>(2 * g.q(), 1), false);
    assigned_.assign(p, 0);
    unused_odd_ = g.q();
    remaining_edges_ = g.q();
    start_ = Clock::now();
  }

  SearchOutcome run() {
    SearchOutcome out;
    bool found = false;
    if (non_bipartite_) {
      // Odd edge labels force a proper parity 2-colouring; nothing to explore.
      ++stats_.nodes_expanded;
      ++stats_.backtracks;
    } else {
      found = dfs(0);
    }
    stats_.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_);
    out.stats = stats_;
    if (found) {
      Labeling l(g_.p());
      for (std::size_t t = 0; t < g_.p(); ++t) l.set(order_[t], assigned_[t]);
      if (!verify_odd_graceful(g_, l).ok) throw std::logic_error("search produced a labeling that fails verification");
      out.status = SearchStatus::Found;
      out.labeling = std::move(l);
    } else if (aborted_) {
      out.status = SearchStatus::Inconclusive;
      out.reason = abort_reason_;
    } else {
      out.status = SearchStatus::ExhaustedNone;
    }
    return out;
  }

 private:
  bool out_of_budget() {
    if (cfg_.node_budget && stats_.nodes_expanded >= *cfg_.node_budget) {
      abort_reason_ = BudgetReason::NodeBudget;
      return true;
    }
    if (cfg_.time_budget && stats_.nodes_expanded % kTimeCheckInterval == 0 &&
        Clock::now() - start_ >= *cfg_.time_budget) {
      abort_reason_ = BudgetReason::TimeBudget;
      return true;
    }
    return false;
  }

  // Called after placing depth vertices.
  bool feasible(std::size_t depth) const {
    if (unused_odd_ < remaining_edges_) return false;
    if (!cfg_.use_reachability_prune || remaining_edges_ == 0) return true;

    Label largest = static_cast<Label>(2 * g_.q()) - 1;
    while (largest > 0 && used_edge_[largest]) largest -= 2;
    if (largest <= 0) return true;
    for (std::size_t t = 0; t < depth; ++t) {
      if (max_neighbor_pos_[t] < depth) continue;
      const Label x = assigned_[t];
      if (x + largest <= top_ && !used_vertex_[x + largest]) return true;
      if (x - largest >= 0 && !used_vertex_[x - largest]) return true;
    }
    if (latest_edge_start_ >= static_cast<std::ptrdiff_t>(depth)) {
      for (Label y = 0; y + largest <= top_; ++y) {
        if (!used_vertex_[y] && !used_vertex_[y + largest]) return true;
      }
    }
    return false;
  }

  bool dfs(std::size_t depth) {
    if (out_of_budget()) {
      aborted_ = true;
      return false;
    }
    ++stats_.nodes_expanded;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (depth == g_.p()) return true;

    const auto& back = earlier_[depth];
    Label first = 0, step = 1;
    Label last = top_;
    if (depth == 0 && symmetry_) last = std::min<Label>(last, static_cast<Label>(g_.q()) - 1);
    if (!side_.empty() && !component_start_[depth]) {
      const auto root = root_of_[depth];
      const Label parity = (assigned_[root] + (side_[depth] != side_[root] ? 1 : 0)) % 2;
      first = parity;
      step = 2;
    }

    std::vector<Label> fresh;
    fresh.reserve(back.size());
    for (Label x = first; x <= last; x += step) {
      if (used_vertex_[x]) continue;
      fresh.clear();
      bool ok = true;
      for (auto t : back) {
        const Label d = x > assigned_[t] ? x - assigned_[t] : assigned_[t] - x;
        if (d % 2 == 0 || d > 2 * static_cast<Label>(g_.q()) - 1 || used_edge_[d]) {
          ok = false;
          break;
        }
        used_edge_[d] = true;
        fresh.push_back(d);
      }
      if (ok) {
        used_vertex_[x] = true;
        assigned_[depth] = x;
        remaining_edges_ -= back.size();
        unused_odd_ -= back.size();
        if (feasible(depth + 1) && dfs(depth + 1)) return true;
        remaining_edges_ += back.size();
        unused_odd_ += back.size();
        used_vertex_[x] = false;
      }
      for (auto d : fresh) used_edge_[d] = false;
      if (aborted_) return false;
    }
    ++stats_.backtracks;
    return false;
  }

  const Graph& g_;
  const SearchConfig& cfg_;
  Label top_ = 0;
  std::vector<VertexId> order_;
  std::vector<std::size_t> position_;
  std::vector<std::vector<std::size_t>> earlier_;
  std::vector<bool> component_start_;
  std::vector<std::size_t> root_of_;
  std::vector<std::size_t> max_neighbor_pos_;
  std::ptrdiff_t latest_edge_start_ = -1;
  std::vector<int> side_;
  bool non_bipartite_ = false;
  bool symmetry_ = false;

  std::vector<bool> used_vertex_;
  std::vector<bool> used_edge_;
  std::vector<Label> assigned_;
  std::size_t remaining_edges_ = 0;
  std::size_t unused_odd_ = 0;

  SearchStats stats_;
  bool aborted_ = false;
  BudgetReason abort_reason_ = BudgetReason::NodeBudget;
  Clock::time_point start_;
};

}  // namespace

SearchOutcome find_odd_graceful(const Graph& g, const SearchConfig& cfg) {
  if (g.p() == 0) throw DomainError("cannot search an empty graph");
  if (cfg.max_label && *cfg.max_label < 0) throw DomainError("max_label must be non-negative");
  return Searcher(g, cfg).run();
}

SearchOutcome exhaustive_oracle(const Graph& g) {
  if (g.p() == 0) throw DomainError("cannot search an empty graph");
  if (g.q() > kExhaustiveMaxEdges) throw DomainError("exhaustive oracle is limited to graphs with q <= 6");
  const auto start = Clock::now();
  const Label q = static_cast<Label>(g.q());
  const Label top = q == 0 ? 0 : 2 * q - 1;

  SearchOutcome out;
  Labeling current(g.p());
  std::vector<bool> used(static_cast<std::size_t>(top) + 1, false);
  bool found = false;

  // Plain recursion over vertex ids; every complete injection goes to the verifier.
  auto enumerate = [&](auto&& self, VertexId v) -> void {
    ++out.stats.nodes_expanded;
    out.stats.max_depth = std::max<std::size_t>(out.stats.max_depth, v);
    if (v == g.p()) {
      if (verify_odd_graceful(g, current).ok) found = true;
      return;
    }
    for (Label x = 0; x <= top && !found; ++x) {
      if (used[x]) continue;
      used[x] = true;
      current.set(v, x);
      self(self, v + 1);
      used[x] = false;
    }
    if (!found) {
      current.clear(v);
      ++out.stats.backtracks;
    }
  };
  enumerate(enumerate, 0);

  out.stats.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  if (found) {
    out.status = SearchStatus::Found;
    out.labeling = current;
  } else {
    out.status = SearchStatus::ExhaustedNone;
  }
  return out;
}

}  // namespace oglab
