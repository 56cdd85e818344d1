#include "oglab/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>

#include <fmt/core.h>

namespace oglab {

namespace {

Role role_from_letter(char c) {
  switch (c) {
    case 'u': return Role::U;
    case 'v': return Role::V;
    case 'w': return Role::W;
    case 'y': return Role::Y;
    case 'z': return Role::Z;
    case 'g': return Role::G;
    default: throw DomainError(fmt::format("unknown vertex role '{}'", c));
  }
}

int parse_positive(const std::string& s, const std::string& context) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError(fmt::format("malformed vertex tag '{}'", context));
  }
  int value = std::stoi(s);
  if (value < 1) throw DomainError(fmt::format("vertex tag index must be >= 1 in '{}'", context));
  return value;
}

VertexTag parse_plain(const std::string& s, const std::string& context) {
  if (s.size() < 2) throw DomainError(fmt::format("malformed vertex tag '{}'", context));
  return VertexTag::make(role_from_letter(s[0]), parse_positive(s.substr(1), context));
}

using Key = std::tuple<int, int, int>;

Key plain_key(const VertexTag& t) { return {static_cast<int>(t.role), t.index, 0}; }

}  // namespace

char role_letter(Role r) {
  switch (r) {
    case Role::U: return 'u';
    case Role::V: return 'v';
    case Role::W: return 'w';
    case Role::Y: return 'y';
    case Role::Z: return 'z';
    case Role::G: return 'g';
  }
  return '?';
}

VertexTag VertexTag::pendant_of(const VertexTag& parent, int j) {
  if (parent.is_pendant()) throw DomainError("a pendant cannot carry pendants");
  if (j < 1) throw DomainError("pendant index must be >= 1");
  return {parent.role, parent.index, j};
}

std::string VertexTag::str() const {
  std::string base = fmt::format("{}{}", role_letter(role), index);
  if (!is_pendant()) return base;
  return fmt::format("p({},{})", base, pendant);
}

VertexTag VertexTag::parse(const std::string& text) {
  if (text.size() > 3 && text.starts_with("p(") && text.back() == ')') {
    auto inner = text.substr(2, text.size() - 3);
    auto comma = inner.find(',');
    if (comma == std::string::npos) throw DomainError(fmt::format("malformed pendant tag '{}'", text));
    auto parent = parse_plain(inner.substr(0, comma), text);
    return pendant_of(parent, parse_positive(inner.substr(comma + 1), text));
  }
  return parse_plain(text, text);
}

std::string family_kind(const FamilySpec& f) {
  struct Visitor {
    std::string operator()(const LadderFamily&) const { return "ladder"; }
    std::string operator()(const SubdividedLadderFamily&) const { return "sub-ladder"; }
    std::string operator()(const SubdividedSnakeFamily&) const { return "sub-tri-snake"; }
    std::string operator()(const GenericFamily&) const { return "generic"; }
  };
  return std::visit(Visitor{}, f);
}

Graph::Graph(std::vector<VertexTag> tags, std::vector<Edge> edges, std::optional<FamilySpec> family)
    : family_(std::move(family)) {
  const auto n = tags.size();

  // Canonical order: plain vertices by (role, index), then pendants by
  // (parent position, pendant index).
  std::vector<std::size_t> plain, pendants;
  for (std::size_t i = 0; i < n; ++i) (tags[i].is_pendant() ? pendants : plain).push_back(i);
  std::sort(plain.begin(), plain.end(), [&](auto a, auto b) { return plain_key(tags[a]) < plain_key(tags[b]); });

  std::map<Key, std::size_t> plain_rank;
  for (std::size_t r = 0; r < plain.size(); ++r) {
    auto [it, inserted] = plain_rank.emplace(plain_key(tags[plain[r]]), r);
    if (!inserted) throw DomainError(fmt::format("duplicate vertex tag '{}'", tags[plain[r]].str()));
  }
  auto parent_rank = [&](const VertexTag& t) {
    auto it = plain_rank.find(plain_key(t.parent()));
    if (it == plain_rank.end()) throw DomainError(fmt::format("pendant '{}' has no parent vertex", t.str()));
    return it->second;
  };
  std::vector<std::pair<std::size_t, int>> pendant_keys(n);
  for (auto i : pendants) pendant_keys[i] = {parent_rank(tags[i]), tags[i].pendant};
  std::sort(pendants.begin(), pendants.end(), [&](auto a, auto b) { return pendant_keys[a] < pendant_keys[b]; });
  for (std::size_t r = 1; r < pendants.size(); ++r) {
    if (pendant_keys[pendants[r]] == pendant_keys[pendants[r - 1]]) {
      throw DomainError(fmt::format("duplicate vertex tag '{}'", tags[pendants[r]].str()));
    }
  }

  std::vector<VertexId> new_id(n);
  tags_.reserve(n);
  for (auto i : plain) {
    new_id[i] = static_cast<VertexId>(tags_.size());
    tags_.push_back(tags[i]);
  }
  for (auto i : pendants) {
    new_id[i] = static_cast<VertexId>(tags_.size());
    tags_.push_back(tags[i]);
  }

  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw DomainError("edge endpoint is not a declared vertex");
    if (a == b) throw DomainError(fmt::format("self-loop at '{}'", tags[a].str()));
    auto x = new_id[a], y = new_id[b];
    edges_.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw DomainError(
        fmt::format("duplicate edge {}-{}", tags_[dup->first].str(), tags_[dup->second].str()));
  }

  adjacency_.assign(n, {});
  for (auto [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::optional<VertexId> Graph::find(const VertexTag& t) const {
  auto it = std::find(tags_.begin(), tags_.end(), t);
  if (it == tags_.end()) return std::nullopt;
  return static_cast<VertexId>(it - tags_.begin());
}

VertexId Graph::id_of(const VertexTag& t) const {
  auto id = find(t);
  if (!id) throw std::out_of_range(fmt::format("no vertex tagged '{}'", t.str()));
  return *id;
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  const auto& adj = adjacency_.at(a);
  return std::binary_search(adj.begin(), adj.end(), b);
}

Graph Graph::with_family(std::optional<FamilySpec> family) const {
  Graph g = *this;
  g.family_ = std::move(family);
  return g;
}

// ---------------------------------------------------------------------------

namespace {

// Incremental construction by tag.
class TaggedBuilder {
 public:
  VertexId add(VertexTag t) {
    tags_.push_back(t);
    return static_cast<VertexId>(tags_.size() - 1);
  }
  void connect(VertexId a, VertexId b) { edges_.emplace_back(a, b); }
  void attach_pendants(int m) {
    const auto base = tags_.size();
    for (std::size_t v = 0; v < base; ++v) {
      for (int j = 1; j <= m; ++j) connect(static_cast<VertexId>(v), add(VertexTag::pendant_of(tags_[v], j)));
    }
  }
  Graph build(std::optional<FamilySpec> family) { return Graph(std::move(tags_), std::move(edges_), std::move(family)); }

 private:
  std::vector<VertexTag> tags_;
  std::vector<Edge> edges_;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path_graph requires n >= 1");
  TaggedBuilder b;
  for (int i = 1; i <= n; ++i) b.add(VertexTag::make(Role::V, i));
  for (int i = 0; i + 1 < n; ++i) b.connect(i, i + 1);
  return b.build(GenericFamily{fmt::format("path({})", n)});
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle_graph requires n >= 3");
  TaggedBuilder b;
  for (int i = 1; i <= n; ++i) b.add(VertexTag::make(Role::V, i));
  for (int i = 0; i < n; ++i) b.connect(i, (i + 1) % n);
  return b.build(GenericFamily{fmt::format("cycle({})", n)});
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  require(g1.p() > 0 && g2.p() > 0, "cartesian_product requires non-empty graphs");
  const auto p2 = g2.p();
  auto cell = [&](std::size_t x, std::size_t y) { return static_cast<VertexId>(x * p2 + y); };
  TaggedBuilder b;
  for (std::size_t x = 0; x < g1.p(); ++x) {
    for (std::size_t y = 0; y < p2; ++y) b.add(VertexTag::make(Role::G, static_cast<int>(cell(x, y)) + 1));
  }
  for (std::size_t x = 0; x < g1.p(); ++x) {
    for (auto [y1, y2] : g2.edges()) b.connect(cell(x, y1), cell(x, y2));
  }
  for (std::size_t y = 0; y < p2; ++y) {
    for (auto [x1, x2] : g1.edges()) b.connect(cell(x1, y), cell(x2, y));
  }
  return b.build(GenericFamily{"product"});
}

Graph ladder(int n) {
  require(n >= 2, "ladder requires n >= 2");
  TaggedBuilder b;
  std::vector<VertexId> u(n + 1), v(n + 1);
  for (int i = 1; i <= n; ++i) u[i] = b.add(VertexTag::make(Role::U, i));
  for (int i = 1; i <= n; ++i) v[i] = b.add(VertexTag::make(Role::V, i));
  for (int i = 1; i < n; ++i) {
    b.connect(u[i], u[i + 1]);
    b.connect(v[i], v[i + 1]);
  }
  for (int i = 1; i <= n; ++i) b.connect(u[i], v[i]);
  return b.build(GenericFamily{fmt::format("ladder({})", n)});
}

Graph corona_pendants(const Graph& g, int m) {
  require(m >= 0, "pendant count must be >= 0");
  if (m == 0) return g;
  TaggedBuilder b;
  for (const auto& t : g.tags()) {
    require(!t.is_pendant(), "corona_pendants: input already has pendant vertices");
    b.add(t);
  }
  for (auto [x, y] : g.edges()) b.connect(x, y);
  b.attach_pendants(m);
  return b.build(GenericFamily{"corona"});
}

Graph subdivide(const Graph& g) {
  TaggedBuilder b;
  int next_generic = 0;
  for (const auto& t : g.tags()) {
    b.add(t);
    if (t.role == Role::G) next_generic = std::max(next_generic, t.index);
  }
  for (auto [x, y] : g.edges()) {
    auto mid = b.add(VertexTag::make(Role::G, ++next_generic));
    b.connect(x, mid);
    b.connect(mid, y);
  }
  return b.build(GenericFamily{"subdivision"});
}

Graph triangular_snake(int k) {
  require(k >= 1, "triangular_snake requires k >= 1");
  TaggedBuilder b;
  std::vector<VertexId> u(k + 2), w(k + 1);
  for (int i = 1; i <= k + 1; ++i) u[i] = b.add(VertexTag::make(Role::U, i));
  for (int i = 1; i <= k; ++i) w[i] = b.add(VertexTag::make(Role::W, i));
  for (int i = 1; i <= k; ++i) {
    b.connect(u[i], u[i + 1]);
    b.connect(u[i], w[i]);
    b.connect(w[i], u[i + 1]);
  }
  return b.build(GenericFamily{fmt::format("tri-snake({})", k)});
}

Graph build_theorem1(int n, int m) {
  require(n >= 2, "ladder family requires n >= 2");
  require(m >= 1, "theorem families require m >= 1");
  TaggedBuilder b;
  std::vector<VertexId> u(n + 1), v(n + 1);
  for (int i = 1; i <= n; ++i) u[i] = b.add(VertexTag::make(Role::U, i));
  for (int i = 1; i <= n; ++i) v[i] = b.add(VertexTag::make(Role::V, i));
  for (int i = 1; i < n; ++i) {
    b.connect(u[i], u[i + 1]);
    b.connect(v[i], v[i + 1]);
  }
  for (int i = 1; i <= n; ++i) b.connect(u[i], v[i]);
  b.attach_pendants(m);
  return b.build(LadderFamily{n, m});
}

Graph build_theorem2(int n, int m) {
  require(n >= 2, "subdivided ladder family requires n >= 2");
  require(m >= 1, "theorem families require m >= 1");
  const int len = 2 * n - 1;
  TaggedBuilder b;
  std::vector<VertexId> u(len + 1), v(len + 1), w(n + 1);
  for (int i = 1; i <= len; ++i) u[i] = b.add(VertexTag::make(Role::U, i));
  for (int i = 1; i <= len; ++i) v[i] = b.add(VertexTag::make(Role::V, i));
  for (int j = 1; j <= n; ++j) w[j] = b.add(VertexTag::make(Role::W, j));
  for (int i = 1; i < len; ++i) {
    b.connect(u[i], u[i + 1]);
    b.connect(v[i], v[i + 1]);
  }
  // Rungs only at odd path positions 2j-1, each split by W(j).
  for (int j = 1; j <= n; ++j) {
    b.connect(u[2 * j - 1], w[j]);
    b.connect(w[j], v[2 * j - 1]);
  }
  b.attach_pendants(m);
  return b.build(SubdividedLadderFamily{n, m});
}

Graph build_theorem3(int k, int m) {
  require(k >= 1, "triangular snake family requires k >= 1");
  require(m >= 1, "theorem families require m >= 1");
  TaggedBuilder b;
  std::vector<VertexId> u(k + 2), v(k + 1), w(k + 1), y(k + 1), z(k + 1);
  for (int i = 1; i <= k + 1; ++i) u[i] = b.add(VertexTag::make(Role::U, i));
  for (int i = 1; i <= k; ++i) {
    v[i] = b.add(VertexTag::make(Role::V, i));
    w[i] = b.add(VertexTag::make(Role::W, i));
    y[i] = b.add(VertexTag::make(Role::Y, i));
    z[i] = b.add(VertexTag::make(Role::Z, i));
  }
  for (int i = 1; i <= k; ++i) {
    b.connect(u[i], y[i]);
    b.connect(y[i], u[i + 1]);
    b.connect(u[i], v[i]);
    b.connect(v[i], w[i]);
    b.connect(w[i], z[i]);
    b.connect(z[i], u[i + 1]);
  }
  b.attach_pendants(m);
  return b.build(SubdividedSnakeFamily{k, m});
}

Graph skeleton(const Graph& g) {
  std::vector<VertexTag> tags;
  std::vector<VertexId> remap(g.p(), 0);
  for (VertexId v = 0; v < g.p(); ++v) {
    if (g.tag(v).is_pendant()) continue;
    remap[v] = static_cast<VertexId>(tags.size());
    tags.push_back(g.tag(v));
  }
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    if (!g.tag(a).is_pendant() && !g.tag(b).is_pendant()) edges.emplace_back(remap[a], remap[b]);
  }
  return Graph(std::move(tags), std::move(edges), GenericFamily{"skeleton"});
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.p(), -1);
  for (VertexId s = 0; s < g.p(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<VertexId> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      auto x = frontier.front();
      frontier.pop();
      for (auto y : g.neighbors(x)) {
        if (color[y] == -1) {
          color[y] = 1 - color[x];
          frontier.push(y);
        } else if (color[y] == color[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::size_t component_count(const Graph& g) {
  std::vector<VertexId> parent(g.p());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = g.p();
  for (auto [a, b] : g.edges()) {
    auto ra = root(a), rb = root(b);
    if (ra != rb) {
      parent[ra] = rb;
      --count;
    }
  }
  return count;
}

}  // namespace oglab
