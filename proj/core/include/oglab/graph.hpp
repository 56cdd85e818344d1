#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace oglab {

/// Raised when construction parameters fall outside a family's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using VertexId = std::uint32_t;

/// Symbol classes used by the theorem families. `G` marks generic vertices
/// (cartesian product cells, subdivision midpoints).
enum class Role : std::uint8_t { U, V, W, Y, Z, G };

char role_letter(Role r);

/// A vertex name. Non-pendant tags are `role(index)`; pendant tags carry the
/// parent's role/index plus a 1-based pendant index. Pendants never have
/// pendant parents, so a flat representation suffices.
struct VertexTag {
  Role role = Role::G;
  int index = 1;
  int pendant = 0;  // 0 = not a pendant

  static constexpr VertexTag make(Role r, int i) { return {r, i, 0}; }
  static VertexTag pendant_of(const VertexTag& parent, int j);

  bool is_pendant() const { return pendant != 0; }
  VertexTag parent() const { return {role, index, 0}; }

  /// Text form: "u3", "g12", "p(u3,2)".
  std::string str() const;
  static VertexTag parse(const std::string& text);

  friend bool operator==(const VertexTag&, const VertexTag&) = default;
};

struct LadderFamily {
  int n;
  int m;
  friend bool operator==(const LadderFamily&, const LadderFamily&) = default;
};
struct SubdividedLadderFamily {
  int n;
  int m;
  friend bool operator==(const SubdividedLadderFamily&, const SubdividedLadderFamily&) = default;
};
struct SubdividedSnakeFamily {
  int k;
  int m;
  friend bool operator==(const SubdividedSnakeFamily&, const SubdividedSnakeFamily&) = default;
};
struct GenericFamily {
  std::string name;
  friend bool operator==(const GenericFamily&, const GenericFamily&) = default;
};

using FamilySpec = std::variant<LadderFamily, SubdividedLadderFamily, SubdividedSnakeFamily, GenericFamily>;

/// Family kind keyword used in files and on the command line.
std::string family_kind(const FamilySpec& f);

using Edge = std::pair<VertexId, VertexId>;

/// Immutable simple undirected graph with tagged vertices.
///
/// Vertex ids are dense and follow the canonical order: U, V, W, Y, Z, G by
/// index, then pendants grouped by parent (in parent order), pendant index
/// ascending. Edges are stored with the smaller id first, sorted.
class Graph {
 public:
  Graph() = default;

  /// Canonicalizes ids; endpoints of `edges` index into `tags`. Throws
  /// DomainError on self-loops, duplicate edges, dangling endpoints,
  /// duplicate tags, or pendants whose parent is absent.
  Graph(std::vector<VertexTag> tags, std::vector<Edge> edges, std::optional<FamilySpec> family = std::nullopt);

  std::size_t p() const { return tags_.size(); }
  std::size_t q() const { return edges_.size(); }

  const std::vector<VertexTag>& tags() const { return tags_; }
  const VertexTag& tag(VertexId v) const { return tags_.at(v); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  const std::optional<FamilySpec>& family() const { return family_; }

  std::optional<VertexId> find(const VertexTag& t) const;
  VertexId id_of(const VertexTag& t) const;  // throws std::out_of_range
  bool has_edge(VertexId a, VertexId b) const;

  /// Same structure, different family annotation.
  Graph with_family(std::optional<FamilySpec> family) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexTag> tags_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::optional<FamilySpec> family_;
};

// Generic constructions.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph cartesian_product(const Graph& g1, const Graph& g2);
Graph ladder(int n);
Graph corona_pendants(const Graph& g, int m);
Graph subdivide(const Graph& g);
Graph triangular_snake(int k);

// Theorem families, with canonical tags.
Graph build_theorem1(int n, int m);
Graph build_theorem2(int n, int m);
Graph build_theorem3(int k, int m);

/// Removes every pendant vertex (and its edge).
Graph skeleton(const Graph& g);

/// BFS 2-colouring; nullopt when an odd cycle exists.
std::optional<std::vector<int>> two_coloring(const Graph& g);
inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

std::size_t component_count(const Graph& g);

}  // namespace oglab
