#include "oglab/io.hpp"

#include <array>

#include <fmt/core.h>
#include <openssl/evp.h>

#include "json.hpp"

namespace oglab {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump() + "\n"; }

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(fmt::format("invalid JSON: {}", e.what()));
  }
}

json family_json(const std::optional<FamilySpec>& family) {
  if (!family) return nullptr;
  struct Visitor {
    json operator()(const LadderFamily& f) const { return {{"kind", "ladder"}, {"n", f.n}, {"m", f.m}}; }
    json operator()(const SubdividedLadderFamily& f) const { return {{"kind", "sub-ladder"}, {"n", f.n}, {"m", f.m}}; }
    json operator()(const SubdividedSnakeFamily& f) const { return {{"kind", "sub-tri-snake"}, {"k", f.k}, {"m", f.m}}; }
    json operator()(const GenericFamily& f) const { return {{"kind", "generic"}, {"name", f.name}}; }
  };
  return std::visit(Visitor{}, *family);
}

std::optional<FamilySpec> family_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "ladder") return LadderFamily{j.at("n").get<int>(), j.at("m").get<int>()};
  if (kind == "sub-ladder") return SubdividedLadderFamily{j.at("n").get<int>(), j.at("m").get<int>()};
  if (kind == "sub-tri-snake") return SubdividedSnakeFamily{j.at("k").get<int>(), j.at("m").get<int>()};
  if (kind == "generic") return GenericFamily{j.at("name").get<std::string>()};
  throw FormatError(fmt::format("unknown family kind '{}'", kind));
}

json edge_json(const Edge& e) { return json::array({e.first, e.second}); }

json violation_json(const Violation& v, const Graph& g) {
  auto tag = [&](VertexId id) { return id < g.p() ? g.tag(id).str() : std::string{}; };
  struct Visitor {
    decltype(tag)& t;
    json operator()(const MissingVertexLabel& x) const {
      return {{"vertices", json::array({x.vertex})}, {"tags", json::array({t(x.vertex)})}};
    }
    json operator()(const VertexLabelOutOfRange& x) const {
      return {{"vertices", json::array({x.vertex})}, {"tags", json::array({t(x.vertex)})}, {"label", x.label}};
    }
    json operator()(const DuplicateVertexLabel& x) const {
      return {{"vertices", json::array({x.vertex_a, x.vertex_b})}, {"tags", json::array({t(x.vertex_a), t(x.vertex_b)})}, {"label", x.label}};
    }
    json operator()(const EdgeLabelEven& x) const {
      return {{"edges", json::array({edge_json(x.edge)})}, {"label", x.label}};
    }
    json operator()(const DuplicateEdgeLabel& x) const {
      return {{"edges", json::array({edge_json(x.edge_a), edge_json(x.edge_b)})}, {"label", x.label}};
    }
    json operator()(const MissingOddEdgeLabel& x) const { return {{"label", x.label}}; }
  };
  json j = std::visit(Visitor{tag}, v);
  j["kind"] = std::string(violation_kind(v));
  return j;
}

}  // namespace

std::string to_json(const Graph& g) {
  json vertices = json::array();
  for (VertexId v = 0; v < g.p(); ++v) vertices.push_back({{"id", v}, {"tag", g.tag(v).str()}});
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back(edge_json(e));
  return dump({{"family", family_json(g.family())}, {"vertices", vertices}, {"edges", edges}});
}

Graph graph_from_json(std::string_view text) {
  const json j = parse(text);
  try {
    std::vector<VertexTag> tags;
    const auto& vertices = j.at("vertices");
    tags.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i].at("id").get<std::size_t>() != i) throw FormatError("vertex ids must be dense and in order");
      tags.push_back(VertexTag::parse(vertices[i].at("tag").get<std::string>()));
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw FormatError("edge must be a pair of vertex ids");
      edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    return Graph(std::move(tags), std::move(edges), family_from_json(j.at("family")));
  } catch (const json::exception& e) {
    throw FormatError(fmt::format("malformed graph document: {}", e.what()));
  } catch (const DomainError& e) {
    throw FormatError(fmt::format("invalid graph: {}", e.what()));
  }
}

std::string fingerprint(const Graph& g) {
  const std::string text = to_json(g);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

std::string labeling_to_json(const Graph& g, const Labeling& l) {
  json labels = json::array();
  for (const auto& x : l.slots()) {
    if (x) {
      labels.push_back(*x);
    } else {
      labels.push_back(nullptr);
    }
  }
  return dump({{"graph_fingerprint", fingerprint(g)}, {"labels", labels}});
}

LabelingFile labeling_from_json(std::string_view text) {
  const json j = parse(text);
  try {
    LabelingFile out;
    out.graph_fingerprint = j.at("graph_fingerprint").get<std::string>();
    std::vector<std::optional<Label>> slots;
    for (const auto& x : j.at("labels")) {
      if (x.is_null()) {
        slots.emplace_back();
      } else {
        slots.emplace_back(x.get<Label>());
      }
    }
    out.labeling = Labeling(std::move(slots));
    return out;
  } catch (const json::exception& e) {
    throw FormatError(fmt::format("malformed labeling document: {}", e.what()));
  }
}

std::string to_json(const FormulaInterpretation& interp) {
  json notes = json::array();
  for (const auto& n : interp.notes) notes.push_back({{"id", n.formula_id}, {"decision", n.decision}});
  json uncovered = json::array();
  for (const auto& t : interp.uncovered_vertices) uncovered.push_back(t.str());
  return dump({{"notes", notes}, {"uncovered", uncovered}});
}

std::string to_json(const VerificationReport& report, const Graph& g) {
  json violations = json::array();
  for (const auto& v : report.violations) violations.push_back(violation_json(v, g));
  return dump({{"ok", report.ok}, {"q", report.q}, {"violations", violations}});
}

std::string to_json(const SearchOutcome& outcome) {
  json labels = nullptr;
  if (outcome.labeling) labels = outcome.labeling->values();
  json reason = nullptr;
  if (outcome.reason) reason = std::string(reason_name(*outcome.reason));
  json stats = {{"nodes", outcome.stats.nodes_expanded},
                {"backtracks", outcome.stats.backtracks},
                {"elapsed_ms", outcome.stats.elapsed.count()},
                {"max_depth", outcome.stats.max_depth}};
  return dump({{"outcome", std::string(status_name(outcome.status))},
               {"reason", reason},
               {"labels", labels},
               {"stats", stats}});
}

}  // namespace oglab
