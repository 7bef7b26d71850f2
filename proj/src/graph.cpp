#include "otoric/graph.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "otoric/errors.hpp"

namespace otoric {

using nlohmann::json;

WeightedOrientedGraph::WeightedOrientedGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& v = vertices_[i];
    if (v.weight < 1)
      throw ValidationError("vertex '" + v.id + "' has weight " + v.weight.get_str() +
                            " (must be >= 1)");
    if (!vertex_lookup_.emplace(v.id, i).second)
      throw ValidationError("duplicate vertex id '" + v.id + "'");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.tail >= vertices_.size() || e.head >= vertices_.size())
      throw ValidationError("edge '" + e.id + "' references an undeclared vertex");
    if (e.tail == e.head)
      throw ValidationError("edge '" + e.id + "' is a loop at '" + vertices_[e.tail].id + "'");
    if (!edge_lookup_.emplace(e.id, i).second)
      throw ValidationError("duplicate edge id '" + e.id + "'");
    const auto key = std::minmax(e.tail, e.head);
    if (!pair_lookup_.emplace(key, i).second)
      throw ValidationError("edge '" + e.id + "' is parallel to edge '" +
                            edges_[pair_lookup_.at(key)].id + "'");
  }
}

WeightedOrientedGraph WeightedOrientedGraph::from_ids(
    const std::vector<std::pair<std::string, long>>& vertices,
    const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
  std::vector<Vertex> vs;
  std::map<std::string, std::size_t> idx;
  for (const auto& [id, w] : vertices) {
    idx.emplace(id, vs.size());
    vs.push_back({id, BigInt(w)});
  }
  std::vector<Edge> es;
  for (const auto& [id, tail, head] : edges) {
    auto t = idx.find(tail), h = idx.find(head);
    if (t == idx.end() || h == idx.end())
      throw ValidationError("edge '" + id + "' references an undeclared vertex");
    es.push_back({id, t->second, h->second});
  }
  return WeightedOrientedGraph(std::move(vs), std::move(es));
}

std::optional<std::size_t> WeightedOrientedGraph::vertex_index(std::string_view id) const {
  auto it = vertex_lookup_.find(id);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> WeightedOrientedGraph::edge_index(std::string_view id) const {
  auto it = edge_lookup_.find(id);
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> WeightedOrientedGraph::edge_between(std::size_t u, std::size_t v) const {
  auto it = pair_lookup_.find(std::minmax(u, v));
  if (it == pair_lookup_.end()) return std::nullopt;
  return it->second;
}

BigInt WeightedOrientedGraph::incidence(std::size_t v, std::size_t e) const {
  const Edge& ed = edges_.at(e);
  if (ed.tail == v) return 1;
  if (ed.head == v) return vertices_.at(v).weight;
  return 0;
}

WeightedOrientedGraph
WeightedOrientedGraph::edge_subgraph(const std::vector<std::size_t>& edge_indices) const {
  std::vector<std::size_t> sorted = edge_indices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Edge> es;
  for (auto i : sorted) es.push_back(edges_.at(i));
  return WeightedOrientedGraph(vertices_, std::move(es));
}

WeightedOrientedGraph WeightedOrientedGraph::with_weights(const std::vector<BigInt>& weights) const {
  if (weights.size() != vertices_.size()) throw DimensionError("weight vector length mismatch");
  std::vector<Vertex> vs = vertices_;
  for (std::size_t i = 0; i < vs.size(); ++i) vs[i].weight = weights[i];
  return WeightedOrientedGraph(std::move(vs), edges_);
}

std::vector<std::string> WeightedOrientedGraph::edge_ids() const {
  std::vector<std::string> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.id);
  return out;
}

namespace {

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw ParseError(where + ": unknown field '" + it.key() + "'");
  }
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_string()) throw ParseError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

} // namespace

WeightedOrientedGraph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at " + line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " +
                     e.what());
  }
  if (!doc.is_object()) throw ParseError("document root must be an object");
  reject_unknown(doc, {"vertices", "edges"}, "document");

  const json& jv = require(doc, "vertices", "document");
  const json& je = require(doc, "edges", "document");
  if (!jv.is_array()) throw ParseError("vertices: expected an array");
  if (!je.is_array()) throw ParseError("edges: expected an array");

  std::vector<Vertex> vertices;
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < jv.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    const json& v = jv[i];
    if (!v.is_object()) throw ParseError(where + ": expected an object");
    reject_unknown(v, {"id", "weight"}, where);
    std::string id = require_string(v, "id", where);
    const json& w = require(v, "weight", where);
    BigInt weight;
    if (w.is_number_unsigned()) {
      weight = BigInt(std::to_string(w.get<std::uint64_t>()));
    } else if (w.is_number_integer()) {
      weight = BigInt(std::to_string(w.get<std::int64_t>()));
    } else {
      throw ParseError(where + ".weight: expected an integer");
    }
    if (weight < 1)
      throw ValidationError(where + " ('" + id + "'): weight " + weight.get_str() +
                            " must be a positive integer");
    idx.emplace(id, vertices.size());
    vertices.push_back({std::move(id), std::move(weight)});
  }

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < je.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& e = je[i];
    if (!e.is_object()) throw ParseError(where + ": expected an object");
    reject_unknown(e, {"id", "tail", "head"}, where);
    std::string id = require_string(e, "id", where);
    const std::string tail = require_string(e, "tail", where);
    const std::string head = require_string(e, "head", where);
    auto t = idx.find(tail), h = idx.find(head);
    if (t == idx.end())
      throw ValidationError(where + " ('" + id + "'): tail '" + tail + "' is not a declared vertex");
    if (h == idx.end())
      throw ValidationError(where + " ('" + id + "'): head '" + head + "' is not a declared vertex");
    edges.push_back({std::move(id), t->second, h->second});
  }
  return WeightedOrientedGraph(std::move(vertices), std::move(edges));
}

std::string serialize_graph(const WeightedOrientedGraph& g) {
  json doc;
  doc["vertices"] = json::array();
  doc["edges"] = json::array();
  for (const auto& v : g.vertices()) {
    json jv;
    jv["id"] = v.id;
    if (v.weight.fits_ulong_p())
      jv["weight"] = v.weight.get_ui();
    else
      throw ArgumentError("weight of '" + v.id + "' exceeds the JSON integer range");
    doc["vertices"].push_back(std::move(jv));
  }
  for (const auto& e : g.edges()) {
    doc["edges"].push_back(
        {{"id", e.id}, {"tail", g.vertex(e.tail).id}, {"head", g.vertex(e.head).id}});
  }
  return doc.dump(2);
}

IntMatrix incidence_matrix(const WeightedOrientedGraph& g) {
  std::vector<std::string> rows, cols;
  for (const auto& v : g.vertices()) rows.push_back(v.id);
  for (const auto& e : g.edges()) cols.push_back(e.id);
  IntMatrix a(g.vertex_count(), g.edge_count(), std::move(rows), std::move(cols));
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const Edge& e = g.edge(j);
    a(e.tail, j) = 1;
    a(e.head, j) = g.vertex(e.head).weight;
  }
  return a;
}

StructuralInfo structural_queries(const WeightedOrientedGraph& g) {
  StructuralInfo s;
  const std::size_t n = g.vertex_count();
  s.degree.assign(n, 0);
  s.out_degree.assign(n, 0);
  s.in_degree.assign(n, 0);
  s.adjacency.assign(n, {});
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const Edge& e = g.edge(j);
    ++s.out_degree[e.tail];
    ++s.in_degree[e.head];
    ++s.degree[e.tail];
    ++s.degree[e.head];
    s.adjacency[e.tail].emplace_back(e.head, j);
    s.adjacency[e.head].emplace_back(e.tail, j);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (s.degree[v] == 1) s.leaves.insert(v);
    if (s.out_degree[v] == 0) s.sinks.insert(v);
  }
  return s;
}

WeightedOrientedGraph normalize_sink_weights(const WeightedOrientedGraph& g) {
  const StructuralInfo s = structural_queries(g);
  std::vector<BigInt> w;
  for (const auto& v : g.vertices()) w.push_back(v.weight);
  for (auto v : s.sinks) w[v] = 1;
  return g.with_weights(w);
}

} // namespace otoric
