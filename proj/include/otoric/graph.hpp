#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "otoric/exact_linalg.hpp"

namespace otoric {

struct Vertex {
  std::string id;
  BigInt weight;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::string id;
  std::size_t tail = 0;  // index into vertices()
  std::size_t head = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Vertex-weighted oriented simple graph.
///
/// Declaration order is significant: vertex order fixes the rows and edge
/// order the columns of the incidence matrix, and therefore the printed form
/// of every exponent vector. Instances are validated on construction and
/// immutable afterwards.
class WeightedOrientedGraph {
public:
  WeightedOrientedGraph() = default;
  /// Validates: weights >= 1, unique ids, known endpoints, no loops, no
  /// parallel edges (in either orientation). Throws ValidationError.
  WeightedOrientedGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  /// Builds from id-based edge triples.
  static WeightedOrientedGraph
  from_ids(const std::vector<std::pair<std::string, long>>& vertices,
           const std::vector<std::tuple<std::string, std::string, std::string>>& edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  std::optional<std::size_t> vertex_index(std::string_view id) const;
  std::optional<std::size_t> edge_index(std::string_view id) const;
  /// Edge joining u and v in either orientation.
  std::optional<std::size_t> edge_between(std::size_t u, std::size_t v) const;

  /// Incidence entry of vertex v in edge e: 1 at the tail, w(v) at the head.
  BigInt incidence(std::size_t v, std::size_t e) const;

  /// Same vertex set, the given edge subset (in ascending index order).
  WeightedOrientedGraph edge_subgraph(const std::vector<std::size_t>& edge_indices) const;
  WeightedOrientedGraph with_weights(const std::vector<BigInt>& weights) const;

  std::vector<std::string> edge_ids() const;

  friend bool operator==(const WeightedOrientedGraph& a, const WeightedOrientedGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t, std::less<>> vertex_lookup_;
  std::map<std::string, std::size_t, std::less<>> edge_lookup_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_lookup_;
};

/// Parses the graph JSON document. Throws ParseError (with line/column or
/// field path) or ValidationError.
WeightedOrientedGraph parse_graph(std::string_view text);
std::string serialize_graph(const WeightedOrientedGraph& g);

/// Vertex-by-edge incidence matrix in declaration order, labelled by ids.
IntMatrix incidence_matrix(const WeightedOrientedGraph& g);

/// Copy of g in which every vertex of outdegree 0 has weight 1.
WeightedOrientedGraph normalize_sink_weights(const WeightedOrientedGraph& g);

struct StructuralInfo {
  std::set<std::size_t> leaves;  // total degree 1
  std::set<std::size_t> sinks;   // outdegree 0
  std::vector<std::size_t> degree;
  std::vector<std::size_t> out_degree;
  std::vector<std::size_t> in_degree;
  /// adjacency[v] lists (neighbour, edge index) pairs in edge order.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency;
};

StructuralInfo structural_queries(const WeightedOrientedGraph& g);

} // namespace otoric
