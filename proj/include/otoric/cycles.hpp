#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "otoric/exact_linalg.hpp"
#include "otoric/graph.hpp"

namespace otoric {

enum class Direction { Forward, Reverse };

/// Cycle of the underlying undirected graph in a concrete labelling:
/// edges[i] joins vertices[i] and vertices[(i + 1) % m].
///
/// `parent` is non-owning; the graph must outlive the cycle.
struct CycleSubgraph {
  const WeightedOrientedGraph* parent = nullptr;
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;

  std::size_t length() const { return edges.size(); }
  std::optional<std::size_t> position_of(std::size_t vertex) const;
  bool contains_vertex(std::size_t vertex) const { return position_of(vertex).has_value(); }
  bool contains_edge(std::size_t edge) const;

  /// Same cycle, labelled from `start` in the given direction. Reverse keeps
  /// the start vertex and walks the cycle the other way round.
  CycleSubgraph relabelled(std::size_t start, Direction dir) const;
  /// Rotated to the minimum vertex, second vertex the smaller neighbour.
  CycleSubgraph canonical() const;

  friend bool operator==(const CycleSubgraph& a, const CycleSubgraph& b) {
    return a.vertices == b.vertices && a.edges == b.edges;
  }
};

/// Simple path: edges[i] joins vertices[i] and vertices[i + 1].
struct PathSubgraph {
  const WeightedOrientedGraph* parent = nullptr;
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;

  std::size_t length() const { return edges.size(); }
  PathSubgraph reversed() const;

  friend bool operator==(const PathSubgraph& a, const PathSubgraph& b) {
    return a.vertices == b.vertices && a.edges == b.edges;
  }
};

/// Builds a cycle from its vertex sequence, looking up the joining edges.
/// Throws ArgumentError if two consecutive vertices are not adjacent.
CycleSubgraph make_cycle(const WeightedOrientedGraph& g, const std::vector<std::size_t>& vertices);
PathSubgraph make_path(const WeightedOrientedGraph& g, const std::vector<std::size_t>& vertices);
/// Cycle spanned by an edge set in which every touched vertex has degree 2.
CycleSubgraph cycle_from_edges(const WeightedOrientedGraph& g, const std::vector<std::size_t>& edges);

/// Every simple cycle of the underlying undirected graph once, in canonical
/// form, sorted lexicographically by vertex sequence.
std::vector<CycleSubgraph> enumerate_cycles(const WeightedOrientedGraph& g);

/// Incidence submatrix in the subgraph's current labelling.
IntMatrix labelling_matrix(const CycleSubgraph& c);
IntMatrix labelling_matrix(const PathSubgraph& p);

/// Incidence submatrix in the usual labelling beginning at `start`. For a
/// path, `start` must be an endpoint and fixes the direction.
IntMatrix usual_labelling_matrix(const CycleSubgraph& c, std::size_t start, Direction dir);
IntMatrix usual_labelling_matrix(const PathSubgraph& p, std::size_t start);

/// det of the cycle's incidence matrix in its current labelling. The value is
/// labelling-invariant up to sign.
BigInt cycle_det(const CycleSubgraph& c);
bool is_balanced(const CycleSubgraph& c);

enum class SupportKind { BalancedCycle, SharedVertex, PathConnected, SharedPath };

std::string to_string(SupportKind k);

/// Subgraph shape underlying one circuit.
///
/// BalancedCycle: cycles = {C}. SharedVertex: cycles = {Cm, Cn}, anchored at
/// the shared vertex. PathConnected: cycles = {Cm, Cn}, path runs from Cm to
/// Cn. SharedPath: cycles = {Cm, Cn} both starting with the shared path,
/// outer = the remaining cycle.
struct CircuitSupport {
  SupportKind kind = SupportKind::BalancedCycle;
  std::vector<CycleSubgraph> cycles;
  std::optional<PathSubgraph> path;
  std::optional<CycleSubgraph> outer;

  /// Sorted edge indices of the whole support.
  std::vector<std::size_t> edge_set() const;
};

/// All supports of the four circuit shapes, grouped by kind in the order of
/// SupportKind. Pairs of unbalanced cycles whose intersection is neither a
/// single vertex nor a single path are skipped and described in
/// `diagnostics` when given.
std::vector<CircuitSupport> find_circuit_supports(const WeightedOrientedGraph& g,
                                                  std::vector<std::string>* diagnostics = nullptr);

/// Simple paths of length >= 1 from a vertex of `from` to a vertex of `to`
/// whose interior avoids both cycles. Cycles must be vertex-disjoint.
std::vector<PathSubgraph> connecting_paths(const WeightedOrientedGraph& g, const CycleSubgraph& from,
                                           const CycleSubgraph& to);

} // namespace otoric
