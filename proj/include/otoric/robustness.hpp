#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "otoric/circuit_engine.hpp"
#include "otoric/graph.hpp"

namespace otoric {

struct RobustnessReport {
  bool in_class = false;
  std::optional<std::string> violated_condition;
  std::size_t balanced_cycle_count = 0;
  std::size_t unbalanced_cycle_count = 0;
  /// Number of deduplicated circuits; meaningful as mu(I_D) when in_class.
  std::size_t mu = 0;
  /// binomial(mu, i) for i = 0..mu; empty when out of class.
  std::vector<BigInt> betti;
  bool zero_ideal = false;
  std::size_t projective_dimension = 0;
  std::vector<CircuitEntry> circuits;
  std::vector<std::string> warnings;
};

/// Tests, in order: at most two unbalanced cycles; no balanced cycle shares
/// an edge with a path joining two disjoint unbalanced cycles; no two
/// balanced cycles share an edge. Counts and circuits are filled either way.
RobustnessReport check_robust_class(const WeightedOrientedGraph& g);

/// [binomial(mu, i) for i in 0..mu].
std::vector<BigInt> betti_table(std::size_t mu);

/// Circuit count of an in-class graph. Throws OutOfClassError otherwise.
std::size_t mu_of(const WeightedOrientedGraph& g);

} // namespace otoric
