#pragma once

#include <cstdint>
#include <vector>

#include "otoric/exact_linalg.hpp"
#include "otoric/graph.hpp"

namespace otoric {

/// Limits for the brute-force searches. Exceeding any of them throws
/// BudgetExceeded; results are never truncated.
struct OracleBudget {
  std::int64_t max_entry_bound = 64;
  std::size_t max_support_size = 12;
  std::uint64_t max_enumeration_count = 10'000'000;

  /// Throws ArgumentError unless every field is positive.
  void validate() const;
};

/// Columns in S are dependent over Q and every proper subset is independent.
/// Throws ArgumentError on an empty or out-of-range S.
bool is_circuit_support(const IntMatrix& a, const std::vector<std::size_t>& s);

/// Integer-primitive kernel vectors of all minimally dependent column sets,
/// canonical sign, sorted. Level-wise over subset size; only sets whose
/// every maximal proper subset is independent are tested.
std::vector<IntVector> circuits_brute_force(const IntMatrix& a, const OracleBudget& budget = {});
std::vector<IntVector> circuits_brute_force_serial(const IntMatrix& a, const OracleBudget& budget = {});

/// No kernel vector other than 0 and v lies conformally below v. Throws
/// ArgumentError if v is zero or not in the kernel.
bool is_primitive(const IntMatrix& a, const IntVector& v, const OracleBudget& budget = {});

/// Primitive kernel vectors with all |entries| <= budget.max_entry_bound,
/// canonical sign, sorted. A bounded slice of the Graver basis.
std::vector<IntVector> graver_small(const IntMatrix& a, const OracleBudget& budget = {});
std::vector<IntVector> graver_small_serial(const IntMatrix& a, const OracleBudget& budget = {});

/// Circuits of the edge-subgraph on `edges` equal the circuits of g whose
/// support lies inside `edges`. Both sides by brute force.
bool verify_restriction(const WeightedOrientedGraph& g, const std::vector<std::size_t>& edges,
                        const OracleBudget& budget = {});

/// y is conformally below x: same sign where nonzero and |y_i| <= |x_i|.
bool conformal_le(const IntVector& y, const IntVector& x);

} // namespace otoric
