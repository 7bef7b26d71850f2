#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "otoric/cycles.hpp"
#include "otoric/exact_linalg.hpp"
#include "otoric/graph.hpp"

namespace otoric {

/// Signed exponent vector over the parent graph's edges.
struct BinomialVector {
  IntVector exponents;
  SupportKind kind = SupportKind::BalancedCycle;
};

/// f = plus - minus; keys are edge indices.
struct Binomial {
  std::map<std::size_t, BigInt> plus;
  std::map<std::size_t, BigInt> minus;

  static Binomial from_vector(const IntVector& v);
};

/// Intermediate values of a generator formula, in labelling order.
///
/// `raw` is the formula's vector before division by d and `edge_order`
/// maps each raw position to a parent edge index. For the balanced cycle
/// `minors` are M(A(C)[1|i]); for the two-cycle shapes `minors` holds the
/// r-values of the formula.
struct GeneratorTrace {
  std::optional<BigInt> p, q, s;
  std::vector<BigInt> minors;
  IntVector raw;
  BigInt d;
  std::vector<std::size_t> edge_order;
};

/// Primitive generator of a balanced cycle from the minors of its incidence
/// matrix, computed in the cycle's own labelling. Throws
/// UnbalancedCycleError.
BinomialVector balanced_cycle_generator(const CycleSubgraph& c, GeneratorTrace* trace = nullptr);

/// Two unbalanced cycles meeting in exactly one vertex. Both are re-anchored
/// at the shared vertex keeping their direction.
BinomialVector shared_vertex_generator(const CycleSubgraph& cm, const CycleSubgraph& cn,
                                       GeneratorTrace* trace = nullptr);

/// Two vertex-disjoint unbalanced cycles joined by a path of length >= 1.
/// The path may be given in either direction.
BinomialVector path_connected_generator(const CycleSubgraph& cm, const PathSubgraph& p,
                                        const CycleSubgraph& cn, GeneratorTrace* trace = nullptr);

/// Two unbalanced cycles meeting exactly in a path of length >= 1 whose
/// outer cycle is unbalanced. The path's first vertex anchors all matrices.
BinomialVector shared_path_generator(const CycleSubgraph& cm, const CycleSubgraph& cn,
                                     const PathSubgraph& p, const CycleSubgraph& outer,
                                     GeneratorTrace* trace = nullptr);

/// Dispatches on support.kind.
BinomialVector generator_for(const CircuitSupport& support, GeneratorTrace* trace = nullptr);

struct CircuitEntry {
  std::vector<CircuitSupport> supports;  // every description reaching this vector
  BinomialVector vector;
  Binomial binomial;
};

/// All circuit binomials of g, one entry per distinct canonical vector, in
/// order of first support. Generators run in parallel under OpenMP.
std::vector<CircuitEntry> circuits(const WeightedOrientedGraph& g);
/// Single-threaded reference for circuits().
std::vector<CircuitEntry> circuits_serial(const WeightedOrientedGraph& g);

/// v / gcd(|v_i|). Throws ArgumentError on the zero vector.
IntVector gcd_normalize(const IntVector& v);
/// Flips v so its first nonzero entry is positive.
IntVector canonical_sign(IntVector v);

/// "e1^6*e3 - e2^2*e4", ascending edge index, exponent 1 omitted, an empty
/// side printed as 1.
std::string render_binomial(const Binomial& b, const std::vector<std::string>& names);

} // namespace otoric
