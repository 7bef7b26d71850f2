#include "otoric/robustness.hpp"

#include <algorithm>

#include "otoric/cycles.hpp"
#include "otoric/errors.hpp"

namespace otoric {

namespace {

bool shares_edge(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::any_of(a.begin(), a.end(),
                     [&](std::size_t e) { return std::find(b.begin(), b.end(), e) != b.end(); });
}

bool vertex_disjoint(const CycleSubgraph& a, const CycleSubgraph& b) {
  return std::none_of(a.vertices.begin(), a.vertices.end(),
                      [&](std::size_t v) { return b.contains_vertex(v); });
}

std::string cycle_name(const WeightedOrientedGraph& g, const CycleSubgraph& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (i) out += ' ';
    out += g.vertex(c.vertices[i]).id;
  }
  return out + ")";
}

std::string support_name(const WeightedOrientedGraph& g, const std::vector<std::size_t>& edges) {
  std::string out = "{";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ',';
    out += g.edge(edges[i]).id;
  }
  return out + "}";
}

} // namespace

std::vector<BigInt> betti_table(std::size_t mu) {
  std::vector<BigInt> out(mu + 1);
  for (std::size_t i = 0; i <= mu; ++i)
    mpz_bin_uiui(out[i].get_mpz_t(), static_cast<unsigned long>(mu), static_cast<unsigned long>(i));
  return out;
}

RobustnessReport check_robust_class(const WeightedOrientedGraph& g) {
  RobustnessReport r;
  std::vector<CycleSubgraph> balanced, unbalanced;
  for (auto& c : enumerate_cycles(g)) (is_balanced(c) ? balanced : unbalanced).push_back(std::move(c));
  r.balanced_cycle_count = balanced.size();
  r.unbalanced_cycle_count = unbalanced.size();

  bool pair_connected = false, pair_touch = false;
  if (unbalanced.size() > 2) {
    r.violated_condition = "more than two unbalanced cycles";
  } else if (unbalanced.size() == 2 && vertex_disjoint(unbalanced[0], unbalanced[1])) {
    const auto paths = connecting_paths(g, unbalanced[0], unbalanced[1]);
    pair_connected = !paths.empty();
    for (const auto& p : paths) {
      for (const auto& b : balanced) {
        if (shares_edge(p.edges, b.edges)) {
          r.violated_condition = "balanced cycle " + cycle_name(g, b) +
                                 " shares an edge with a path joining the unbalanced cycles";
          break;
        }
      }
      if (r.violated_condition) break;
    }
  } else if (unbalanced.size() == 2) {
    const auto& a = unbalanced[0].vertices;
    const auto n = std::count_if(a.begin(), a.end(), [&](std::size_t v) { return unbalanced[1].contains_vertex(v); });
    pair_touch = n == 1;
  }
  if (!r.violated_condition) {
    for (std::size_t i = 0; i < balanced.size() && !r.violated_condition; ++i)
      for (std::size_t j = i + 1; j < balanced.size(); ++j)
        if (shares_edge(balanced[i].edges, balanced[j].edges)) {
          r.violated_condition = "balanced cycles " + cycle_name(g, balanced[i]) + " and " +
                                 cycle_name(g, balanced[j]) + " share a path";
          break;
        }
  }
  r.in_class = !r.violated_condition.has_value();

  r.circuits = circuits(g);
  r.mu = r.circuits.size();
  if (!r.in_class) return r;

  r.betti = betti_table(r.mu);
  r.projective_dimension = r.mu;
  r.zero_ideal = r.mu == 0;

  const std::size_t expected = r.balanced_cycle_count + ((pair_connected || pair_touch) ? 1 : 0);
  if (expected != r.mu)
    r.warnings.push_back("circuit count " + std::to_string(r.mu) + " differs from the case-table value " +
                         std::to_string(expected));

  for (std::size_t i = 0; i < r.circuits.size(); ++i) {
    const auto si = r.circuits[i].supports.front().edge_set();
    for (std::size_t j = i + 1; j < r.circuits.size(); ++j) {
      const auto sj = r.circuits[j].supports.front().edge_set();
      if (shares_edge(si, sj))
        r.warnings.push_back("circuit supports " + support_name(g, si) + " and " + support_name(g, sj) +
                             " overlap");
    }
  }
  return r;
}

std::size_t mu_of(const WeightedOrientedGraph& g) {
  const RobustnessReport r = check_robust_class(g);
  if (!r.in_class) throw OutOfClassError("graph is outside the robust class: " + *r.violated_condition);
  return r.mu;
}

} // namespace otoric
