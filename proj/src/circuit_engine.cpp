#include "otoric/circuit_engine.hpp"

#include <algorithm>
#include <exception>
#include <set>

#include <omp.h>

#include "otoric/errors.hpp"

namespace otoric {

namespace {

// (-1)^e
int alt(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

// sign(n) = 1 for n >= 0, -1 otherwise.
int sign_of(const BigInt& n) { return sgn(n) < 0 ? -1 : 1; }

// M(A[1|col]) on a cycle matrix, col 0-based.
BigInt cycle_minor(const IntMatrix& a, std::size_t col) {
  const std::size_t row0 = 0;
  return minor(a, std::span(&row0, 1), std::span(&col, 1));
}

// M(A[1, last|col]) on a path matrix, col 0-based.
BigInt path_interior_minor(const IntMatrix& a, std::size_t col) {
  const std::size_t rows[2] = {0, a.rows() - 1};
  return minor(a, rows, std::span(&col, 1));
}

const WeightedOrientedGraph& common_parent(const WeightedOrientedGraph* a,
                                           const WeightedOrientedGraph* b) {
  if (a == nullptr || a != b) throw SupportShapeError("subgraphs do not share one parent graph");
  return *a;
}

std::vector<std::size_t> common(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> sa = a, sb = b, out;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
  return out;
}

BigInt unbalanced_det(const CycleSubgraph& c, const char* role) {
  BigInt d = cycle_det(c);
  if (sgn(d) == 0)
    throw UnbalancedCycleRequiredError(std::string(role) + " cycle is balanced; an unbalanced cycle is required");
  return d;
}

// raw / d scaled by `scale`, embedded at edge_order and sign-normalized.
BinomialVector finish(const WeightedOrientedGraph& g, IntVector raw, std::vector<std::size_t> edge_order,
                      int scale, SupportKind kind, std::vector<BigInt> minors, GeneratorTrace* trace,
                      std::optional<BigInt> p = {}, std::optional<BigInt> q = {},
                      std::optional<BigInt> s = {}) {
  const BigInt d = content(raw);
  IntVector full(g.edge_count());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    BigInt x;
    mpz_divexact(x.get_mpz_t(), raw[i].get_mpz_t(), d.get_mpz_t());
    full[edge_order[i]] = scale < 0 ? BigInt(-x) : x;
  }
  if (trace) {
    trace->p = std::move(p);
    trace->q = std::move(q);
    trace->s = std::move(s);
    trace->minors = std::move(minors);
    trace->raw = std::move(raw);
    trace->d = d;
    trace->edge_order = std::move(edge_order);
  }
  return {canonical_sign(std::move(full)), kind};
}

} // namespace

Binomial Binomial::from_vector(const IntVector& v) {
  Binomial b;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) > 0) b.plus.emplace(i, v[i]);
    if (sgn(v[i]) < 0) b.minus.emplace(i, BigInt(-v[i]));
  }
  return b;
}

IntVector gcd_normalize(const IntVector& v) {
  const BigInt g = content(v);
  if (sgn(g) == 0) throw ArgumentError("gcd_normalize of the zero vector");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

IntVector canonical_sign(IntVector v) {
  auto first = std::find_if(v.begin(), v.end(), [](const BigInt& x) { return sgn(x) != 0; });
  if (first != v.end() && sgn(*first) < 0)
    for (auto& x : v) x = -x;
  return v;
}

std::string render_binomial(const Binomial& b, const std::vector<std::string>& names) {
  auto side = [&](const std::map<std::size_t, BigInt>& terms) {
    if (terms.empty()) return std::string("1");
    std::string out;
    for (const auto& [idx, exp] : terms) {
      if (!out.empty()) out += '*';
      out += idx < names.size() ? names[idx] : "e" + std::to_string(idx + 1);
      if (exp != 1) out += "^" + exp.get_str();
    }
    return out;
  };
  return side(b.plus) + " - " + side(b.minus);
}

BinomialVector balanced_cycle_generator(const CycleSubgraph& c, GeneratorTrace* trace) {
  const WeightedOrientedGraph& g = common_parent(c.parent, c.parent);
  const IntMatrix a = labelling_matrix(c);
  if (sgn(det(a)) != 0) throw UnbalancedCycleError("cycle is not balanced");
  const std::size_t m = c.length();
  IntVector raw(m);
  std::vector<BigInt> minors(m);
  for (std::size_t i = 1; i <= m; ++i) {
    minors[i - 1] = cycle_minor(a, i - 1);
    raw[i - 1] = alt(i + 1) * minors[i - 1];
  }
  return finish(g, std::move(raw), c.edges, 1, SupportKind::BalancedCycle, std::move(minors), trace);
}

BinomialVector shared_vertex_generator(const CycleSubgraph& cm_in, const CycleSubgraph& cn_in,
                                       GeneratorTrace* trace) {
  const WeightedOrientedGraph& g = common_parent(cm_in.parent, cn_in.parent);
  const BigInt q0 = unbalanced_det(cm_in, "first");
  const BigInt p0 = unbalanced_det(cn_in, "second");
  (void)q0;
  (void)p0;

  const auto shared_v = common(cm_in.vertices, cn_in.vertices);
  if (shared_v.size() != 1 || !common(cm_in.edges, cn_in.edges).empty())
    throw SupportShapeError("cycles must share exactly one vertex and no edge");

  const CycleSubgraph cm = cm_in.relabelled(shared_v[0], Direction::Forward);
  const CycleSubgraph cn = cn_in.relabelled(shared_v[0], Direction::Forward);
  const IntMatrix am = labelling_matrix(cm), an = labelling_matrix(cn);
  const BigInt q = det(am), p = det(an);
  const std::size_t m = cm.length(), n = cn.length();

  IntVector raw;
  std::vector<BigInt> r;
  std::vector<std::size_t> order;
  for (std::size_t i = 1; i <= m; ++i) {
    r.push_back(cycle_minor(am, i - 1));
    raw.push_back(alt(i + 1) * p * r.back());
    order.push_back(cm.edges[i - 1]);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    r.push_back(cycle_minor(an, i - 1));
    raw.push_back(alt(i) * q * r.back());
    order.push_back(cn.edges[i - 1]);
  }
  return finish(g, std::move(raw), std::move(order), sign_of(p), SupportKind::SharedVertex,
                std::move(r), trace, p, q);
}

BinomialVector path_connected_generator(const CycleSubgraph& cm_in, const PathSubgraph& p_in,
                                        const CycleSubgraph& cn_in, GeneratorTrace* trace) {
  const WeightedOrientedGraph& g = common_parent(cm_in.parent, cn_in.parent);
  common_parent(cm_in.parent, p_in.parent);
  unbalanced_det(cm_in, "first");
  unbalanced_det(cn_in, "second");

  const std::size_t k = p_in.length();
  if (k == 0)
    throw SupportShapeError("path of length 0; use the shared-vertex generator");
  if (!common(cm_in.vertices, cn_in.vertices).empty())
    throw SupportShapeError("cycles joined by a path must be vertex-disjoint");

  PathSubgraph path = p_in;
  if (cn_in.contains_vertex(path.vertices.front()) && cm_in.contains_vertex(path.vertices.back()))
    path = path.reversed();
  if (!cm_in.contains_vertex(path.vertices.front()) || !cn_in.contains_vertex(path.vertices.back()))
    throw SupportShapeError("path endpoints must lie one on each cycle");
  for (std::size_t t = 1; t < k; ++t)
    if (cm_in.contains_vertex(path.vertices[t]) || cn_in.contains_vertex(path.vertices[t]))
      throw SupportShapeError("path touches a cycle internally");
  {
    auto vs = path.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
      throw SupportShapeError("path is not simple");
  }

  const CycleSubgraph cm = cm_in.relabelled(path.vertices.front(), Direction::Forward);
  const CycleSubgraph cn = cn_in.relabelled(path.vertices.back(), Direction::Forward);
  const IntMatrix am = labelling_matrix(cm), an = labelling_matrix(cn), ap = labelling_matrix(path);
  const BigInt q = det(am), p = det(an);
  const std::size_t m = cm.length(), n = cn.length();

  const std::size_t last_row = k, first_row = 0;
  const BigInt path_head = minor(ap, std::span(&last_row, 1), {});   // M_k(A(P)[k+1|])
  const BigInt path_tail = minor(ap, std::span(&first_row, 1), {});  // M_k(A(P)[1|])

  IntVector raw;
  std::vector<BigInt> r;
  std::vector<std::size_t> order;
  for (std::size_t i = 1; i <= m; ++i) {
    r.push_back(path_head * cycle_minor(am, i - 1));
    raw.push_back(alt(i + 1) * p * r.back());
    order.push_back(cm.edges[i - 1]);
  }
  for (std::size_t i = 1; i <= k; ++i) {
    r.push_back(path_interior_minor(ap, i - 1));
    raw.push_back(alt(i) * p * q * r.back());
    order.push_back(path.edges[i - 1]);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    r.push_back(path_tail * cycle_minor(an, i - 1));
    raw.push_back(alt(i + k) * q * r.back());
    order.push_back(cn.edges[i - 1]);
  }
  return finish(g, std::move(raw), std::move(order), sign_of(p), SupportKind::PathConnected,
                std::move(r), trace, p, q);
}

BinomialVector shared_path_generator(const CycleSubgraph& cm_in, const CycleSubgraph& cn_in,
                                     const PathSubgraph& p_in, const CycleSubgraph& outer_in,
                                     GeneratorTrace* trace) {
  const WeightedOrientedGraph& g = common_parent(cm_in.parent, cn_in.parent);
  common_parent(cm_in.parent, p_in.parent);
  common_parent(cm_in.parent, outer_in.parent);
  unbalanced_det(cm_in, "first");
  unbalanced_det(cn_in, "second");

  const std::size_t k = p_in.length();
  if (k == 0) throw SupportShapeError("shared path must have length >= 1");
  {
    auto ce = common(cm_in.edges, cn_in.edges);
    auto pe = p_in.edges;
    std::sort(pe.begin(), pe.end());
    auto cv = common(cm_in.vertices, cn_in.vertices);
    auto pv = p_in.vertices;
    std::sort(pv.begin(), pv.end());
    if (ce != pe || cv != pv) throw SupportShapeError("cycles must intersect exactly in the path");
  }

  const std::size_t v1 = p_in.vertices.front();
  auto anchor = [&](const CycleSubgraph& c) {
    for (Direction dir : {Direction::Forward, Direction::Reverse}) {
      CycleSubgraph r = c.relabelled(v1, dir);
      if (std::equal(p_in.edges.begin(), p_in.edges.end(), r.edges.begin())) return r;
    }
    throw SupportShapeError("cycle does not traverse the shared path from its first vertex");
  };
  const CycleSubgraph cm = anchor(cm_in), cn = anchor(cn_in);
  const std::size_t m = cm.length(), n = cn.length();

  // Outer cycle: v1, then back along cm to v_{k+1}, then along cn to v1.
  std::vector<std::size_t> expected_outer;
  for (std::size_t t = m; t-- > k;) expected_outer.push_back(cm.edges[t]);
  for (std::size_t t = k; t < n; ++t) expected_outer.push_back(cn.edges[t]);
  {
    auto a = expected_outer, b = outer_in.edges;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw SupportShapeError("outer cycle is not the symmetric difference of the two cycles");
  }
  const CycleSubgraph outer = outer_in.relabelled(v1, outer_in.relabelled(v1, Direction::Forward).edges.front() ==
                                                           expected_outer.front()
                                                       ? Direction::Forward
                                                       : Direction::Reverse);
  const BigInt s = cycle_det(outer);
  if (sgn(s) == 0)
    throw BalancedOuterCycleError("outer cycle is balanced; its own generator is the circuit");

  const BigInt q = cycle_det(cm), p = cycle_det(cn);
  const IntMatrix ap = labelling_matrix(p_in);

  // Cm \ P runs v_{k+1}, ..., v_m, v_1; likewise Cn \ P.
  auto remainder = [&](const CycleSubgraph& c) {
    PathSubgraph r{&g, {}, {}};
    for (std::size_t t = k; t < c.length(); ++t) {
      r.vertices.push_back(c.vertices[t]);
      r.edges.push_back(c.edges[t]);
    }
    r.vertices.push_back(c.vertices.front());
    return r;
  };
  const PathSubgraph rm = remainder(cm), rn = remainder(cn);
  const IntMatrix arm = labelling_matrix(rm), arn = labelling_matrix(rn);

  IntVector raw;
  std::vector<BigInt> r;
  std::vector<std::size_t> order;
  for (std::size_t i = 1; i <= k; ++i) {
    r.push_back(path_interior_minor(ap, i - 1));
    raw.push_back(alt(i + 1) * s * r.back());
    order.push_back(p_in.edges[i - 1]);
  }
  for (std::size_t i = 1; i <= m - k; ++i) {
    r.push_back(path_interior_minor(arm, i - 1));
    raw.push_back(alt(i + m - k + 1) * p * r.back());
    order.push_back(rm.edges[i - 1]);
  }
  for (std::size_t i = 1; i <= n - k; ++i) {
    r.push_back(path_interior_minor(arn, i - 1));
    raw.push_back(alt(i + m - k) * q * r.back());
    order.push_back(rn.edges[i - 1]);
  }
  return finish(g, std::move(raw), std::move(order), sign_of(s), SupportKind::SharedPath,
                std::move(r), trace, p, q, s);
}

BinomialVector generator_for(const CircuitSupport& support, GeneratorTrace* trace) {
  switch (support.kind) {
  case SupportKind::BalancedCycle:
    return balanced_cycle_generator(support.cycles.at(0), trace);
  case SupportKind::SharedVertex:
    return shared_vertex_generator(support.cycles.at(0), support.cycles.at(1), trace);
  case SupportKind::PathConnected:
    return path_connected_generator(support.cycles.at(0), support.path.value(), support.cycles.at(1),
                                    trace);
  case SupportKind::SharedPath:
    return shared_path_generator(support.cycles.at(0), support.cycles.at(1), support.path.value(),
                                 support.outer.value(), trace);
  }
  throw ArgumentError("unknown support kind");
}

namespace {

std::vector<CircuitEntry> collect(std::vector<CircuitSupport> supports,
                                  std::vector<BinomialVector> vectors) {
  std::vector<CircuitEntry> out;
  std::map<IntVector, std::size_t> seen;
  for (std::size_t i = 0; i < supports.size(); ++i) {
    auto [it, inserted] = seen.emplace(vectors[i].exponents, out.size());
    if (inserted) {
      Binomial b = Binomial::from_vector(vectors[i].exponents);
      out.push_back({{std::move(supports[i])}, std::move(vectors[i]), std::move(b)});
    } else {
      out[it->second].supports.push_back(std::move(supports[i]));
    }
  }
  return out;
}

} // namespace

std::vector<CircuitEntry> circuits(const WeightedOrientedGraph& g) {
  std::vector<CircuitSupport> supports = find_circuit_supports(g);
  std::vector<BinomialVector> vectors(supports.size());
  std::exception_ptr failure;
  const auto count = static_cast<long>(supports.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      vectors[i] = generator_for(supports[i]);
    } catch (...) {
#pragma omp critical(otoric_circuits_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return collect(std::move(supports), std::move(vectors));
}

std::vector<CircuitEntry> circuits_serial(const WeightedOrientedGraph& g) {
  std::vector<CircuitSupport> supports = find_circuit_supports(g);
  std::vector<BinomialVector> vectors;
  vectors.reserve(supports.size());
  for (const auto& s : supports) vectors.push_back(generator_for(s));
  return collect(std::move(supports), std::move(vectors));
}

} // namespace otoric
