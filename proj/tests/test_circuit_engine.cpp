#include <doctest.h>

#include <algorithm>
#include <set>

#include "otoric/circuit_engine.hpp"
#include "otoric/errors.hpp"
#include "otoric/fixtures.hpp"
#include "otoric/oracle.hpp"
#include "support/random_graphs.hpp"
#include "support/rational_kernel.hpp"

using namespace otoric;

namespace {

WeightedOrientedGraph fixture(const char* name) { return parse_graph(*fixture_document(name)); }

WeightedOrientedGraph ones_c4() {
  return WeightedOrientedGraph::from_ids({{"v1", 1}, {"v2", 1}, {"v3", 1}, {"v4", 1}},
                                         {{"e1", "v1", "v2"}, {"e2", "v2", "v3"}, {"e3", "v3", "v4"}, {"e4", "v1", "v4"}});
}

WeightedOrientedGraph ones_theta() {
  return WeightedOrientedGraph::from_ids({{"v1", 1}, {"v2", 1}, {"v3", 1}, {"v4", 1}},
                                         {{"e1", "v1", "v2"}, {"e2", "v2", "v3"}, {"e3", "v1", "v3"},
                                          {"e4", "v2", "v4"}, {"e5", "v1", "v4"}});
}

// C4 (even, unbalanced with these weights) glued at v1 to a triangle.
WeightedOrientedGraph square_and_triangle(long w2) {
  return WeightedOrientedGraph::from_ids(
      {{"v1", 1}, {"v2", w2}, {"v3", 1}, {"v4", 1}, {"v5", 1}, {"v6", 1}},
      {{"e1", "v1", "v2"}, {"e2", "v2", "v3"}, {"e3", "v3", "v4"}, {"e4", "v1", "v4"},
       {"e5", "v1", "v5"}, {"e6", "v5", "v6"}, {"e7", "v1", "v6"}});
}

IntVector ints(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::string render(const WeightedOrientedGraph& g, const IntVector& v) {
  return render_binomial(Binomial::from_vector(v), g.edge_ids());
}

} // namespace

TEST_CASE("balanced cycle generator") {
  const auto g = fixture("c8");
  const auto c = enumerate_cycles(g).front();
  GeneratorTrace tr;
  const auto v = balanced_cycle_generator(c, &tr);
  CHECK(tr.minors == ints({252, 84, 42, 42, 1512, 1512, 252, 252}));
  CHECK(tr.d == 42);
  CHECK(v.exponents == ints({6, -2, 1, -1, 36, -36, 6, -6}));
  CHECK(v.kind == SupportKind::BalancedCycle);
  CHECK(render(g, v.exponents) == "e1^6*e3*e5^36*e7^6 - e2^2*e4*e6^36*e8^6");

  const auto c4 = ones_c4();
  const auto v4 = balanced_cycle_generator(enumerate_cycles(c4).front());
  CHECK(v4.exponents == ints({1, -1, 1, -1}));
  CHECK(render(c4, v4.exponents) == "e1*e3 - e2*e4");

  const auto tri = fixture("triangle");
  CHECK_THROWS_AS(balanced_cycle_generator(enumerate_cycles(tri).front()), UnbalancedCycleError);
}

TEST_CASE("shared vertex generator") {
  const auto bowtie = fixture("bowtie");
  auto cycles = enumerate_cycles(bowtie);
  GeneratorTrace tr;
  auto v = shared_vertex_generator(cycles[0], cycles[1], &tr);
  CHECK(*tr.p == 2);
  CHECK(*tr.q == 2);
  CHECK(tr.d == 2);
  CHECK(v.exponents == ints({1, -1, 1, -1, 1, -1}));
  CHECK(render(bowtie, v.exponents) == "e1*e3*e5 - e2*e4*e6");

  const auto weighted = fixture("bowtie-weighted");
  cycles = enumerate_cycles(weighted);
  v = shared_vertex_generator(cycles[0], cycles[1], &tr);
  CHECK(abs(*tr.q) == 3);
  CHECK(abs(*tr.p) == 2);
  CHECK(v.exponents == ints({2, -2, 4, -3, 3, -3}));
  CHECK(render(weighted, v.exponents) == "e1^2*e3^4*e5^3 - e2^2*e4^3*e6^3");
  CHECK(oracle::primitive_kernel_vector(incidence_matrix(weighted)) == v.exponents);

  const auto bal = square_and_triangle(1);
  cycles = enumerate_cycles(bal);
  REQUIRE(cycles.size() == 2);
  CHECK_THROWS_AS(shared_vertex_generator(cycles[0], cycles[1]), UnbalancedCycleRequiredError);

  const auto theta = fixture("theta");
  cycles = enumerate_cycles(theta);
  CHECK_THROWS_AS(shared_vertex_generator(cycles[0], cycles[1]), SupportShapeError);
}

TEST_CASE("path connected generator") {
  const auto g = fixture("dumbbell");
  const auto s = find_circuit_supports(g);
  REQUIRE(s.size() == 1);
  GeneratorTrace tr;
  const auto v = path_connected_generator(s[0].cycles[0], *s[0].path, s[0].cycles[1], &tr);
  CHECK(*tr.p == 2);
  CHECK(*tr.q == 2);
  CHECK(tr.raw == ints({2, -2, 2, -4, 2, -2, 2}));
  CHECK(tr.d == 2);
  CHECK(v.exponents == ints({1, -1, 1, -2, 1, -1, 1}));
  CHECK(render(g, v.exponents) == "e1*e3*e5*e7 - e2*e4^2*e6");

  // k = 0: the path is a single vertex
  const PathSubgraph empty{&g, {s[0].path->vertices.front()}, {}};
  CHECK_THROWS_AS(path_connected_generator(s[0].cycles[0], empty, s[0].cycles[1]), SupportShapeError);

  // square + bridge + triangle with a balanced square
  const auto h = WeightedOrientedGraph::from_ids(
      {{"v1", 1}, {"v2", 1}, {"v3", 1}, {"v4", 1}, {"v5", 1}, {"v6", 1}, {"v7", 1}},
      {{"e1", "v1", "v2"}, {"e2", "v2", "v3"}, {"e3", "v3", "v4"}, {"e4", "v1", "v4"}, {"e5", "v1", "v5"},
       {"e6", "v5", "v6"}, {"e7", "v6", "v7"}, {"e8", "v5", "v7"}});
  const auto hc = enumerate_cycles(h);
  REQUIRE(hc.size() == 2);
  CHECK_THROWS_AS(path_connected_generator(hc[0], make_path(h, {0, 4}), hc[1]), UnbalancedCycleRequiredError);

  // path running through a cycle vertex
  const auto bad = WeightedOrientedGraph::from_ids(
      {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}, {"e", 1}, {"f", 1}},
      {{"e1", "a", "b"}, {"e2", "b", "c"}, {"e3", "a", "c"}, {"e4", "d", "e"}, {"e5", "e", "f"}, {"e6", "d", "f"},
       {"e7", "a", "d"}, {"e8", "b", "d"}});
  const auto t1 = make_cycle(bad, {0, 1, 2}), t2 = make_cycle(bad, {3, 4, 5});
  CHECK_THROWS_AS(path_connected_generator(t1, make_path(bad, {1, 0, 3}), t2), SupportShapeError);
}

TEST_CASE("shared path generator") {
  const auto g = fixture("theta");
  const auto s = find_circuit_supports(g);
  REQUIRE(!s.empty());
  GeneratorTrace tr;
  const auto v = shared_path_generator(s[0].cycles[0], s[0].cycles[1], *s[0].path, *s[0].outer, &tr);
  CHECK(*tr.q == 6);
  CHECK(*tr.p == 9);
  CHECK(*tr.s == 3);
  CHECK(tr.minors == ints({1, 2, 4, 1, 5, 1}));
  CHECK(tr.d == 3);
  CHECK(v.exponents == ints({1, -2, 12, -3, -10, 2}));
  CHECK(render(g, v.exponents) == "e1*e3^12*e6^2 - e2^2*e4^3*e5^10");

  const auto w = fixture("theta-weighted");
  const auto ws = find_circuit_supports(w);
  REQUIRE(ws.size() == 3);  // all three cycles unbalanced; one binomial
  CHECK(circuits(w).size() == 1);
  const auto wv = generator_for(ws[0], &tr);
  CHECK(abs(*tr.q) == 3);
  CHECK(abs(*tr.p) == 2);
  CHECK(abs(*tr.s) == 1);
  CHECK(tr.d == 1);
  CHECK(wv.exponents == ints({1, 2, -4, -3, 3}));
  CHECK(render(w, wv.exponents) == "e1*e2^2*e5^3 - e3^4*e4^3");
  CHECK(oracle::primitive_kernel_vector(incidence_matrix(w)) == wv.exponents);

  const auto ones = ones_theta();
  const auto oc = enumerate_cycles(ones);
  std::vector<CycleSubgraph> tri, sq;
  for (const auto& c : oc) (c.length() == 3 ? tri : sq).push_back(c);
  REQUIRE(tri.size() == 2);
  REQUIRE(sq.size() == 1);
  CHECK_THROWS_AS(shared_path_generator(tri[0], tri[1], make_path(ones, {0, 1}), sq[0]), BalancedOuterCycleError);
}

TEST_CASE("circuits examples") {
  const auto tri = fixture("triangle");
  CHECK(circuits(tri).empty());

  const auto c8 = fixture("c8");
  auto cs = circuits(c8);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].vector.exponents == ints({6, -2, 1, -1, 36, -36, 6, -6}));

  const auto bowtie = fixture("bowtie");
  cs = circuits(bowtie);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].vector.kind == SupportKind::SharedVertex);

  const auto theta = fixture("theta");
  cs = circuits(theta);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].supports.size() == 3);
}

TEST_CASE("gcd_normalize and canonical_sign") {
  CHECK(gcd_normalize(ints({252, -84, 42, -42, 1512, -1512, 252, -252})) == ints({6, -2, 1, -1, 36, -36, 6, -6}));
  CHECK(gcd_normalize(ints({1, -1})) == ints({1, -1}));
  CHECK(gcd_normalize(ints({0, 4, -6})) == ints({0, 2, -3}));
  CHECK_THROWS_AS(gcd_normalize(ints({0, 0})), ArgumentError);
  CHECK(canonical_sign(ints({0, -1, 2})) == ints({0, 1, -2}));
}

TEST_CASE("render_binomial") {
  CHECK(render_binomial(Binomial::from_vector(ints({1, -1, 1, -1})), {"e1", "e2", "e3", "e4"}) == "e1*e3 - e2*e4");
  CHECK(render_binomial(Binomial::from_vector(ints({2, 0})), {"x", "y"}) == "x^2 - 1");
  const auto b = Binomial::from_vector(ints({3, -2, 0}));
  CHECK(b.plus.at(0) == 3);
  CHECK(b.minus.at(1) == 2);
  CHECK_FALSE(b.plus.contains(2));
}

TEST_CASE("serial and parallel circuits agree") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto g = testgen::random_graph(seed);
    const auto a = circuits(g), b = circuits_serial(g);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].vector.exponents == b[i].vector.exponents);
  }
}

TEST_CASE("generator invariants on random graphs") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto g = testgen::random_graph(seed);
    const IntMatrix a = incidence_matrix(g);
    const auto info = structural_queries(g);
    for (const auto& c : circuits(g)) {
      const auto& v = c.vector.exponents;
      CHECK(kernel_contains(a, v));
      CHECK(content(v) == 1);

      // support equals the support's edge set
      std::vector<std::size_t> nz;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) nz.push_back(i);
      CHECK(nz == c.supports.front().edge_set());

      // leaf edges never appear
      for (std::size_t e : nz) {
        CHECK_FALSE(info.leaves.contains(g.edge(e).tail));
        CHECK_FALSE(info.leaves.contains(g.edge(e).head));
      }

      // signs alternate through every vertex of degree 2 in the support
      std::vector<std::vector<std::size_t>> at(g.vertex_count());
      for (std::size_t e : nz) {
        at[g.edge(e).tail].push_back(e);
        at[g.edge(e).head].push_back(e);
      }
      for (const auto& es : at)
        if (es.size() == 2) CHECK(sgn(v[es[0]]) == -sgn(v[es[1]]));
    }
  }
}

TEST_CASE("restriction to edge subsets") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = testgen::random_graph(seed);
    std::vector<std::size_t> keep;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      if ((e * 7 + seed) % 3 != 0) keep.push_back(e);
    CHECK(verify_restriction(g, keep));

    // same statement through the formulas
    const auto h = g.edge_subgraph(keep);
    std::set<IntVector> lhs, rhs;
    for (const auto& c : circuits(h)) {
      IntVector full(g.edge_count());
      for (std::size_t i = 0; i < keep.size(); ++i) full[keep[i]] = c.vector.exponents[i];
      lhs.insert(canonical_sign(full));
    }
    for (const auto& c : circuits(g)) {
      bool inside = true;
      for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (sgn(c.vector.exponents[i]) != 0 && !std::binary_search(keep.begin(), keep.end(), i)) inside = false;
      if (inside) rhs.insert(c.vector.exponents);
    }
    CHECK(lhs == rhs);
  }
}
