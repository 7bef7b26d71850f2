#include <doctest.h>

#include <algorithm>

#include "otoric/cycles.hpp"
#include "otoric/errors.hpp"
#include "otoric/fixtures.hpp"
#include "support/random_graphs.hpp"

using namespace otoric;

namespace {

WeightedOrientedGraph fixture(const char* name) { return parse_graph(*fixture_document(name)); }

WeightedOrientedGraph ones_theta() {
  return WeightedOrientedGraph::from_ids({{"v1", 1}, {"v2", 1}, {"v3", 1}, {"v4", 1}},
                                         {{"e1", "v1", "v2"}, {"e2", "v2", "v3"}, {"e3", "v1", "v3"},
                                          {"e4", "v2", "v4"}, {"e5", "v1", "v4"}});
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

TEST_CASE("enumerate_cycles counts") {
  CHECK(enumerate_cycles(fixture("c8")).size() == 1);
  CHECK(enumerate_cycles(fixture("c8")).front().length() == 8);
  CHECK(enumerate_cycles(fixture("bowtie")).size() == 2);
  CHECK(enumerate_cycles(fixture("theta")).size() == 3);
  CHECK(enumerate_cycles(fixture("c8-pendant")).size() == 1);
}

TEST_CASE("theta cycle determinants") {
  const auto g = fixture("theta");
  std::vector<long> dets;
  for (const auto& c : enumerate_cycles(g)) dets.push_back(BigInt(abs(cycle_det(c))).get_si());
  CHECK(dets == std::vector<long>{6, 9, 3});
}

TEST_CASE("is_balanced") {
  const auto c8 = fixture("c8");
  CHECK(is_balanced(enumerate_cycles(c8).front()));
  const auto c4 = WeightedOrientedGraph::from_ids({{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}},
                                                  {{"e1", "a", "b"}, {"e2", "c", "b"}, {"e3", "c", "d"}, {"e4", "a", "d"}});
  CHECK(is_balanced(enumerate_cycles(c4).front()));
  const auto three = fixture("three-unbalanced");
  for (const auto& c : enumerate_cycles(three)) CHECK_FALSE(is_balanced(c));
}

TEST_CASE("usual labelling matrices") {
  const auto g = fixture("c8");
  const auto c = enumerate_cycles(g).front();
  CHECK(usual_labelling_matrix(c, 0, Direction::Forward) == incidence_matrix(g));

  const auto e = WeightedOrientedGraph::from_ids({{"a", 1}, {"b", 5}}, {{"e1", "a", "b"}});
  const auto p = make_path(e, {0, 1});
  CHECK(usual_labelling_matrix(p, 0) == IntMatrix::from_rows({{1}, {5}}));
  CHECK(usual_labelling_matrix(p, 1) == IntMatrix::from_rows({{5}, {1}}));

  const auto bw = fixture("bowtie-weighted");
  const auto t = enumerate_cycles(bw).front();
  const IntMatrix m1 = usual_labelling_matrix(t, t.vertices[0], Direction::Forward);
  const IntMatrix m2 = usual_labelling_matrix(t, t.vertices[1], Direction::Forward);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(m2(i, j) == m1((i + 1) % 3, (j + 1) % 3));

  CHECK_THROWS_AS(usual_labelling_matrix(t, 4, Direction::Forward), ArgumentError);
  const auto dumbbell = fixture("dumbbell");
  const auto path3 = make_path(dumbbell, {1, 0, 3});
  CHECK_THROWS_AS(usual_labelling_matrix(path3, 0), ArgumentError);
}

TEST_CASE("relabelled keeps the cycle") {
  const auto g = fixture("c8");
  const auto c = enumerate_cycles(g).front();
  const auto r = c.relabelled(3, Direction::Reverse);
  CHECK(r.vertices.front() == 3);
  CHECK(r.vertices[1] == 2);
  CHECK(r.canonical() == c);
  CHECK(sorted(r.edges) == sorted(c.edges));
}

TEST_CASE("find_circuit_supports examples") {
  const auto c8 = fixture("c8"), bowtie = fixture("bowtie"), theta1 = ones_theta(), dumbbell = fixture("dumbbell"),
             theta = fixture("theta");
  auto s = find_circuit_supports(c8);
  REQUIRE(s.size() == 1);
  CHECK(s[0].kind == SupportKind::BalancedCycle);

  s = find_circuit_supports(bowtie);
  REQUIRE(s.size() == 1);
  CHECK(s[0].kind == SupportKind::SharedVertex);
  CHECK(s[0].cycles[0].vertices.front() == 0);
  CHECK(s[0].cycles[1].vertices.front() == 0);

  s = find_circuit_supports(theta1);
  REQUIRE(s.size() == 1);
  CHECK(s[0].kind == SupportKind::BalancedCycle);
  CHECK(s[0].cycles[0].length() == 4);

  s = find_circuit_supports(dumbbell);
  REQUIRE(s.size() == 1);
  CHECK(s[0].kind == SupportKind::PathConnected);
  CHECK(s[0].path->length() == 1);

  s = find_circuit_supports(theta);
  CHECK(s.size() == 3);
  for (const auto& x : s) CHECK(x.kind == SupportKind::SharedPath);
}

TEST_CASE("connecting paths are all enumerated") {
  // two triangles joined through a square: two routes between them
  const auto g = WeightedOrientedGraph::from_ids(
      {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}, {"e", 1}, {"f", 1}, {"x", 1}, {"y", 1}},
      {{"e1", "a", "b"}, {"e2", "b", "c"}, {"e3", "a", "c"}, {"e4", "c", "x"}, {"e5", "c", "y"},
       {"e6", "x", "d"}, {"e7", "y", "d"}, {"e8", "d", "e"}, {"e9", "e", "f"}, {"e10", "d", "f"}});
  const auto cycles = enumerate_cycles(g);
  std::vector<CycleSubgraph> tri;
  for (const auto& c : cycles)
    if (c.length() == 3) tri.push_back(c);
  REQUIRE(tri.size() == 2);
  CHECK(connecting_paths(g, tri[0], tri[1]).size() == 2);
  std::size_t path_connected = 0;
  for (const auto& s : find_circuit_supports(g)) path_connected += s.kind == SupportKind::PathConnected;
  CHECK(path_connected == 2);
}

TEST_CASE("two shared segments are reported, not guessed") {
  // hexagon a..f and the 8-cycle a b g c d e h f share the segments f-a-b and c-d-e
  const auto g = WeightedOrientedGraph::from_ids(
      {{"a", 2}, {"b", 1}, {"c", 1}, {"d", 1}, {"e", 1}, {"f", 1}, {"g", 3}, {"h", 1}},
      {{"e1", "a", "b"}, {"e2", "b", "c"}, {"e3", "c", "d"}, {"e4", "d", "e"}, {"e5", "e", "f"}, {"e6", "f", "a"},
       {"e7", "b", "g"}, {"e8", "g", "c"}, {"e9", "e", "h"}, {"e10", "h", "f"}});
  const auto hexagon = make_cycle(g, {0, 1, 2, 3, 4, 5});
  const auto octagon = make_cycle(g, {0, 1, 6, 2, 3, 4, 7, 5});
  REQUIRE_FALSE(is_balanced(hexagon));
  REQUIRE_FALSE(is_balanced(octagon));
  std::vector<std::string> diag;
  find_circuit_supports(g, &diag);
  CHECK_FALSE(diag.empty());
}

TEST_CASE("support invariants on random graphs") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto g = testgen::random_graph(seed);
    const auto cycles = enumerate_cycles(g);
    for (const auto& c : cycles) {
      CHECK(c.length() >= 3);
      CHECK(c.canonical() == c);
      for (std::size_t i = 0; i < c.length(); ++i) {
        const auto& e = g.edge(c.edges[i]);
        const std::size_t u = c.vertices[i], v = c.vertices[(i + 1) % c.length()];
        CHECK(((e.tail == u && e.head == v) || (e.tail == v && e.head == u)));
      }
      for (std::size_t v : c.vertices)
        for (Direction d : {Direction::Forward, Direction::Reverse})
          CHECK((sgn(det(usual_labelling_matrix(c, v, d))) == 0) == is_balanced(c));
    }
    for (const auto& s : find_circuit_supports(g)) {
      if (s.kind == SupportKind::BalancedCycle) {
        CHECK(is_balanced(s.cycles[0]));
        continue;
      }
      CHECK_FALSE(is_balanced(s.cycles[0]));
      CHECK_FALSE(is_balanced(s.cycles[1]));
      if (s.kind == SupportKind::SharedPath) {
        std::vector<std::size_t> expect;
        for (auto e : s.cycles[0].edges)
          if (!s.cycles[1].contains_edge(e)) expect.push_back(e);
        for (auto e : s.cycles[1].edges)
          if (!s.cycles[0].contains_edge(e)) expect.push_back(e);
        CHECK(sorted(s.outer->edges) == sorted(expect));
        CHECK_FALSE(is_balanced(*s.outer));
      }
    }
  }
}
