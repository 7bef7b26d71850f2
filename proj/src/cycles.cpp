#include "otoric/cycles.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "otoric/errors.hpp"

namespace otoric {

std::optional<std::size_t> CycleSubgraph::position_of(std::size_t vertex) const {
  auto it = std::find(vertices.begin(), vertices.end(), vertex);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

bool CycleSubgraph::contains_edge(std::size_t edge) const {
  return std::find(edges.begin(), edges.end(), edge) != edges.end();
}

CycleSubgraph CycleSubgraph::relabelled(std::size_t start, Direction dir) const {
  auto pos = position_of(start);
  if (!pos) throw ArgumentError("start vertex is not on the cycle");
  const std::size_t m = length();
  CycleSubgraph out{parent, {}, {}};
  out.vertices.reserve(m);
  out.edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (dir == Direction::Forward) {
      out.vertices.push_back(vertices[(*pos + i) % m]);
      out.edges.push_back(edges[(*pos + i) % m]);
    } else {
      out.vertices.push_back(vertices[(*pos + m - i) % m]);
      out.edges.push_back(edges[(*pos + m - i - 1) % m]);
    }
  }
  return out;
}

CycleSubgraph CycleSubgraph::canonical() const {
  const std::size_t m = length();
  const auto pos = static_cast<std::size_t>(std::min_element(vertices.begin(), vertices.end()) -
                                            vertices.begin());
  const std::size_t next = vertices[(pos + 1) % m];
  const std::size_t prev = vertices[(pos + m - 1) % m];
  return relabelled(vertices[pos], next < prev ? Direction::Forward : Direction::Reverse);
}

PathSubgraph PathSubgraph::reversed() const {
  PathSubgraph out{parent, vertices, edges};
  std::reverse(out.vertices.begin(), out.vertices.end());
  std::reverse(out.edges.begin(), out.edges.end());
  return out;
}

CycleSubgraph make_cycle(const WeightedOrientedGraph& g, const std::vector<std::size_t>& vertices) {
  if (vertices.size() < 3) throw ArgumentError("a cycle needs at least 3 vertices");
  CycleSubgraph c{&g, vertices, {}};
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    auto e = g.edge_between(vertices[i], vertices[(i + 1) % vertices.size()]);
    if (!e) throw ArgumentError("consecutive cycle vertices are not adjacent");
    c.edges.push_back(*e);
  }
  return c;
}

PathSubgraph make_path(const WeightedOrientedGraph& g, const std::vector<std::size_t>& vertices) {
  if (vertices.empty()) throw ArgumentError("a path needs at least one vertex");
  PathSubgraph p{&g, vertices, {}};
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    auto e = g.edge_between(vertices[i], vertices[i + 1]);
    if (!e) throw ArgumentError("consecutive path vertices are not adjacent");
    p.edges.push_back(*e);
  }
  return p;
}

CycleSubgraph cycle_from_edges(const WeightedOrientedGraph& g, const std::vector<std::size_t>& edges) {
  std::map<std::size_t, std::vector<std::size_t>> touching;
  for (auto e : edges) {
    touching[g.edge(e).tail].push_back(e);
    touching[g.edge(e).head].push_back(e);
  }
  if (touching.size() < 3 || touching.size() != edges.size())
    throw ArgumentError("edge set is not a single cycle");
  for (const auto& [v, es] : touching)
    if (es.size() != 2) throw ArgumentError("edge set is not a single cycle");

  CycleSubgraph c{&g, {}, {}};
  std::size_t v = touching.begin()->first;
  std::size_t via = touching.begin()->second.front();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    c.vertices.push_back(v);
    c.edges.push_back(via);
    const Edge& e = g.edge(via);
    v = e.tail == v ? e.head : e.tail;
    const auto& pair = touching[v];
    via = pair[0] == via ? pair[1] : pair[0];
  }
  if (v != c.vertices.front()) throw ArgumentError("edge set is not a single cycle");
  return c.canonical();
}

std::vector<CycleSubgraph> enumerate_cycles(const WeightedOrientedGraph& g) {
  const StructuralInfo info = structural_queries(g);
  const std::size_t n = g.vertex_count();
  std::vector<CycleSubgraph> out;
  std::vector<std::size_t> stack;
  std::vector<bool> on_stack(n, false);

  // Rooted at the minimum vertex s, interior restricted to vertices > s; the
  // second < last test keeps one of the two traversal directions.
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t s, std::size_t u) {
    for (const auto& [w, e] : info.adjacency[u]) {
      (void)e;
      if (w == s && stack.size() >= 3 && stack[1] < stack.back()) {
        out.push_back(make_cycle(g, stack));
      } else if (w > s && !on_stack[w]) {
        stack.push_back(w);
        on_stack[w] = true;
        extend(s, w);
        on_stack[w] = false;
        stack.pop_back();
      }
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    stack = {s};
    on_stack[s] = true;
    extend(s, s);
    on_stack[s] = false;
  }
  std::sort(out.begin(), out.end(), [](const CycleSubgraph& a, const CycleSubgraph& b) {
    return a.vertices < b.vertices;
  });
  return out;
}

namespace {

IntMatrix build_labelling(const WeightedOrientedGraph& g, const std::vector<std::size_t>& vs,
                          const std::vector<std::size_t>& es) {
  std::vector<std::string> rl, cl;
  for (auto v : vs) rl.push_back(g.vertex(v).id);
  for (auto e : es) cl.push_back(g.edge(e).id);
  IntMatrix a(vs.size(), es.size(), std::move(rl), std::move(cl));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < es.size(); ++j) a(i, j) = g.incidence(vs[i], es[j]);
  return a;
}

const WeightedOrientedGraph& parent_of(const WeightedOrientedGraph* p) {
  if (p == nullptr) throw ArgumentError("subgraph has no parent graph");
  return *p;
}

} // namespace

IntMatrix labelling_matrix(const CycleSubgraph& c) {
  return build_labelling(parent_of(c.parent), c.vertices, c.edges);
}

IntMatrix labelling_matrix(const PathSubgraph& p) {
  return build_labelling(parent_of(p.parent), p.vertices, p.edges);
}

IntMatrix usual_labelling_matrix(const CycleSubgraph& c, std::size_t start, Direction dir) {
  return labelling_matrix(c.relabelled(start, dir));
}

IntMatrix usual_labelling_matrix(const PathSubgraph& p, std::size_t start) {
  if (p.vertices.empty()) throw ArgumentError("empty path");
  if (p.vertices.front() == start) return labelling_matrix(p);
  if (p.vertices.back() == start) return labelling_matrix(p.reversed());
  throw ArgumentError("start vertex is not an endpoint of the path");
}

BigInt cycle_det(const CycleSubgraph& c) { return det(labelling_matrix(c)); }

bool is_balanced(const CycleSubgraph& c) { return sgn(cycle_det(c)) == 0; }

std::string to_string(SupportKind k) {
  switch (k) {
  case SupportKind::BalancedCycle: return "balanced-cycle";
  case SupportKind::SharedVertex: return "shared-vertex";
  case SupportKind::PathConnected: return "path-connected";
  case SupportKind::SharedPath: return "shared-path";
  }
  return "unknown";
}

std::vector<std::size_t> CircuitSupport::edge_set() const {
  std::set<std::size_t> s;
  for (const auto& c : cycles) s.insert(c.edges.begin(), c.edges.end());
  if (path) s.insert(path->edges.begin(), path->edges.end());
  return {s.begin(), s.end()};
}

std::vector<PathSubgraph> connecting_paths(const WeightedOrientedGraph& g, const CycleSubgraph& from,
                                           const CycleSubgraph& to) {
  const StructuralInfo info = structural_queries(g);
  std::vector<bool> blocked(g.vertex_count(), false), target(g.vertex_count(), false);
  for (auto v : from.vertices) blocked[v] = true;
  for (auto v : to.vertices) {
    if (blocked[v]) throw ArgumentError("connecting_paths: cycles are not vertex-disjoint");
    target[v] = true;
  }

  std::vector<PathSubgraph> out;
  std::vector<std::size_t> stack;
  std::vector<bool> used(g.vertex_count(), false);
  std::function<void(std::size_t)> walk = [&](std::size_t u) {
    for (const auto& [w, e] : info.adjacency[u]) {
      (void)e;
      if (target[w]) {
        stack.push_back(w);
        out.push_back(make_path(g, stack));
        stack.pop_back();
      } else if (!blocked[w] && !used[w]) {
        used[w] = true;
        stack.push_back(w);
        walk(w);
        stack.pop_back();
        used[w] = false;
      }
    }
  };
  for (auto a : from.vertices) {
    stack = {a};
    walk(a);
  }
  return out;
}

namespace {

std::vector<std::size_t> sorted_copy(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

CycleSubgraph anchored_on_edge(const CycleSubgraph& c, std::size_t start, std::size_t first_edge) {
  CycleSubgraph f = c.relabelled(start, Direction::Forward);
  if (f.edges.front() == first_edge) return f;
  CycleSubgraph r = c.relabelled(start, Direction::Reverse);
  if (r.edges.front() == first_edge) return r;
  throw SupportShapeError("edge is not incident with the anchor on this cycle");
}

} // namespace

std::vector<CircuitSupport> find_circuit_supports(const WeightedOrientedGraph& g,
                                                  std::vector<std::string>* diagnostics) {
  const std::vector<CycleSubgraph> cycles = enumerate_cycles(g);
  std::vector<bool> balanced(cycles.size());
  std::vector<std::vector<std::size_t>> vsets, esets;
  for (const auto& c : cycles) {
    balanced[&c - cycles.data()] = is_balanced(c);
    vsets.push_back(sorted_copy(c.vertices));
    esets.push_back(sorted_copy(c.edges));
  }

  std::vector<CircuitSupport> by_kind[4];
  for (std::size_t i = 0; i < cycles.size(); ++i)
    if (balanced[i]) by_kind[0].push_back({SupportKind::BalancedCycle, {cycles[i]}, {}, {}});

  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (balanced[i]) continue;
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (balanced[j]) continue;
      const auto& ci = cycles[i];
      const auto& cj = cycles[j];
      const auto common_v = intersect(vsets[i], vsets[j]);
      const auto common_e = intersect(esets[i], esets[j]);

      if (common_v.empty()) {
        for (auto& p : connecting_paths(g, ci, cj)) {
          CycleSubgraph cm = ci.relabelled(p.vertices.front(), Direction::Forward);
          CycleSubgraph cn = cj.relabelled(p.vertices.back(), Direction::Forward);
          by_kind[2].push_back({SupportKind::PathConnected, {cm, cn}, std::move(p), {}});
        }
        continue;
      }
      if (common_v.size() == 1) {
        by_kind[1].push_back({SupportKind::SharedVertex,
                              {ci.relabelled(common_v[0], Direction::Forward),
                               cj.relabelled(common_v[0], Direction::Forward)},
                              {},
                              {}});
        continue;
      }

      // Shared edges must form one contiguous arc of ci covering exactly the
      // shared vertices.
      const std::size_t m = ci.length();
      std::vector<bool> shared(m);
      for (std::size_t t = 0; t < m; ++t)
        shared[t] = std::binary_search(common_e.begin(), common_e.end(), ci.edges[t]);
      std::size_t runs = 0, start = 0;
      for (std::size_t t = 0; t < m; ++t)
        if (shared[t] && !shared[(t + m - 1) % m]) {
          ++runs;
          start = t;
        }
      const std::size_t k = common_e.size();
      if (runs != 1 || common_v.size() != k + 1) {
        if (diagnostics)
          diagnostics->push_back("unbalanced cycles #" + std::to_string(i) + " and #" +
                                 std::to_string(j) + " meet in " + std::to_string(common_v.size()) +
                                 " vertices and " + std::to_string(k) +
                                 " edges, which is not a single path; skipped");
        continue;
      }

      const CycleSubgraph cm = ci.relabelled(ci.vertices[start], Direction::Forward);
      PathSubgraph p{&g,
                     {cm.vertices.begin(), cm.vertices.begin() + static_cast<long>(k + 1)},
                     {cm.edges.begin(), cm.edges.begin() + static_cast<long>(k)}};
      const CycleSubgraph cn = anchored_on_edge(cj, p.vertices.front(), p.edges.front());

      std::vector<std::size_t> outer_edges;
      std::set_symmetric_difference(esets[i].begin(), esets[i].end(), esets[j].begin(),
                                    esets[j].end(), std::back_inserter(outer_edges));
      const CycleSubgraph outer = cycle_from_edges(g, outer_edges);
      if (is_balanced(outer)) continue;  // its circuit is the balanced outer cycle
      by_kind[3].push_back({SupportKind::SharedPath,
                            {cm, cn},
                            std::move(p),
                            anchored_on_edge(outer, cm.vertices.front(), cm.edges.back())});
    }
  }

  std::vector<CircuitSupport> out;
  for (auto& group : by_kind)
    for (auto& s : group) out.push_back(std::move(s));
  return out;
}

} // namespace otoric
