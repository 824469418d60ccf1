// Shared instance builders for the test suite: the cyclic golden example,
// trivial-group micro-graphs, and randomized symmetric instances.
#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssg/model.hpp"

namespace corpus {

using namespace ssg;

inline SelfSimilarGraph must_validate(Graph graph, FinGroup group,
                                      GraphAction action, Cocycle cocycle) {
  ValidationResult r = validate(std::move(graph), std::move(group),
                                std::move(action), std::move(cocycle));
  if (!r.ok()) {
    std::string msg = "corpus instance failed validation:";
    for (const Violation& v : r.violations)
      msg += " [" + v.code + ": " + v.detail + "]";
    throw std::logic_error(msg);
  }
  return std::move(*r.value);
}

// Trivial group, identity action, identity restriction.
inline SelfSimilarGraph trivial_ssg(Graph graph) {
  GraphAction action;
  std::vector<VertexId> vid(graph.vertex_count());
  for (VertexId v = 0; v < graph.vertex_count(); ++v) vid[v] = v;
  std::vector<EdgeId> eid(graph.edge_count());
  for (EdgeId e = 0; e < graph.edge_count(); ++e) eid[e] = e;
  action.vertex_perm = {vid};
  action.edge_perm = {eid};
  Cocycle cocycle;
  cocycle.table = {std::vector<GroupElem>(graph.edge_count(), 0)};
  return must_validate(std::move(graph), FinGroup::trivial(),
                       std::move(action), std::move(cocycle));
}

// Central vertex v fed by a cyclically symmetric ring w_1..w_n: edges
// e_i (w_i -> v), f_i (w_{i+1} -> w_i), g_i (w_i -> w_{i+1}) in the
// receiving sense r(e_i) = v, r(f_i) = w_i, r(g_i) = w_{i+1}. Z/n shifts
// all indices; the restriction of k past any edge is k.
inline SelfSimilarGraph cyclic_ring(int n) {
  Graph graph;
  graph.add_vertex("v");
  for (int i = 1; i <= n; ++i) graph.add_vertex("w" + std::to_string(i));
  auto w = [&](int i) { return 1 + ((i - 1) % n + n) % n; };  // index of w_i
  std::vector<EdgeId> e(n), f(n), g(n);
  for (int i = 1; i <= n; ++i)
    e[i - 1] = graph.add_edge("e" + std::to_string(i), w(i), 0);
  for (int i = 1; i <= n; ++i)
    f[i - 1] = graph.add_edge("f" + std::to_string(i), w(i + 1), w(i));
  for (int i = 1; i <= n; ++i)
    g[i - 1] = graph.add_edge("g" + std::to_string(i), w(i), w(i + 1));

  FinGroup group = FinGroup::cyclic(n);
  GraphAction action;
  action.vertex_perm.assign(n, std::vector<VertexId>(graph.vertex_count()));
  action.edge_perm.assign(n, std::vector<EdgeId>(graph.edge_count()));
  Cocycle cocycle;
  cocycle.table.assign(n, std::vector<GroupElem>(graph.edge_count()));
  for (int k = 0; k < n; ++k) {
    action.vertex_perm[k][0] = 0;
    for (int i = 1; i <= n; ++i) action.vertex_perm[k][w(i)] = w(i + k);
    for (int i = 1; i <= n; ++i) {
      action.edge_perm[k][e[i - 1]] = e[(i - 1 + k) % n];
      action.edge_perm[k][f[i - 1]] = f[(i - 1 + k) % n];
      action.edge_perm[k][g[i - 1]] = g[(i - 1 + k) % n];
    }
    for (EdgeId x = 0; x < graph.edge_count(); ++x) cocycle.table[k][x] = k;
  }
  return must_validate(std::move(graph), std::move(group), std::move(action),
                       std::move(cocycle));
}

inline Graph one_loop() {
  Graph g;
  g.add_vertex("v");
  g.add_edge("a", "v", "v");
  return g;
}

inline Graph two_loops() {
  Graph g;
  g.add_vertex("v");
  g.add_edge("a", "v", "v");
  g.add_edge("b", "v", "v");
  return g;
}

inline Graph two_cycle() {
  Graph g;
  g.add_vertex("v");
  g.add_vertex("w");
  g.add_edge("a", "w", "v");
  g.add_edge("b", "v", "w");
  return g;
}

inline Graph disconnected_loops() {
  Graph g;
  g.add_vertex("u");
  g.add_vertex("w");
  g.add_edge("a", "u", "u");
  g.add_edge("b", "w", "w");
  return g;
}

// Z/2 on two loops at one vertex, trivial action. With flat = true the
// nonidentity element restricts to the identity past every edge, killing
// pseudo-freeness; with flat = false the restriction of g is g, which is
// pseudo-free but fixes every infinite path.
inline SelfSimilarGraph z2_two_loops(bool flat) {
  Graph graph = two_loops();
  FinGroup group = FinGroup::cyclic(2);
  GraphAction action;
  action.vertex_perm = {{0}, {0}};
  action.edge_perm = {{0, 1}, {0, 1}};
  Cocycle cocycle;
  cocycle.table = {{0, 0}, flat ? std::vector<GroupElem>{0, 0}
                                : std::vector<GroupElem>{1, 1}};
  return must_validate(std::move(graph), std::move(group), std::move(action),
                       std::move(cocycle));
}

// Random source-free graph on a trivial group: every vertex receives at
// least one edge, then extra edges up to the requested count.
inline SelfSimilarGraph random_trivial(std::mt19937& rng, int max_vertices = 6,
                                       int max_edges = 10) {
  std::uniform_int_distribution<int> nv_dist(1, max_vertices);
  const int nv = nv_dist(rng);
  Graph g;
  for (int i = 0; i < nv; ++i) g.add_vertex("v" + std::to_string(i));
  std::uniform_int_distribution<int> v_dist(0, nv - 1);
  int ne = std::uniform_int_distribution<int>(nv, max_edges)(rng);
  for (int i = 0; i < ne; ++i) {
    VertexId ran = i < nv ? i : v_dist(rng);  // first pass covers every vertex
    g.add_edge("x" + std::to_string(i), v_dist(rng), ran);
  }
  return trivial_ssg(std::move(g));
}

// Random Z/n-symmetric source-free instance built orbit by orbit. Vertex
// orbits have size dividing n with the canonical shift; every edge orbit
// has full size n with k * e_j = e_{j+k}; the restriction of k past any
// edge is k (always a valid cocycle for shift actions).
inline SelfSimilarGraph random_cyclic(std::mt19937& rng, int n,
                                      int max_vertex_orbits = 3,
                                      int extra_edge_orbits = 3) {
  std::vector<int> divisors;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);

  Graph graph;
  std::vector<std::vector<VertexId>> orbit;  // orbit -> its vertices in order
  const int norb =
      std::uniform_int_distribution<int>(1, max_vertex_orbits)(rng);
  for (int o = 0; o < norb; ++o) {
    int d = divisors[std::uniform_int_distribution<std::size_t>(
        0, divisors.size() - 1)(rng)];
    std::vector<VertexId> vs;
    for (int i = 0; i < d; ++i)
      vs.push_back(graph.add_vertex("v" + std::to_string(o) + "_" +
                                    std::to_string(i)));
    orbit.push_back(std::move(vs));
  }

  // edge orbit t: edges t_j with d in orbit o1 at offset i1+j, r in orbit
  // o2 at offset i2+j
  struct EdgeOrbit {
    int o1, i1, o2, i2;
    std::vector<EdgeId> ids;
  };
  std::vector<EdgeOrbit> eorbits;
  auto add_edge_orbit = [&](int o1, int i1, int o2, int i2) {
    EdgeOrbit eo{o1, i1, o2, i2, {}};
    int t = static_cast<int>(eorbits.size());
    for (int j = 0; j < n; ++j) {
      int d1 = static_cast<int>(orbit[o1].size());
      int d2 = static_cast<int>(orbit[o2].size());
      eo.ids.push_back(graph.add_edge(
          "x" + std::to_string(t) + "_" + std::to_string(j),
          orbit[o1][(i1 + j) % d1], orbit[o2][(i2 + j) % d2]));
    }
    eorbits.push_back(std::move(eo));
  };
  std::uniform_int_distribution<int> o_dist(0, norb - 1);
  // source-freeness: one receiving orbit per vertex orbit
  for (int o = 0; o < norb; ++o) {
    int o1 = o_dist(rng);
    add_edge_orbit(o1,
                   std::uniform_int_distribution<int>(
                       0, static_cast<int>(orbit[o1].size()) - 1)(rng),
                   o, 0);
  }
  int extra = std::uniform_int_distribution<int>(0, extra_edge_orbits)(rng);
  for (int t = 0; t < extra; ++t) {
    int o1 = o_dist(rng), o2 = o_dist(rng);
    add_edge_orbit(o1,
                   std::uniform_int_distribution<int>(
                       0, static_cast<int>(orbit[o1].size()) - 1)(rng),
                   o2,
                   std::uniform_int_distribution<int>(
                       0, static_cast<int>(orbit[o2].size()) - 1)(rng));
  }

  FinGroup group = FinGroup::cyclic(n);
  GraphAction action;
  action.vertex_perm.assign(n, std::vector<VertexId>(graph.vertex_count()));
  action.edge_perm.assign(n, std::vector<EdgeId>(graph.edge_count()));
  Cocycle cocycle;
  cocycle.table.assign(n, std::vector<GroupElem>(graph.edge_count()));
  for (int k = 0; k < n; ++k) {
    for (int o = 0; o < norb; ++o) {
      int d = static_cast<int>(orbit[o].size());
      for (int i = 0; i < d; ++i)
        action.vertex_perm[k][orbit[o][i]] = orbit[o][(i + k) % d];
    }
    for (const EdgeOrbit& eo : eorbits)
      for (int j = 0; j < n; ++j)
        action.edge_perm[k][eo.ids[j]] = eo.ids[(j + k) % n];
    for (EdgeId e = 0; e < graph.edge_count(); ++e) cocycle.table[k][e] = k;
  }
  return must_validate(std::move(graph), std::move(group), std::move(action),
                       std::move(cocycle));
}

}  // namespace corpus
