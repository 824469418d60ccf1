#include "ssg/analysis.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "ssg/errors.hpp"

namespace ssg {

namespace {

// Orbit classes of E-vertices, minimal vertex as representative. Local to
// this module so the reachability and circuit checks stay independent of
// build_quotient.
struct VertexClasses {
  std::vector<int> cls;       // E-vertex -> class
  std::vector<VertexId> rep;  // class -> representative
};

VertexClasses vertex_classes(const SelfSimilarGraph& ssg) {
  const Graph& graph = ssg.graph();
  VertexClasses out;
  out.cls.assign(graph.vertex_count(), -1);
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (out.cls[v] != -1) continue;
    int c = static_cast<int>(out.rep.size());
    out.rep.push_back(v);
    for (VertexId w : ssg.vertex_orbit(v)) out.cls[w] = c;
  }
  return out;
}

// Lift class-composable E-edges (consecutive domains and ranges agree up to
// orbit) to a composable E-path by twisting each edge onto the domain
// reached so far.
Path lift_class_edges(const SelfSimilarGraph& ssg,
                      const std::vector<EdgeId>& origins) {
  const Graph& graph = ssg.graph();
  std::vector<EdgeId> lifted{origins.front()};
  for (std::size_t i = 1; i < origins.size(); ++i) {
    auto g = ssg.transporter(graph.ran(origins[i]), graph.dom(lifted.back()));
    lifted.push_back(ssg.act_edge(g.value(), origins[i]));
  }
  return Path::of(graph, std::move(lifted));
}

}  // namespace

std::vector<Circuit> find_circuits(const Graph& g, std::size_t cap) {
  std::vector<Circuit> out;
  const int nv = g.vertex_count();
  std::vector<char> onstack(nv, 0);
  std::vector<EdgeId> stack;

  for (VertexId s = 0; s < nv; ++s) {
    // circuits whose minimal range vertex is s
    std::function<void(VertexId)> dfs = [&](VertexId u) {
      for (EdgeId e : g.in_edges(u)) {
        VertexId w = g.dom(e);
        if (w == s) {
          stack.push_back(e);
          out.push_back({stack});
          stack.pop_back();
          if (out.size() > cap)
            throw ResourceExceededError("circuit enumeration exceeded cap");
        } else if (w > s && !onstack[w]) {
          onstack[w] = 1;
          stack.push_back(e);
          dfs(w);
          stack.pop_back();
          onstack[w] = 0;
        }
      }
    };
    dfs(s);
  }
  return out;
}

std::vector<VertexId> circuit_vertices(const Graph& g, const Circuit& c) {
  std::vector<VertexId> out;
  for (EdgeId e : c.edges) out.push_back(g.ran(e));
  return out;
}

bool has_entry(const Graph& g, const Circuit& c) {
  for (VertexId v : circuit_vertices(g, c))
    if (g.in_degree(v) >= 2) return true;
  return false;
}

std::vector<char> reachable_from(const Graph& g, VertexId v) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<VertexId> queue{v};
  seen[v] = 1;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (EdgeId e : g.in_edges(u)) {
      VertexId w = g.dom(e);
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

std::optional<GCircuitWitness> find_g_circuit(const SelfSimilarGraph& ssg) {
  const Graph& graph = ssg.graph();
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    std::vector<EdgeId> parent(graph.vertex_count(), -1);
    std::vector<char> seen(graph.vertex_count(), 0);
    std::deque<VertexId> queue{v};
    seen[v] = 1;
    auto build = [&](VertexId u, EdgeId last) {
      std::vector<EdgeId> edges{last};
      while (u != v) {
        edges.push_back(parent[u]);
        u = graph.ran(parent[u]);
      }
      std::reverse(edges.begin(), edges.end());
      return Path::of(graph, std::move(edges));
    };
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (EdgeId e : graph.in_edges(u)) {
        VertexId w = graph.dom(e);
        if (auto g = ssg.transporter(v, w))
          return GCircuitWitness{build(u, e), *g};
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = e;
          queue.push_back(w);
        }
      }
    }
  }
  return std::nullopt;
}

GEntryCheck g_circuits_all_have_entry(const SelfSimilarGraph& ssg) {
  const Graph& graph = ssg.graph();
  VertexClasses vc = vertex_classes(ssg);

  // Orbit-collapsed multigraph keeping every E-edge.
  Graph collapsed;
  for (VertexId r : vc.rep)
    collapsed.add_vertex(graph.vertex_name(r));
  for (EdgeId e = 0; e < graph.edge_count(); ++e)
    collapsed.add_edge(graph.edge(e).name, vc.cls[graph.dom(e)],
                       vc.cls[graph.ran(e)]);

  for (const Circuit& c : find_circuits(collapsed)) {
    // In-degree is constant on orbits, so test it at representatives.
    bool entry = false;
    for (VertexId cls : circuit_vertices(collapsed, c))
      if (graph.in_degree(vc.rep[cls]) >= 2) entry = true;
    if (entry) continue;
    // Lift the entryless class circuit to an explicit G-circuit in E.
    Path path = lift_class_edges(ssg, c.edges);  // collapsed edge ids = E ids
    auto twist = ssg.transporter(path.range(graph), path.domain(graph));
    return {false, GCircuitWitness{std::move(path), twist.value()}};
  }
  return {true, std::nullopt};
}

std::vector<char> vertices_on_g_circuits(const SelfSimilarGraph& ssg) {
  const Graph& graph = ssg.graph();
  VertexClasses vc = vertex_classes(ssg);
  const int nc = static_cast<int>(vc.rep.size());

  std::vector<std::vector<int>> next(nc);
  for (EdgeId e = 0; e < graph.edge_count(); ++e)
    next[vc.cls[graph.ran(e)]].push_back(vc.cls[graph.dom(e)]);

  std::vector<char> on_cycle(nc, 0);
  for (int c = 0; c < nc; ++c) {
    // c on a cycle iff c reachable from c by at least one step
    std::vector<char> seen(nc, 0);
    std::deque<int> queue;
    for (int w : next[c]) {
      if (w == c) on_cycle[c] = 1;
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
    while (!on_cycle[c] && !queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : next[u]) {
        if (w == c) on_cycle[c] = 1;
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }

  std::vector<char> out(graph.vertex_count(), 0);
  for (VertexId v = 0; v < graph.vertex_count(); ++v)
    out[v] = on_cycle[vc.cls[v]];
  return out;
}

ReachabilityRelation g_reaches(const SelfSimilarGraph& ssg) {
  const Graph& graph = ssg.graph();
  VertexClasses vc = vertex_classes(ssg);
  const int nc = static_cast<int>(vc.rep.size());

  // class adjacency under range-to-domain traversal
  std::vector<std::vector<int>> next(nc);
  for (EdgeId e = 0; e < graph.edge_count(); ++e)
    next[vc.cls[graph.ran(e)]].push_back(vc.cls[graph.dom(e)]);

  std::vector<std::vector<char>> creach(nc, std::vector<char>(nc, 0));
  for (int c = 0; c < nc; ++c) {
    std::deque<int> queue{c};
    creach[c][c] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : next[u])
        if (!creach[c][w]) {
          creach[c][w] = 1;
          queue.push_back(w);
        }
    }
  }

  std::vector<std::vector<char>> table(
      graph.vertex_count(), std::vector<char>(graph.vertex_count(), 0));
  for (VertexId v = 0; v < graph.vertex_count(); ++v)
    for (VertexId w = 0; w < graph.vertex_count(); ++w)
      table[v][w] = creach[vc.cls[v]][vc.cls[w]];
  return ReachabilityRelation(std::move(table));
}

namespace {

// A cycle inside the vertex set marked allowed, if one exists.
std::optional<Circuit> cycle_within(const Graph& g,
                                    const std::vector<char>& allowed) {
  const int nv = g.vertex_count();
  std::vector<int> color(nv, 0);  // 0 white, 1 gray, 2 black
  std::vector<EdgeId> stack;
  std::optional<Circuit> found;

  std::function<void(VertexId)> dfs = [&](VertexId u) {
    color[u] = 1;
    for (EdgeId e : g.in_edges(u)) {
      if (found) return;
      VertexId w = g.dom(e);
      if (!allowed[w]) continue;
      if (color[w] == 1) {
        // unwind the stack back to w
        std::vector<EdgeId> cyc{e};
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
          if (g.ran(cyc.front()) == w) break;
          cyc.insert(cyc.begin(), *it);
        }
        found = Circuit{std::move(cyc)};
        return;
      }
      if (color[w] == 0) {
        stack.push_back(e);
        dfs(w);
        stack.pop_back();
        if (found) return;
      }
    }
    color[u] = 2;
  };

  for (VertexId v = 0; v < nv && !found; ++v)
    if (allowed[v] && color[v] == 0) dfs(v);
  return found;
}

CofinalityResult cofinality_check(
    const Graph& g, const std::function<std::vector<char>(VertexId)>& below) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<char> reach = below(v);
    std::vector<char> complement(g.vertex_count());
    for (VertexId w = 0; w < g.vertex_count(); ++w)
      complement[w] = !reach[w];
    if (auto cyc = cycle_within(g, complement))
      return {false, v, std::move(cyc)};
  }
  return {true, std::nullopt, std::nullopt};
}

}  // namespace

CofinalityResult is_cofinal(const Graph& g) {
  if (!g.source_free())
    throw SourcePresentError("is_cofinal: graph has a source");
  return cofinality_check(g, [&](VertexId v) { return reachable_from(g, v); });
}

CofinalityResult is_weakly_g_transitive(const SelfSimilarGraph& ssg) {
  const Graph& graph = ssg.graph();
  if (!ssg.source_free())
    throw SourcePresentError("is_weakly_g_transitive: graph has a source");
  ReachabilityRelation rel = g_reaches(ssg);
  return cofinality_check(graph, [&](VertexId v) {
    std::vector<char> reach(graph.vertex_count());
    for (VertexId w = 0; w < graph.vertex_count(); ++w)
      reach[w] = rel.receives(v, w);
    return reach;
  });
}

GraphAlgebraResult graph_algebra_simple(const Graph& g) {
  for (const Circuit& c : find_circuits(g))
    if (!has_entry(g, c)) return {false, "circuit without entry", c, std::nullopt};
  CofinalityResult cof = is_cofinal(g);
  if (!cof.cofinal)
    return {false, "not cofinal", cof.witness_cycle, cof.witness_vertex};
  return {true, "", std::nullopt, std::nullopt};
}

GraphAlgebraResult graph_algebra_pi_sufficient(const Graph& g) {
  std::vector<Circuit> circuits = find_circuits(g);
  if (circuits.empty())
    return {false, "no circuit", std::nullopt, std::nullopt};
  std::vector<char> on_circuit(g.vertex_count(), 0);
  for (const Circuit& c : circuits) {
    if (!has_entry(g, c))
      return {false, "circuit without entry", c, std::nullopt};
    for (VertexId v : circuit_vertices(g, c)) on_circuit[v] = 1;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<char> reach = reachable_from(g, v);
    bool hit = false;
    for (VertexId w = 0; w < g.vertex_count(); ++w)
      if (reach[w] && on_circuit[w]) hit = true;
    if (!hit)
      return {false, "vertex receives no path from a circuit", std::nullopt, v};
  }
  return {true, "", std::nullopt, std::nullopt};
}

}  // namespace ssg
