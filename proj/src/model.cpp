#include "ssg/model.hpp"

#include "ssg/axiom_scan.hpp"

namespace ssg {

namespace {

// Shape and range pass: table sizes match, permutation images and cocycle
// values in range. The exhaustive scans assume this and would index out of
// bounds otherwise.
std::vector<Violation> structural_check(const Graph& graph,
                                        const FinGroup& group,
                                        const GraphAction& action,
                                        const Cocycle& cocycle) {
  std::vector<Violation> out;
  const int n = group.order();
  const int nv = graph.vertex_count();
  const int ne = graph.edge_count();

  auto shape_bad = [&](const auto& table, int rows, int cols) {
    if (static_cast<int>(table.size()) != rows) return true;
    for (const auto& row : table)
      if (static_cast<int>(row.size()) != cols) return true;
    return false;
  };

  if (shape_bad(action.vertex_perm, n, nv))
    out.push_back({"NotAnAction", "vertex action table is not total"});
  if (shape_bad(action.edge_perm, n, ne))
    out.push_back({"NotAnAction", "edge action table is not total"});
  if (shape_bad(cocycle.table, n, ne))
    out.push_back({"CocycleLawViolated", "cocycle table is not total"});
  if (!out.empty()) return out;

  for (GroupElem g = 0; g < n; ++g) {
    for (VertexId v = 0; v < nv; ++v)
      if (action.vertex_perm[g][v] < 0 || action.vertex_perm[g][v] >= nv)
        out.push_back({"NotAnAction", "vertex image out of range at (" +
                                          group.name(g) + "," +
                                          graph.vertex_name(v) + ")"});
    for (EdgeId e = 0; e < ne; ++e) {
      if (action.edge_perm[g][e] < 0 || action.edge_perm[g][e] >= ne)
        out.push_back({"NotAnAction", "edge image out of range at (" +
                                          group.name(g) + "," +
                                          graph.edge(e).name + ")"});
      if (cocycle.table[g][e] < 0 || cocycle.table[g][e] >= n)
        out.push_back({"CocycleLawViolated", "cocycle value out of range at (" +
                                                 group.name(g) + "," +
                                                 graph.edge(e).name + ")"});
    }
  }
  return out;
}

}  // namespace

ValidationResult validate(Graph graph, FinGroup group, GraphAction action,
                          Cocycle cocycle, bool parallel) {
  ValidationResult result;

  auto append = [&](std::vector<Violation> v) {
    result.violations.insert(result.violations.end(),
                             std::make_move_iterator(v.begin()),
                             std::make_move_iterator(v.end()));
  };

  append(parallel ? scan_group_axioms_omp(group)
                  : scan_group_axioms_serial(group));

  auto structural = structural_check(graph, group, action, cocycle);
  if (!structural.empty()) {
    append(std::move(structural));
    return result;
  }

  if (parallel) {
    append(scan_action_axioms_omp(graph, group, action));
    append(scan_cocycle_axioms_omp(graph, group, action, cocycle));
  } else {
    append(scan_action_axioms_serial(graph, group, action));
    append(scan_cocycle_axioms_serial(graph, group, action, cocycle));
  }

  if (result.violations.empty())
    result.value = SelfSimilarGraph(std::move(graph), std::move(group),
                                    std::move(action), std::move(cocycle));
  return result;
}

std::vector<VertexId> SelfSimilarGraph::vertex_orbit(VertexId v) const {
  std::vector<char> seen(graph_.vertex_count(), 0);
  std::vector<VertexId> orbit;
  for (GroupElem g = 0; g < group_.order(); ++g) {
    VertexId w = act_vertex(g, v);
    if (!seen[w]) {
      seen[w] = 1;
      orbit.push_back(w);
    }
  }
  return orbit;
}

bool SelfSimilarGraph::same_vertex_orbit(VertexId v, VertexId w) const {
  return transporter(v, w).has_value();
}

std::optional<GroupElem> SelfSimilarGraph::transporter(VertexId from,
                                                       VertexId to) const {
  for (GroupElem g = 0; g < group_.order(); ++g)
    if (act_vertex(g, from) == to) return g;
  return std::nullopt;
}

ActionExtension extend_action(const SelfSimilarGraph& ssg, GroupElem g,
                              const Path& alpha) {
  const Graph& graph = ssg.graph();
  if (alpha.empty()) {
    return {Path::empty_at(ssg.act_vertex(g, alpha.range(graph))), g};
  }
  std::vector<EdgeId> image;
  image.reserve(alpha.length());
  GroupElem cur = g;
  for (EdgeId e : alpha.edges()) {
    image.push_back(ssg.act_edge(cur, e));
    cur = ssg.restrict(cur, e);
  }
  return {Path::of(graph, std::move(image)), cur};
}

}  // namespace ssg
