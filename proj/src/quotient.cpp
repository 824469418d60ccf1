#include "ssg/quotient.hpp"

#include <cassert>
#include <stdexcept>

namespace ssg {

QuotientGraph build_quotient(const SelfSimilarGraph& ssg) {
  const Graph& graph = ssg.graph();
  QuotientGraph q;
  q.orbit_of.assign(graph.vertex_count(), -1);

  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (q.orbit_of[v] != -1) continue;
    VertexId cls = q.graph.add_vertex("[" + graph.vertex_name(v) + "]");
    q.rep.push_back(v);
    for (VertexId w : ssg.vertex_orbit(v)) q.orbit_of[w] = cls;
  }

  for (VertexId cls = 0; cls < q.graph.vertex_count(); ++cls) {
    for (EdgeId e : graph.in_edges(q.rep[cls])) {
      q.graph.add_edge("~" + graph.edge(e).name, q.orbit_of[graph.dom(e)],
                       cls);
      q.edge_origin.push_back(e);
    }
  }
  return q;
}

Path lift_path(const SelfSimilarGraph& ssg, const QuotientGraph& q,
               const Path& alpha_tilde) {
  const Graph& graph = ssg.graph();
  if (alpha_tilde.empty())
    return Path::empty_at(q.rep[alpha_tilde.range(q.graph)]);

  const auto& tilde_edges = alpha_tilde.edges();
  std::vector<EdgeId> lifted;
  lifted.reserve(tilde_edges.size());

  lifted.push_back(q.edge_origin[tilde_edges[0]]);
  for (std::size_t i = 1; i < tilde_edges.size(); ++i) {
    EdgeId origin = q.edge_origin[tilde_edges[i]];
    // r(origin) and the domain reached so far lie in one class; twist the
    // originating edge onto that domain to keep the lift composable.
    VertexId target = graph.dom(lifted.back());
    auto g = ssg.transporter(graph.ran(origin), target);
    if (!g) throw std::logic_error("lift_path: quotient edge classes disagree");
    lifted.push_back(ssg.act_edge(*g, origin));
  }
  return Path::of(graph, std::move(lifted));
}

Path push_path(const SelfSimilarGraph& ssg, const QuotientGraph& q,
               const Path& gamma) {
  const Graph& graph = ssg.graph();
  if (gamma.empty())
    return Path::empty_at(q.orbit_of[gamma.range(graph)]);

  // originating E-edge -> quotient edge
  std::vector<EdgeId> tilde_of(graph.edge_count(), -1);
  for (EdgeId j = 0; j < q.graph.edge_count(); ++j)
    tilde_of[q.edge_origin[j]] = j;

  std::vector<EdgeId> pushed;
  pushed.reserve(gamma.length());
  for (EdgeId e : gamma.edges()) {
    VertexId v = graph.ran(e);
    auto g = ssg.transporter(v, q.rep[q.orbit_of[v]]);
    assert(g.has_value());
    EdgeId moved = ssg.act_edge(*g, e);  // now an in-edge of the representative
    EdgeId te = tilde_of[moved];
    assert(te != -1);
    pushed.push_back(te);
  }
  return Path::of(q.graph, std::move(pushed));
}

}  // namespace ssg
