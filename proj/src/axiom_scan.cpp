#include "ssg/axiom_scan.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ssg {

namespace {

void sort_violations(std::vector<Violation>& v) {
  std::sort(v.begin(), v.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.code, a.detail) < std::tie(b.code, b.detail);
  });
}

// ---- per-outer-index kernels shared by the serial and OpenMP drivers ----

void check_group_at(const FinGroup& g, GroupElem a, std::vector<Violation>& out) {
  const int n = g.order();
  const GroupElem one = g.identity();
  if (g.mul(one, a) != a || g.mul(a, one) != a)
    out.push_back({"NotAGroup", "identity law fails at " + g.name(a)});
  if (g.inv(a) < 0)
    out.push_back({"NotAGroup", "no inverse for " + g.name(a)});
  for (GroupElem b = 0; b < n; ++b)
    for (GroupElem c = 0; c < n; ++c)
      if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
        out.push_back({"NotAGroup", "associativity fails at (" + g.name(a) +
                                        "," + g.name(b) + "," + g.name(c) +
                                        ")"});
}

void check_action_at(const Graph& graph, const FinGroup& group,
                     const GraphAction& action, GroupElem g,
                     std::vector<Violation>& out) {
  const int nv = graph.vertex_count();
  const int ne = graph.edge_count();
  const auto& vp = action.vertex_perm[g];
  const auto& ep = action.edge_perm[g];

  std::vector<char> hit(nv, 0);
  for (VertexId v = 0; v < nv; ++v) {
    if (vp[v] < 0 || vp[v] >= nv || hit[vp[v]]++)
      out.push_back({"NotAnAction", "vertex map of " + group.name(g) +
                                        " is not a permutation"});
  }
  hit.assign(ne, 0);
  for (EdgeId e = 0; e < ne; ++e) {
    if (ep[e] < 0 || ep[e] >= ne || hit[ep[e]]++)
      out.push_back({"NotAnAction", "edge map of " + group.name(g) +
                                        " is not a permutation"});
  }

  if (g == group.identity()) {
    for (VertexId v = 0; v < nv; ++v)
      if (vp[v] != v) {
        out.push_back({"NotAnAction", "identity moves vertex " +
                                          graph.vertex_name(v)});
        break;
      }
    for (EdgeId e = 0; e < ne; ++e)
      if (ep[e] != e) {
        out.push_back(
            {"NotAnAction", "identity moves edge " + graph.edge(e).name});
        break;
      }
  }

  // automorphism compatibility with r and d
  for (EdgeId e = 0; e < ne; ++e) {
    if (vp[graph.ran(e)] != graph.ran(ep[e]) ||
        vp[graph.dom(e)] != graph.dom(ep[e]))
      out.push_back({"NotAnAction", "(" + group.name(g) + "," +
                                        graph.edge(e).name +
                                        "): endpoints not respected"});
  }

  // homomorphism: (gh)x = g(hx)
  for (GroupElem h = 0; h < group.order(); ++h) {
    const GroupElem gh = group.mul(g, h);
    const auto& vph = action.vertex_perm[h];
    const auto& eph = action.edge_perm[h];
    for (VertexId v = 0; v < nv; ++v)
      if (action.vertex_perm[gh][v] != vp[vph[v]]) {
        out.push_back({"NotAnAction", "homomorphism fails at (" +
                                          group.name(g) + "," + group.name(h) +
                                          ") on vertex " +
                                          graph.vertex_name(v)});
        break;
      }
    for (EdgeId e = 0; e < ne; ++e)
      if (action.edge_perm[gh][e] != ep[eph[e]]) {
        out.push_back({"NotAnAction", "homomorphism fails at (" +
                                          group.name(g) + "," + group.name(h) +
                                          ") on edge " + graph.edge(e).name});
        break;
      }
  }
}

void check_cocycle_at(const Graph& graph, const FinGroup& group,
                      const GraphAction& action, const Cocycle& cocycle,
                      GroupElem g, std::vector<Violation>& out) {
  const int ne = graph.edge_count();
  const int nv = graph.vertex_count();
  // cocycle law: phi(gh, e) = phi(g, h*e) phi(h, e)
  for (GroupElem h = 0; h < group.order(); ++h) {
    const GroupElem gh = group.mul(g, h);
    for (EdgeId e = 0; e < ne; ++e) {
      const EdgeId he = action.edge_perm[h][e];
      if (cocycle.table[gh][e] !=
          group.mul(cocycle.table[g][he], cocycle.table[h][e]))
        out.push_back({"CocycleLawViolated", "(" + group.name(g) + "," +
                                                 group.name(h) + "," +
                                                 graph.edge(e).name + ")"});
    }
  }
  // vertex compatibility: phi(g,e) v = g v
  for (EdgeId e = 0; e < ne; ++e) {
    const GroupElem r = cocycle.table[g][e];
    for (VertexId v = 0; v < nv; ++v)
      if (action.vertex_perm[r][v] != action.vertex_perm[g][v])
        out.push_back({"VertexCompatViolated",
                       "(" + group.name(g) + "," + graph.edge(e).name + "," +
                           graph.vertex_name(v) + ")"});
  }
}

template <typename Kernel>
std::vector<Violation> run_serial(int outer, Kernel&& kernel) {
  std::vector<Violation> out;
  for (int i = 0; i < outer; ++i) kernel(i, out);
  sort_violations(out);
  return out;
}

template <typename Kernel>
std::vector<Violation> run_omp(int outer, Kernel&& kernel) {
  std::vector<Violation> out;
#pragma omp parallel
  {
    std::vector<Violation> local;
#pragma omp for schedule(dynamic) nowait
    for (int i = 0; i < outer; ++i) kernel(i, local);
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  sort_violations(out);
  return out;
}

}  // namespace

std::vector<Violation> scan_group_axioms_serial(const FinGroup& g) {
  return run_serial(g.order(),
                    [&](int a, std::vector<Violation>& out) { check_group_at(g, a, out); });
}

std::vector<Violation> scan_group_axioms_omp(const FinGroup& g) {
  return run_omp(g.order(),
                 [&](int a, std::vector<Violation>& out) { check_group_at(g, a, out); });
}

std::vector<Violation> scan_action_axioms_serial(const Graph& graph,
                                                 const FinGroup& group,
                                                 const GraphAction& action) {
  return run_serial(group.order(), [&](int g, std::vector<Violation>& out) {
    check_action_at(graph, group, action, g, out);
  });
}

std::vector<Violation> scan_action_axioms_omp(const Graph& graph,
                                              const FinGroup& group,
                                              const GraphAction& action) {
  return run_omp(group.order(), [&](int g, std::vector<Violation>& out) {
    check_action_at(graph, group, action, g, out);
  });
}

std::vector<Violation> scan_cocycle_axioms_serial(const Graph& graph,
                                                  const FinGroup& group,
                                                  const GraphAction& action,
                                                  const Cocycle& cocycle) {
  return run_serial(group.order(), [&](int g, std::vector<Violation>& out) {
    check_cocycle_at(graph, group, action, cocycle, g, out);
  });
}

std::vector<Violation> scan_cocycle_axioms_omp(const Graph& graph,
                                               const FinGroup& group,
                                               const GraphAction& action,
                                               const Cocycle& cocycle) {
  return run_omp(group.order(), [&](int g, std::vector<Violation>& out) {
    check_cocycle_at(graph, group, action, cocycle, g, out);
  });
}

}  // namespace ssg
