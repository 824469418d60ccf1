// Compares the serial and OpenMP axiom scans on a large synthetic instance
// and checks they emit identical results.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "ssg/axiom_scan.hpp"
#include "ssg/group.hpp"
#include "ssg/model.hpp"

using namespace ssg;

namespace {

// Z/n acting on a single vertex with m edge orbits of full size: vertex v,
// edges e_{k,i} with g*e_{k,i} = e_{k,(i+g) mod n}, restriction g.
struct Instance {
  Graph graph;
  FinGroup group;
  GraphAction action;
  Cocycle cocycle;
};

Instance make_instance(int n, int orbits) {
  Instance inst{Graph{}, FinGroup::cyclic(n), GraphAction{}, Cocycle{}};
  inst.graph.add_vertex("v");
  for (int k = 0; k < orbits; ++k)
    for (int i = 0; i < n; ++i)
      inst.graph.add_edge("e" + std::to_string(k) + "_" + std::to_string(i),
                          0, 0);
  const int ne = inst.graph.edge_count();
  inst.action.vertex_perm.assign(n, {0});
  inst.action.edge_perm.assign(n, std::vector<EdgeId>(ne));
  inst.cocycle.table.assign(n, std::vector<GroupElem>(ne));
  for (int g = 0; g < n; ++g)
    for (int k = 0; k < orbits; ++k)
      for (int i = 0; i < n; ++i) {
        inst.action.edge_perm[g][k * n + i] = k * n + (i + g) % n;
        inst.cocycle.table[g][k * n + i] = g;
      }
  return inst;
}

template <typename F>
double time_ms(F&& f, std::vector<Violation>& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 24;
  int orbits = argc > 2 ? std::atoi(argv[2]) : 40;
  Instance inst = make_instance(n, orbits);
  std::cout << "instance: group order " << n << ", "
            << inst.graph.edge_count() << " edges\n";

  bool ok = true;
  auto bench = [&](const char* name, auto serial, auto omp) {
    std::vector<Violation> vs, vo;
    double ts = time_ms(serial, vs);
    double to = time_ms(omp, vo);
    bool same = vs.size() == vo.size();
    for (std::size_t i = 0; same && i < vs.size(); ++i)
      same = vs[i].code == vo[i].code && vs[i].detail == vo[i].detail;
    ok = ok && same;
    std::cout << name << ": serial " << ts << " ms, omp " << to
              << " ms, violations " << vs.size()
              << (same ? "" : "  MISMATCH") << "\n";
  };

  bench("group  ",
        [&] { return scan_group_axioms_serial(inst.group); },
        [&] { return scan_group_axioms_omp(inst.group); });
  bench("action ",
        [&] {
          return scan_action_axioms_serial(inst.graph, inst.group,
                                           inst.action);
        },
        [&] {
          return scan_action_axioms_omp(inst.graph, inst.group, inst.action);
        });
  bench("cocycle",
        [&] {
          return scan_cocycle_axioms_serial(inst.graph, inst.group,
                                            inst.action, inst.cocycle);
        },
        [&] {
          return scan_cocycle_axioms_omp(inst.graph, inst.group, inst.action,
                                         inst.cocycle);
        });
  return ok ? 0 : 1;
}
