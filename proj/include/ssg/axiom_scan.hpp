#pragma once

#include <vector>

#include "ssg/model.hpp"

namespace ssg {

// Exhaustive scans behind validate(). Each scan exists in a serial and an
// OpenMP flavor over the same per-tuple checks; the serial one is the
// reference implementation used by tests and the benchmark. Violation
// lists come back sorted so both flavors are bit-identical.

std::vector<Violation> scan_group_axioms_serial(const FinGroup& g);
std::vector<Violation> scan_group_axioms_omp(const FinGroup& g);

std::vector<Violation> scan_action_axioms_serial(const Graph& graph,
                                                 const FinGroup& group,
                                                 const GraphAction& action);
std::vector<Violation> scan_action_axioms_omp(const Graph& graph,
                                              const FinGroup& group,
                                              const GraphAction& action);

std::vector<Violation> scan_cocycle_axioms_serial(const Graph& graph,
                                                  const FinGroup& group,
                                                  const GraphAction& action,
                                                  const Cocycle& cocycle);
std::vector<Violation> scan_cocycle_axioms_omp(const Graph& graph,
                                               const FinGroup& group,
                                               const GraphAction& action,
                                               const Cocycle& cocycle);

}  // namespace ssg
