#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ssg/model.hpp"

namespace ssg {

using Rational = boost::multiprecision::cpp_rational;

// coeff . x  (= | >=)  rhs, over implicitly nonnegative variables.
struct LinearConstraint {
  enum class Kind { Eq, Ge };
  Kind kind;
  std::vector<Rational> coeff;
  Rational rhs;
};

// Exact phase-one simplex with Bland's rule; no floating point anywhere.
// Returns a feasible point or nullopt when the system is infeasible.
std::optional<std::vector<Rational>> feasible_point(
    int nvars, const std::vector<LinearConstraint>& constraints);

// Nonnegative vertex weights with sum 1, balanced against in-edges.
struct TraceSolution {
  std::vector<Rational> weights;  // indexed by vertex
};

std::string rational_to_string(const Rational& r);

// Feasibility of { T >= 0, T(r(e)) >= T(d(e)), T(v) = sum of T(d(e)) over
// in-edges at every receiving vertex, sum T = 1 }. Vertices receiving no
// edges carry no balance constraint; the literal all-vertex quantification
// would force T = 0 on any graph with an unreceiving vertex.
std::optional<TraceSolution> graph_trace_exists(const Graph& g);

// Same system plus T constant on vertex orbits.
std::optional<TraceSolution> graph_g_trace_exists(const SelfSimilarGraph& ssg);

// Zero-tolerance recheck of a claimed solution against the constraints.
bool verify_graph_trace(const Graph& g, const TraceSolution& t);
bool verify_graph_g_trace(const SelfSimilarGraph& ssg, const TraceSolution& t);

}  // namespace ssg
