#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssg/model.hpp"

namespace ssg {

// Elementary circuit: e_1...e_n with d(e_n) = r(e_1) and pairwise distinct
// range vertices.
struct Circuit {
  std::vector<EdgeId> edges;
  bool operator==(const Circuit&) const = default;
};

// All elementary circuits, each reported once anchored at its minimal
// vertex. Throws ResourceExceededError past the cap.
std::vector<Circuit> find_circuits(const Graph& g, std::size_t cap = 1000000);

// Entry = some vertex on the circuit with in-degree >= 2.
bool has_entry(const Graph& g, const Circuit& c);

std::vector<VertexId> circuit_vertices(const Graph& g, const Circuit& c);

// Vertices w admitting a path with r = v, d = w (v included, empty path).
std::vector<char> reachable_from(const Graph& g, VertexId v);

// A path alpha with d(alpha) = twist * r(alpha), |alpha| >= 1.
struct GCircuitWitness {
  Path path;
  GroupElem twist;
};

// BFS per start vertex over plain edges, closing up to the vertex orbit.
// Independent of the quotient construction.
std::optional<GCircuitWitness> find_g_circuit(const SelfSimilarGraph& ssg);

// Every G-circuit has an entry? Decided on the orbit-collapsed multigraph;
// an entryless one is returned lifted to an explicit witness in E.
struct GEntryCheck {
  bool all_have_entry;
  std::optional<GCircuitWitness> entryless;
};
GEntryCheck g_circuits_all_have_entry(const SelfSimilarGraph& ssg);

// Per-vertex flag: v lies on some G-circuit (its orbit class sits on a
// cycle of the orbit-collapsed graph).
std::vector<char> vertices_on_g_circuits(const SelfSimilarGraph& ssg);

// receives(v, w): some path alpha and g with r(alpha) = v, d(alpha) = g*w.
class ReachabilityRelation {
 public:
  explicit ReachabilityRelation(std::vector<std::vector<char>> table)
      : table_(std::move(table)) {}
  bool receives(VertexId v, VertexId w) const { return table_[v][w]; }

 private:
  std::vector<std::vector<char>> table_;
};

ReachabilityRelation g_reaches(const SelfSimilarGraph& ssg);

// Plain-graph cofinality: every infinite path eventually enters the set of
// vertices that connect to v, for every v. A violation is certified by a
// cycle avoiding that set. Requires a source-free graph.
struct CofinalityResult {
  bool cofinal;
  std::optional<VertexId> witness_vertex;
  std::optional<Circuit> witness_cycle;
};
CofinalityResult is_cofinal(const Graph& g);

// Same check with G-path reachability on E; must agree with cofinality of
// the quotient graph.
CofinalityResult is_weakly_g_transitive(const SelfSimilarGraph& ssg);

// Simplicity criterion for the algebra of a row-finite source-free graph:
// cofinal and every circuit has an entry.
struct GraphAlgebraResult {
  bool holds;
  std::string reason;  // empty when holds
  std::optional<Circuit> witness_circuit;
  std::optional<VertexId> witness_vertex;
};
GraphAlgebraResult graph_algebra_simple(const Graph& g);

// Sufficient condition for pure infiniteness: every circuit has an entry
// and every vertex receives a path from a circuit. Failure proves nothing.
GraphAlgebraResult graph_algebra_pi_sufficient(const Graph& g);

}  // namespace ssg
