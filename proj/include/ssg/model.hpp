#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssg/graph.hpp"
#include "ssg/group.hpp"

namespace ssg {

// Per-element permutations of vertices and edges: perm[g][x] = g*x.
struct GraphAction {
  std::vector<std::vector<VertexId>> vertex_perm;
  std::vector<std::vector<EdgeId>> edge_perm;
};

// table[g][e] = the restriction of g past edge e.
struct Cocycle {
  std::vector<std::vector<GroupElem>> table;
};

struct Violation {
  std::string code;    // NotAGroup, NotAnAction, CocycleLawViolated, ...
  std::string detail;  // names the offending tuple
};

class SelfSimilarGraph;
struct ValidationResult;
// Exhaustive axiom check: group laws, action laws, automorphism
// compatibility, cocycle law, vertex compatibility. Returns either the
// validated object or the full list of violations.
ValidationResult validate(Graph graph, FinGroup group, GraphAction action,
                          Cocycle cocycle, bool parallel = true);

// Validated self-similar graph: all axioms hold, values immutable.
class SelfSimilarGraph {
 public:
  const Graph& graph() const { return graph_; }
  const FinGroup& group() const { return group_; }

  VertexId act_vertex(GroupElem g, VertexId v) const {
    return action_.vertex_perm[g][v];
  }
  EdgeId act_edge(GroupElem g, EdgeId e) const {
    return action_.edge_perm[g][e];
  }
  // The cocycle value: what g becomes after passing through e.
  GroupElem restrict(GroupElem g, EdgeId e) const {
    return cocycle_.table[g][e];
  }

  bool source_free() const { return source_free_; }

  std::vector<VertexId> vertex_orbit(VertexId v) const;
  bool same_vertex_orbit(VertexId v, VertexId w) const;
  // Some g with g*from = to, if the vertices share an orbit.
  std::optional<GroupElem> transporter(VertexId from, VertexId to) const;

 private:
  friend struct ValidationResult;
  friend ValidationResult validate(Graph graph, FinGroup group,
                                   GraphAction action, Cocycle cocycle,
                                   bool parallel);
  SelfSimilarGraph(Graph g, FinGroup gr, GraphAction a, Cocycle c)
      : graph_(std::move(g)),
        group_(std::move(gr)),
        action_(std::move(a)),
        cocycle_(std::move(c)),
        source_free_(graph_.source_free()) {}

  Graph graph_;
  FinGroup group_;
  GraphAction action_;
  Cocycle cocycle_;
  bool source_free_;
};

struct ValidationResult {
  std::optional<SelfSimilarGraph> value;
  std::vector<Violation> violations;
  bool ok() const { return value.has_value(); }
};

// g applied to a path together with the accumulated restriction:
// g(a1 a2) = (g a1)(phi(g,a1) a2), phi(g, a1 a2) = phi(phi(g,a1), a2).
// For the empty path at v this is (empty path at g*v, g).
struct ActionExtension {
  Path path;
  GroupElem restriction;
};
ActionExtension extend_action(const SelfSimilarGraph& ssg, GroupElem g,
                              const Path& alpha);

}  // namespace ssg
