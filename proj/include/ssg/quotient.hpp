#pragma once

#include <vector>

#include "ssg/model.hpp"

namespace ssg {

// The orbit quotient: one vertex per G-orbit of E-vertices, and for the
// chosen representative v of each class one edge per in-edge of v, running
// from the class of its domain to the class of v.
struct QuotientGraph {
  Graph graph;                      // the quotient graph itself
  std::vector<VertexId> orbit_of;   // E-vertex -> quotient vertex
  std::vector<VertexId> rep;        // quotient vertex -> representative in E
  std::vector<EdgeId> edge_origin;  // quotient edge -> originating E-edge
};

// Deterministic: representatives are the minimal vertex in declaration
// order; quotient edges inherit the originating edge's name with a tilde
// prefix and are emitted in declaration order of the representatives.
QuotientGraph build_quotient(const SelfSimilarGraph& ssg);

// Constructive lift of a quotient path to a composable E-path whose edges
// stay in the orbits of the originating edges.
Path lift_path(const SelfSimilarGraph& ssg, const QuotientGraph& q,
               const Path& alpha_tilde);

// The orbit image of an E-path as a quotient path of the same length.
Path push_path(const SelfSimilarGraph& ssg, const QuotientGraph& q,
               const Path& gamma);

}  // namespace ssg
