#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ssg/model.hpp"

namespace ssg {

// (g,v) is a member iff g fixes every infinite path with range v. This is
// the greatest set closed under: g*v = v, and for every e with r(e) = v,
// g*e = e and (restrict(g,e), d(e)) is a member.
class TrivSet {
 public:
  TrivSet(int group_order, int vertex_count)
      : member_(group_order, std::vector<char>(vertex_count, 0)) {}

  bool contains(GroupElem g, VertexId v) const { return member_[g][v]; }
  void insert(GroupElem g, VertexId v) { member_[g][v] = 1; }
  void erase(GroupElem g, VertexId v) { member_[g][v] = 0; }

  std::vector<std::pair<GroupElem, VertexId>> pairs() const;
  // First member with g != identity, if any.
  std::optional<std::pair<GroupElem, VertexId>> nonidentity_pair(
      const FinGroup& group) const;

 private:
  std::vector<std::vector<char>> member_;
};

struct PseudoFreeResult {
  bool pseudo_free;
  // (g, e) with g*e = e, restrict(g,e) = 1, g != 1
  std::optional<std::pair<GroupElem, EdgeId>> witness;
};

// Exhaustive scan of the defining condition over G x E^1.
PseudoFreeResult is_pseudo_free(const SelfSimilarGraph& ssg);

// Greatest fixed point by deletion, starting from all pairs with g*v = v.
// Throws SourcePresentError when the graph has a source (the cylinder at a
// source is empty and the condition is vacuous there).
TrivSet compute_triv(const SelfSimilarGraph& ssg);

struct CylinderConditionResult {
  bool holds;
  // (g, v) with g != 1 acting trivially on the cylinder at v
  std::optional<std::pair<GroupElem, VertexId>> witness;
};

// True iff no nonidentity group element acts trivially on any cylinder.
CylinderConditionResult cylinder_condition_holds(const SelfSimilarGraph& ssg);

}  // namespace ssg
