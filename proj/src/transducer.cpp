#include "ssg/transducer.hpp"

#include "ssg/errors.hpp"

namespace ssg {

std::vector<std::pair<GroupElem, VertexId>> TrivSet::pairs() const {
  std::vector<std::pair<GroupElem, VertexId>> out;
  for (std::size_t g = 0; g < member_.size(); ++g)
    for (std::size_t v = 0; v < member_[g].size(); ++v)
      if (member_[g][v]) out.emplace_back(static_cast<GroupElem>(g),
                                          static_cast<VertexId>(v));
  return out;
}

std::optional<std::pair<GroupElem, VertexId>> TrivSet::nonidentity_pair(
    const FinGroup& group) const {
  for (std::size_t g = 0; g < member_.size(); ++g) {
    if (static_cast<GroupElem>(g) == group.identity()) continue;
    for (std::size_t v = 0; v < member_[g].size(); ++v)
      if (member_[g][v]) return std::make_pair(static_cast<GroupElem>(g),
                                               static_cast<VertexId>(v));
  }
  return std::nullopt;
}

PseudoFreeResult is_pseudo_free(const SelfSimilarGraph& ssg) {
  const FinGroup& group = ssg.group();
  const Graph& graph = ssg.graph();
  for (GroupElem g = 0; g < group.order(); ++g) {
    if (g == group.identity()) continue;
    for (EdgeId e = 0; e < graph.edge_count(); ++e)
      if (ssg.act_edge(g, e) == e && ssg.restrict(g, e) == group.identity())
        return {false, std::make_pair(g, e)};
  }
  return {true, std::nullopt};
}

TrivSet compute_triv(const SelfSimilarGraph& ssg) {
  const Graph& graph = ssg.graph();
  const FinGroup& group = ssg.group();
  if (!ssg.source_free())
    throw SourcePresentError(
        "compute_triv: graph has a source; cylinders there are empty");

  TrivSet triv(group.order(), graph.vertex_count());
  // Pairs with g*v != v cannot be members: g maps the cylinder at v
  // somewhere else entirely.
  for (GroupElem g = 0; g < group.order(); ++g)
    for (VertexId v = 0; v < graph.vertex_count(); ++v)
      if (ssg.act_vertex(g, v) == v) triv.insert(g, v);

  // Delete violators until stable. The set shrinks monotonically and is
  // finite, so this terminates within |G| * |E^0| rounds.
  bool changed = true;
  while (changed) {
    changed = false;
    for (GroupElem g = 0; g < group.order(); ++g)
      for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        if (!triv.contains(g, v)) continue;
        for (EdgeId e : graph.in_edges(v)) {
          if (ssg.act_edge(g, e) != e ||
              !triv.contains(ssg.restrict(g, e), graph.dom(e))) {
            triv.erase(g, v);
            changed = true;
            break;
          }
        }
      }
  }
  return triv;
}

CylinderConditionResult cylinder_condition_holds(const SelfSimilarGraph& ssg) {
  TrivSet triv = compute_triv(ssg);
  auto bad = triv.nonidentity_pair(ssg.group());
  if (bad) return {false, bad};
  return {true, std::nullopt};
}

}  // namespace ssg
