#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssg/analysis.hpp"
#include "ssg/model.hpp"
#include "ssg/monoid.hpp"
#include "ssg/quotient.hpp"
#include "ssg/trace.hpp"
#include "ssg/transducer.hpp"

namespace ssg {

enum class Truth { Yes, No, Unknown };

std::string truth_to_string(Truth t);

// Three-valued verdict. Yes/No always carry a machine-checkable witness;
// Unknown carries the named gap that blocks a definite answer.
struct Verdict {
  Truth value = Truth::Unknown;
  std::string rule;  // which decision rule fired
  std::string gap;   // why Unknown, when it is

  std::optional<std::pair<GroupElem, EdgeId>> ge_pair;
  std::optional<std::pair<GroupElem, VertexId>> gv_pair;
  std::optional<GCircuitWitness> g_circuit;
  std::optional<Circuit> circuit;  // lives in the quotient graph
  std::optional<VertexId> vertex;
};

struct QuotientSummary {
  int vertex_count = 0;
  int edge_count = 0;
  // E-vertex name -> class name
  std::vector<std::pair<std::string, std::string>> orbit_map;
  std::vector<std::string> representatives;
};

struct ClassificationReport {
  std::string input_summary;
  std::vector<std::string> notes;  // conventions and deliberate deviations
  bool source_free = true;

  Verdict pseudo_free;
  Verdict effectivity;  // every G-circuit has an entry, and no nonidentity
                        // element acts trivially on a cylinder
  Verdict minimal;      // weak G-transitivity
  Verdict simple;
  Verdict purely_infinite;
  Verdict stably_finite;
  std::string dichotomy;

  std::optional<TraceSolution> g_trace;        // on E
  std::optional<TraceSolution> quotient_trace; // on the quotient graph

  GroupTestVerdict monoid_e;
  GroupTestVerdict monoid_quotient;  // heuristic, flagged in notes

  QuotientSummary quotient;
  int monoid_identity_bound = 6;
  int monoid_degree_bound = 24;
};

ClassificationReport classify(const SelfSimilarGraph& ssg,
                              int monoid_identity_bound = 6,
                              int monoid_degree_bound = 24);

// Independent witness checker: replays every Yes/No verdict's certificate
// against the definitions, preferring the computation route the verdict
// did not take. Returns a description per failed replay; empty = all good.
std::vector<std::string> replay_witnesses(const SelfSimilarGraph& ssg,
                                          const ClassificationReport& report);

}  // namespace ssg
