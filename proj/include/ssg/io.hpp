#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ssg/classify.hpp"
#include "ssg/model.hpp"
#include "ssg/quotient.hpp"

namespace ssg {

// Raw parsed input document. JSON-level problems (malformed text, duplicate
// or unknown keys, wrong value types) throw ParseError; name-resolution and
// shape problems are reported as violations so the caller can print them
// alongside axiom violations.
struct DocumentResult {
  std::optional<Graph> graph;
  std::optional<FinGroup> group;
  GraphAction action;
  Cocycle cocycle;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty() && graph && group; }
};

// Top-level keys: "vertices", "edges"; optional "group", "action",
// "cocycle" (defaults: trivial group, identity action, restriction g for
// every edge), plus "orbit_of"/"representatives" which quotient output
// carries and the parser accepts and ignores.
DocumentResult parse_document(const std::string& text);

DocumentResult parse_document_file(const std::string& path);

// parse + exhaustive axiom validation; structural violations short-circuit.
ValidationResult load_and_validate(const std::string& text);

// The quotient graph in the input document sub-format plus the orbit map;
// deterministic, round-trips through parse_document.
nlohmann::ordered_json quotient_document(const SelfSimilarGraph& ssg,
                                         const QuotientGraph& q);

// Text and JSON renderings carry identical verdicts.
std::string render_report_text(const SelfSimilarGraph& ssg,
                               const ClassificationReport& report);
nlohmann::ordered_json render_report_json(const SelfSimilarGraph& ssg,
                                          const ClassificationReport& report);

}  // namespace ssg
