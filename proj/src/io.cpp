#include "ssg/io.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ssg/errors.hpp"

namespace ssg {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

// SAX pass rejecting duplicate keys anywhere in the document (the DOM
// parser would silently keep one of them).
struct DupKeyScanner : json::json_sax_t {
  std::vector<std::set<std::string>> scopes;
  std::string duplicate;
  std::string error;

  bool null() override { return true; }
  bool boolean(bool) override { return true; }
  bool number_integer(number_integer_t) override { return true; }
  bool number_unsigned(number_unsigned_t) override { return true; }
  bool number_float(number_float_t, const string_t&) override { return true; }
  bool string(string_t&) override { return true; }
  bool binary(binary_t&) override { return true; }
  bool start_object(std::size_t) override {
    scopes.emplace_back();
    return true;
  }
  bool key(string_t& val) override {
    if (!scopes.back().insert(val).second) {
      duplicate = val;
      return false;
    }
    return true;
  }
  bool end_object() override {
    scopes.pop_back();
    return true;
  }
  bool start_array(std::size_t) override { return true; }
  bool end_array() override { return true; }
  bool parse_error(std::size_t, const std::string&,
                   const nlohmann::detail::exception& ex) override {
    error = ex.what();
    return false;
  }
};

void check_keys(const json& obj, const std::string& where,
                const std::set<std::string>& allowed) {
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k))
      throw ParseError("unknown key \"" + k + "\" in " + where);
}

const json& need(const json& obj, const std::string& where,
                 const std::string& key) {
  if (!obj.contains(key))
    throw ParseError("missing key \"" + key + "\" in " + where);
  return obj.at(key);
}

std::string need_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + " must be a string");
  return v.get<std::string>();
}

void add(std::vector<Violation>& out, std::string code, std::string detail) {
  out.push_back({std::move(code), std::move(detail)});
}

// name -> name object applied as a permutation over a fixed index
std::vector<int> resolve_map(
    const json& obj, const std::string& where, int count,
    const std::function<std::optional<int>(const std::string&)>& index,
    const std::function<std::string(int)>& name,
    std::vector<Violation>& violations) {
  std::vector<int> perm(count, -1);
  for (const auto& [k, v] : obj.items()) {
    auto from = index(k);
    if (!from) {
      add(violations, "UnknownName", where + ": unknown name \"" + k + "\"");
      continue;
    }
    std::string target = need_string(v, where + "[\"" + k + "\"]");
    auto to = index(target);
    if (!to) {
      add(violations, "UnknownName",
          where + ": unknown image \"" + target + "\"");
      continue;
    }
    perm[*from] = *to;
  }
  for (int i = 0; i < count; ++i)
    if (perm[i] == -1)
      add(violations, "ShapeMismatch", where + ": no image for " + name(i));
  return perm;
}

}  // namespace

DocumentResult parse_document(const std::string& text) {
  {
    DupKeyScanner scanner;
    if (!json::sax_parse(text, &scanner)) {
      if (!scanner.duplicate.empty())
        throw ParseError("duplicate key \"" + scanner.duplicate + "\"");
      throw ParseError(scanner.error.empty() ? "malformed document"
                                             : scanner.error);
    }
  }
  json j = json::parse(text);
  if (!j.is_object()) throw ParseError("document must be an object");
  check_keys(j, "document",
             {"vertices", "edges", "group", "action", "cocycle", "orbit_of",
              "representatives"});

  DocumentResult out;

  // graph
  const json& jverts = need(j, "document", "vertices");
  const json& jedges = need(j, "document", "edges");
  if (!jverts.is_array()) throw ParseError("\"vertices\" must be an array");
  if (!jedges.is_array()) throw ParseError("\"edges\" must be an array");
  Graph graph;
  {
    std::set<std::string> seen;
    for (const json& v : jverts) {
      std::string name = need_string(v, "vertex entry");
      if (!seen.insert(name).second) {
        add(out.violations, "DuplicateVertex", name);
        continue;
      }
      graph.add_vertex(name);
    }
    std::set<std::string> eseen;
    for (const json& e : jedges) {
      if (!e.is_object()) throw ParseError("edge entries must be objects");
      check_keys(e, "edge entry", {"id", "d", "r"});
      std::string id = need_string(need(e, "edge entry", "id"), "edge id");
      std::string d = need_string(need(e, "edge entry", "d"), "edge d");
      std::string r = need_string(need(e, "edge entry", "r"), "edge r");
      if (!eseen.insert(id).second) {
        add(out.violations, "DuplicateEdge", id);
        continue;
      }
      if (!graph.vertex_index(d))
        add(out.violations, "UnknownVertex", "edge " + id + ": d = " + d);
      if (!graph.vertex_index(r))
        add(out.violations, "UnknownVertex", "edge " + id + ": r = " + r);
      if (graph.vertex_index(d) && graph.vertex_index(r))
        graph.add_edge(id, d, r);
    }
  }
  if (!out.violations.empty()) return out;

  // group
  FinGroup group = FinGroup::trivial();
  if (j.contains("group")) {
    const json& jg = j.at("group");
    if (!jg.is_object()) throw ParseError("\"group\" must be an object");
    check_keys(jg, "group", {"elements", "identity", "table"});
    const json& jel = need(jg, "group", "elements");
    if (!jel.is_array() || jel.empty())
      throw ParseError("group \"elements\" must be a nonempty array");
    std::vector<std::string> names;
    std::map<std::string, int> index;
    for (const json& e : jel) {
      std::string name = need_string(e, "group element");
      if (index.count(name)) {
        add(out.violations, "DuplicateGroupElement", name);
        continue;
      }
      index[name] = static_cast<int>(names.size());
      names.push_back(name);
    }
    const int n = static_cast<int>(names.size());
    std::string idname = need_string(need(jg, "group", "identity"), "identity");
    int identity = -1;
    if (auto it = index.find(idname); it != index.end())
      identity = it->second;
    else
      add(out.violations, "UnknownName", "group identity \"" + idname + "\"");
    const json& jt = need(jg, "group", "table");
    std::vector<std::vector<GroupElem>> table(n, std::vector<GroupElem>(n, -1));
    if (!jt.is_array() || static_cast<int>(jt.size()) != n) {
      add(out.violations, "ShapeMismatch",
          "group table must have one row per element");
    } else {
      for (int g = 0; g < n; ++g) {
        if (!jt[g].is_array() || static_cast<int>(jt[g].size()) != n) {
          add(out.violations, "ShapeMismatch",
              "group table row for " + names[g]);
          continue;
        }
        for (int h = 0; h < n; ++h) {
          std::string entry = need_string(jt[g][h], "group table entry");
          if (auto it = index.find(entry); it != index.end())
            table[g][h] = it->second;
          else
            add(out.violations, "UnknownName",
                "group table entry \"" + entry + "\"");
        }
      }
    }
    if (!out.violations.empty()) return out;
    group = FinGroup(std::move(names), identity, std::move(table));
  }
  const int n = group.order();

  // action (default: every element acts as the identity)
  GraphAction action;
  action.vertex_perm.assign(
      n, [&] {
        std::vector<VertexId> id(graph.vertex_count());
        for (VertexId v = 0; v < graph.vertex_count(); ++v) id[v] = v;
        return id;
      }());
  action.edge_perm.assign(n, [&] {
    std::vector<EdgeId> id(graph.edge_count());
    for (EdgeId e = 0; e < graph.edge_count(); ++e) id[e] = e;
    return id;
  }());
  if (j.contains("action")) {
    const json& ja = j.at("action");
    if (!ja.is_object()) throw ParseError("\"action\" must be an object");
    check_keys(ja, "action", {"vertices", "edges"});
    auto resolve_side = [&](const json& side, const std::string& where,
                            int count, auto index_fn, auto name_fn,
                            std::vector<std::vector<int>>& perms) {
      if (!side.is_object())
        throw ParseError("action \"" + where + "\" must be an object");
      std::vector<char> present(n, 0);
      for (const auto& [gname, m] : side.items()) {
        auto g = group.index(gname);
        if (!g) {
          add(out.violations, "UnknownName",
              "action." + where + ": unknown element \"" + gname + "\"");
          continue;
        }
        if (!m.is_object())
          throw ParseError("action." + where + "[\"" + gname +
                           "\"] must be an object");
        present[*g] = 1;
        perms[*g] = resolve_map(m, "action." + where + "[\"" + gname + "\"]",
                                count, index_fn, name_fn, out.violations);
      }
      for (GroupElem g = 0; g < n; ++g)
        if (!present[g])
          add(out.violations, "ShapeMismatch",
              "action." + where + ": no map for element " + group.name(g));
    };
    resolve_side(
        need(ja, "action", "vertices"), "vertices", graph.vertex_count(),
        [&](const std::string& s) {
          return static_cast<std::optional<int>>(graph.vertex_index(s));
        },
        [&](int v) { return graph.vertex_name(v); }, action.vertex_perm);
    resolve_side(
        need(ja, "action", "edges"), "edges", graph.edge_count(),
        [&](const std::string& s) {
          return static_cast<std::optional<int>>(graph.edge_index(s));
        },
        [&](int e) { return graph.edge(e).name; }, action.edge_perm);
  }
  if (!out.violations.empty()) return out;

  // cocycle (default: the restriction of g past any edge is g)
  Cocycle cocycle;
  cocycle.table.assign(n, std::vector<GroupElem>(graph.edge_count()));
  for (GroupElem g = 0; g < n; ++g)
    for (EdgeId e = 0; e < graph.edge_count(); ++e) cocycle.table[g][e] = g;
  if (j.contains("cocycle")) {
    const json& jc = j.at("cocycle");
    if (!jc.is_object()) throw ParseError("\"cocycle\" must be an object");
    std::vector<char> present(n, 0);
    for (const auto& [gname, m] : jc.items()) {
      auto g = group.index(gname);
      if (!g) {
        add(out.violations, "UnknownName",
            "cocycle: unknown element \"" + gname + "\"");
        continue;
      }
      if (!m.is_object())
        throw ParseError("cocycle[\"" + gname + "\"] must be an object");
      present[*g] = 1;
      std::vector<char> covered(graph.edge_count(), 0);
      for (const auto& [ename, v] : m.items()) {
        auto e = graph.edge_index(ename);
        if (!e) {
          add(out.violations, "UnknownName",
              "cocycle[\"" + gname + "\"]: unknown edge \"" + ename + "\"");
          continue;
        }
        std::string target = need_string(v, "cocycle value");
        auto h = group.index(target);
        if (!h) {
          add(out.violations, "UnknownName",
              "cocycle[\"" + gname + "\"][\"" + ename + "\"]: unknown "
              "element \"" + target + "\"");
          continue;
        }
        covered[*e] = 1;
        cocycle.table[*g][*e] = *h;
      }
      for (EdgeId e = 0; e < graph.edge_count(); ++e)
        if (!covered[e])
          add(out.violations, "ShapeMismatch",
              "cocycle[\"" + gname + "\"]: no value for edge " +
                  graph.edge(e).name);
    }
    for (GroupElem g = 0; g < n; ++g)
      if (!present[g])
        add(out.violations, "ShapeMismatch",
            "cocycle: no map for element " + group.name(g));
  }
  if (!out.violations.empty()) return out;

  out.graph = std::move(graph);
  out.group = std::move(group);
  out.action = std::move(action);
  out.cocycle = std::move(cocycle);
  return out;
}

DocumentResult parse_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

ValidationResult load_and_validate(const std::string& text) {
  DocumentResult doc = parse_document(text);
  if (!doc.ok()) return {std::nullopt, std::move(doc.violations)};
  return validate(std::move(*doc.graph), std::move(*doc.group),
                  std::move(doc.action), std::move(doc.cocycle));
}

ojson quotient_document(const SelfSimilarGraph& ssg, const QuotientGraph& q) {
  const Graph& graph = ssg.graph();
  ojson out;
  out["vertices"] = ojson::array();
  for (VertexId v = 0; v < q.graph.vertex_count(); ++v)
    out["vertices"].push_back(q.graph.vertex_name(v));
  out["edges"] = ojson::array();
  for (EdgeId e = 0; e < q.graph.edge_count(); ++e)
    out["edges"].push_back({{"id", q.graph.edge(e).name},
                            {"d", q.graph.vertex_name(q.graph.dom(e))},
                            {"r", q.graph.vertex_name(q.graph.ran(e))}});
  out["orbit_of"] = ojson::object();
  for (VertexId v = 0; v < graph.vertex_count(); ++v)
    out["orbit_of"][graph.vertex_name(v)] =
        q.graph.vertex_name(q.orbit_of[v]);
  out["representatives"] = ojson::array();
  for (VertexId r : q.rep) out["representatives"].push_back(graph.vertex_name(r));
  return out;
}

namespace {

std::string gname(const SelfSimilarGraph& ssg, GroupElem g) {
  return ssg.group().name(g);
}

std::string circuit_to_string(const Graph& g, const Circuit& c) {
  std::string out;
  for (EdgeId e : c.edges) {
    if (!out.empty()) out += ".";
    out += g.edge(e).name;
  }
  return out;
}

// the witness of a verdict, rendered once for both output modes
ojson witness_json(const SelfSimilarGraph& ssg, const QuotientGraph& q,
                   const Verdict& v) {
  const Graph& graph = ssg.graph();
  ojson w = ojson::object();
  if (v.ge_pair)
    w["fixed_edge"] = {{"element", gname(ssg, v.ge_pair->first)},
                       {"edge", graph.edge(v.ge_pair->second).name}};
  if (v.gv_pair)
    w["trivial_cylinder"] = {
        {"element", gname(ssg, v.gv_pair->first)},
        {"vertex", graph.vertex_name(v.gv_pair->second)}};
  if (v.g_circuit)
    w["g_circuit"] = {{"path", path_to_string(graph, v.g_circuit->path)},
                      {"twist", gname(ssg, v.g_circuit->twist)}};
  if (v.circuit)
    w["quotient_circuit"] = circuit_to_string(q.graph, *v.circuit);
  if (v.vertex) w["vertex"] = graph.vertex_name(*v.vertex);
  return w;
}

ojson verdict_json(const SelfSimilarGraph& ssg, const QuotientGraph& q,
                   const Verdict& v) {
  ojson out;
  out["value"] = truth_to_string(v.value);
  if (!v.rule.empty()) out["rule"] = v.rule;
  if (!v.gap.empty()) out["gap"] = v.gap;
  ojson w = witness_json(ssg, q, v);
  if (!w.empty()) out["witness"] = w;
  return out;
}

ojson trace_json(const Graph& g, const std::optional<TraceSolution>& t) {
  ojson out;
  if (!t) {
    out["exists"] = false;
    return out;
  }
  out["exists"] = true;
  ojson w = ojson::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    w[g.vertex_name(v)] = rational_to_string(t->weights[v]);
  out["weights"] = w;
  return out;
}

ojson monoid_json(const std::vector<std::string>& generators,
                  const GroupTestVerdict& m) {
  ojson out;
  switch (m.verdict) {
    case GroupTestVerdict::Value::Group: out["verdict"] = "Group"; break;
    case GroupTestVerdict::Value::NotGroup: out["verdict"] = "NotGroup"; break;
    default: out["verdict"] = "Unknown"; break;
  }
  if (m.identity)
    out["identity"] = element_to_string(*m.identity, generators);
  if (!m.inverses.empty()) {
    ojson inv = ojson::object();
    for (std::size_t i = 0; i < m.inverses.size(); ++i)
      inv["a_" + generators[i]] = element_to_string(m.inverses[i], generators);
    out["inverses"] = inv;
  }
  if (m.functional) {
    ojson f = ojson::object();
    for (std::size_t i = 0; i < m.functional->size(); ++i)
      f[generators[i]] = rational_to_string((*m.functional)[i]);
    out["functional"] = f;
  }
  if (!m.note.empty()) out["note"] = m.note;
  return out;
}

std::string verdict_text(const SelfSimilarGraph& ssg, const QuotientGraph& q,
                         const std::string& label, const Verdict& v) {
  std::string line = label + ": " + truth_to_string(v.value);
  if (!v.rule.empty()) line += "  [" + v.rule + "]";
  if (!v.gap.empty()) line += "  (gap: " + v.gap + ")";
  ojson w = witness_json(ssg, q, v);
  if (!w.empty()) line += "\n  witness: " + w.dump();
  return line + "\n";
}

}  // namespace

ojson render_report_json(const SelfSimilarGraph& ssg,
                         const ClassificationReport& report) {
  QuotientGraph q = build_quotient(ssg);
  ojson out;
  out["input"] = report.input_summary;
  out["source_free"] = report.source_free;
  ojson quo;
  quo["vertices"] = report.quotient.vertex_count;
  quo["edges"] = report.quotient.edge_count;
  quo["orbit_of"] = ojson::object();
  for (const auto& [v, c] : report.quotient.orbit_map) quo["orbit_of"][v] = c;
  quo["representatives"] = report.quotient.representatives;
  out["quotient"] = quo;
  out["verdicts"] = {
      {"pseudo_free", verdict_json(ssg, q, report.pseudo_free)},
      {"effectivity", verdict_json(ssg, q, report.effectivity)},
      {"minimal", verdict_json(ssg, q, report.minimal)},
      {"simple", verdict_json(ssg, q, report.simple)},
      {"purely_infinite", verdict_json(ssg, q, report.purely_infinite)},
      {"stably_finite", verdict_json(ssg, q, report.stably_finite)},
  };
  out["dichotomy"] = report.dichotomy;
  out["g_trace"] = trace_json(ssg.graph(), report.g_trace);
  out["quotient_trace"] = trace_json(q.graph, report.quotient_trace);
  std::vector<std::string> egens, qgens;
  for (VertexId v = 0; v < ssg.graph().vertex_count(); ++v)
    egens.push_back(ssg.graph().vertex_name(v));
  for (VertexId v = 0; v < q.graph.vertex_count(); ++v)
    qgens.push_back(q.graph.vertex_name(v));
  out["monoid"] = {{"E", monoid_json(egens, report.monoid_e)},
                   {"quotient", monoid_json(qgens, report.monoid_quotient)}};
  out["bounds"] = {{"monoid_identity_bound", report.monoid_identity_bound},
                   {"monoid_degree_bound", report.monoid_degree_bound}};
  out["notes"] = report.notes;
  return out;
}

std::string render_report_text(const SelfSimilarGraph& ssg,
                               const ClassificationReport& report) {
  QuotientGraph q = build_quotient(ssg);
  std::ostringstream out;
  out << "input: " << report.input_summary << "\n";
  if (!report.source_free)
    out << "*** graph has a source: classification degraded to Unknown ***\n";
  out << "quotient: " << report.quotient.vertex_count << " vertices, "
      << report.quotient.edge_count << " edges\n";
  for (const auto& [v, c] : report.quotient.orbit_map)
    out << "  " << v << " -> " << c << "\n";
  out << verdict_text(ssg, q, "pseudo-free", report.pseudo_free);
  out << verdict_text(ssg, q, "effectivity", report.effectivity);
  out << verdict_text(ssg, q, "minimal", report.minimal);
  out << verdict_text(ssg, q, "simple", report.simple);
  out << verdict_text(ssg, q, "purely infinite", report.purely_infinite);
  out << verdict_text(ssg, q, "stably finite", report.stably_finite);
  out << "dichotomy: " << report.dichotomy << "\n";
  std::vector<std::string> egens, qgens;
  for (VertexId v = 0; v < ssg.graph().vertex_count(); ++v)
    egens.push_back(ssg.graph().vertex_name(v));
  for (VertexId v = 0; v < q.graph.vertex_count(); ++v)
    qgens.push_back(q.graph.vertex_name(v));
  out << "g-trace on E: " << trace_json(ssg.graph(), report.g_trace).dump()
      << "\n";
  out << "trace on quotient: "
      << trace_json(q.graph, report.quotient_trace).dump() << "\n";
  out << "monoid(E): " << monoid_json(egens, report.monoid_e).dump() << "\n";
  out << "monoid(quotient): "
      << monoid_json(qgens, report.monoid_quotient).dump() << "\n";
  for (const std::string& n : report.notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace ssg
