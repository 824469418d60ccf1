#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ssg/classify.hpp"
#include "ssg/errors.hpp"
#include "ssg/io.hpp"

namespace {

// exit codes: 0 analysis done, 2 axiom/structural violations, 3 parse error
constexpr int kExitViolations = 2;
constexpr int kExitParse = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ssg::ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// validated model or a nonzero exit with one line per violation
ssg::SelfSimilarGraph load(const std::string& path) {
  ssg::ValidationResult result = ssg::load_and_validate(slurp(path));
  if (!result.ok()) {
    for (const ssg::Violation& v : result.violations)
      std::cerr << v.code << ": " << v.detail << "\n";
    std::exit(kExitViolations);
  }
  return std::move(*result.value);
}

int run(int argc, char** argv) {
  CLI::App app{"classification toolkit for finitely presented self-similar "
               "graphs"};
  app.require_subcommand(1);

  std::string path;
  std::string out_path;
  std::string which_graph = "E";
  int identity_bound = 6;
  int degree_bound = 24;
  bool as_json = false;
  bool as_text = false;

  auto* validate = app.add_subcommand("validate", "check all axioms");
  validate->add_option("path", path)->required();

  auto* quotient = app.add_subcommand("quotient", "emit the orbit quotient");
  quotient->add_option("path", path)->required();
  quotient->add_option("--out", out_path, "write here instead of stdout");

  auto* classify = app.add_subcommand("classify", "full classification report");
  classify->add_option("path", path)->required();
  classify->add_option("--monoid-bound", degree_bound,
                       "total-degree bound for the monoid word search");
  classify->add_option("--identity-bound", identity_bound,
                       "total-degree bound for monoid identity candidates");
  auto* jopt = classify->add_flag("--json", as_json, "JSON report");
  classify->add_flag("--text", as_text, "text report (default)")
      ->excludes(jopt);

  auto* trace = app.add_subcommand("trace", "trace feasibility with certificate");
  trace->add_option("path", path)->required();

  auto* monoid = app.add_subcommand("monoid", "graph monoid group test");
  monoid->add_option("path", path)->required();
  monoid->add_option("--graph", which_graph, "E or quotient")
      ->check(CLI::IsMember({"E", "quotient"}));
  monoid->add_option("--monoid-bound", degree_bound);
  monoid->add_option("--identity-bound", identity_bound);

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) {
    load(path);  // exits nonzero on violations
    std::cout << "ok\n";
    return 0;
  }

  if (quotient->parsed()) {
    ssg::SelfSimilarGraph ssg = load(path);
    ssg::QuotientGraph q = ssg::build_quotient(ssg);
    std::string doc = ssg::quotient_document(ssg, q).dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << doc;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw ssg::ParseError("cannot open " + out_path);
      out << doc;
    }
    return 0;
  }

  if (classify->parsed()) {
    ssg::SelfSimilarGraph ssg = load(path);
    ssg::ClassificationReport report =
        ssg::classify(ssg, identity_bound, degree_bound);
    if (as_json)
      std::cout << ssg::render_report_json(ssg, report).dump(2) << "\n";
    else
      std::cout << ssg::render_report_text(ssg, report);
    return 0;
  }

  if (trace->parsed()) {
    ssg::SelfSimilarGraph ssg = load(path);
    ssg::QuotientGraph q = ssg::build_quotient(ssg);
    nlohmann::ordered_json out;
    auto render = [](const ssg::Graph& g,
                     const std::optional<ssg::TraceSolution>& t) {
      nlohmann::ordered_json j;
      j["exists"] = t.has_value();
      if (t) {
        nlohmann::ordered_json w;
        for (ssg::VertexId v = 0; v < g.vertex_count(); ++v)
          w[g.vertex_name(v)] = ssg::rational_to_string(t->weights[v]);
        j["weights"] = w;
      }
      return j;
    };
    out["g_trace_on_E"] = render(ssg.graph(), ssg::graph_g_trace_exists(ssg));
    out["trace_on_quotient"] =
        render(q.graph, ssg::graph_trace_exists(q.graph));
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (monoid->parsed()) {
    ssg::SelfSimilarGraph ssg = load(path);
    ssg::QuotientGraph q = ssg::build_quotient(ssg);
    const ssg::Graph& g = which_graph == "E" ? ssg.graph() : q.graph;
    ssg::MonoidPresentation p = ssg::monoid_of(g);
    ssg::GroupTestVerdict verdict =
        ssg::is_group_nonzero(p, identity_bound, degree_bound);
    nlohmann::ordered_json out;
    switch (verdict.verdict) {
      case ssg::GroupTestVerdict::Value::Group: out["verdict"] = "Group"; break;
      case ssg::GroupTestVerdict::Value::NotGroup:
        out["verdict"] = "NotGroup";
        break;
      default: out["verdict"] = "Unknown"; break;
    }
    if (verdict.identity)
      out["identity"] = ssg::element_to_string(*verdict.identity, p.generators);
    if (!verdict.inverses.empty()) {
      nlohmann::ordered_json inv;
      for (std::size_t i = 0; i < verdict.inverses.size(); ++i)
        inv["a_" + p.generators[i]] =
            ssg::element_to_string(verdict.inverses[i], p.generators);
      out["inverses"] = inv;
    }
    if (verdict.functional) {
      nlohmann::ordered_json f;
      for (std::size_t i = 0; i < verdict.functional->size(); ++i)
        f[p.generators[i]] = ssg::rational_to_string((*verdict.functional)[i]);
      out["functional"] = f;
    }
    if (!verdict.note.empty()) out["note"] = verdict.note;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ssg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
