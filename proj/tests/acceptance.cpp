// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails. Independent of the doctest suites.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <tuple>

#include "corpus.hpp"
#include "ssg/classify.hpp"
#include "ssg/io.hpp"

using namespace ssg;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int index, const char* what, bool ok, const std::string& note = "") {
  std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", index, what,
              note.empty() ? "" : " -- ", note.c_str());
  if (!ok) ++failures;
}

// ---- criterion 1: golden cyclic example ----
void criterion_1() {
  bool ok = true;
  std::string note;
  for (int n : {2, 3, 5}) {
    auto t0 = Clock::now();
    SelfSimilarGraph ssg = corpus::cyclic_ring(n);
    QuotientGraph q = build_quotient(ssg);
    ClassificationReport r = classify(ssg);
    double dt = seconds_since(t0);

    int loops_at_w1 = 0;
    for (EdgeId e = 0; e < q.graph.edge_count(); ++e)
      if (q.graph.dom(e) == 1 && q.graph.ran(e) == 1) ++loops_at_w1;

    bool this_ok = q.graph.vertex_count() == 2 &&
                   q.graph.edge_count() == n + 2 && loops_at_w1 == 2 &&
                   q.graph.vertex_name(1) == "[w1]" &&
                   r.simple.value == Truth::Yes &&
                   r.purely_infinite.value == Truth::Yes &&
                   r.dichotomy == "purely infinite (Kirchberg)" && dt < 1.0;
    if (!this_ok) note += " n=" + std::to_string(n) + " failed";
    ok = ok && this_ok;
  }
  report(1, "golden cyclic example (n = 2, 3, 5)", ok, note);
}

// ---- criterion 2: trivial-group degeneration ----
void criterion_2() {
  auto t0 = Clock::now();
  std::mt19937 rng(20260823);
  bool ok = true;
  for (int i = 0; i < 50 && ok; ++i) {
    SelfSimilarGraph ssg = corpus::random_trivial(rng, 6, 10);
    const Graph& g = ssg.graph();
    QuotientGraph q = build_quotient(ssg);

    // quotient is a copy of E: edge_origin is a bijection preserving
    // endpoints and names (quotient edges are grouped by receiving vertex)
    ok = q.graph.vertex_count() == g.vertex_count() &&
         q.graph.edge_count() == g.edge_count();
    std::vector<char> seen_origin(g.edge_count(), 0);
    for (EdgeId e = 0; ok && e < q.graph.edge_count(); ++e) {
      EdgeId o = q.edge_origin[e];
      ok = !seen_origin[o] && q.graph.dom(e) == g.dom(o) &&
           q.graph.ran(e) == g.ran(o) &&
           q.graph.edge(e).name == "~" + g.edge(o).name;
      seen_origin[o] = 1;
    }
    for (VertexId v = 0; ok && v < g.vertex_count(); ++v)
      ok = q.orbit_of[v] == v && q.rep[v] == v;

    // every G-notion collapses to its plain counterpart
    ok = ok && find_g_circuit(ssg).has_value() == !find_circuits(g).empty();
    bool plain_entries = true;
    for (const Circuit& c : find_circuits(g))
      if (!has_entry(g, c)) plain_entries = false;
    ok = ok && g_circuits_all_have_entry(ssg).all_have_entry == plain_entries;
    ok = ok && is_weakly_g_transitive(ssg).cofinal == is_cofinal(g).cofinal;
    ok = ok &&
         graph_g_trace_exists(ssg).has_value() ==
             graph_trace_exists(g).has_value();
    ok = ok && is_pseudo_free(ssg).pseudo_free &&
         cylinder_condition_holds(ssg).holds;
  }
  double dt = seconds_since(t0);
  report(2, "trivial-group degeneration (50 graphs)", ok && dt < 10.0,
         "took " + std::to_string(dt) + " s");
}

std::vector<SelfSimilarGraph> symmetric_corpus(int count) {
  std::mt19937 rng(777001);
  std::vector<SelfSimilarGraph> out;
  for (int n : {1, 2, 3, 4}) out.push_back(corpus::cyclic_ring(n));
  while (static_cast<int>(out.size()) < count)
    out.push_back(corpus::random_cyclic(rng, 1 + out.size() % 4));
  return out;
}

// ---- criterion 3: the E-side/quotient-side equivalences ----
void criterion_3(const std::vector<SelfSimilarGraph>& corpus_) {
  auto t0 = Clock::now();
  int disagreements = 0;
  for (const SelfSimilarGraph& ssg : corpus_) {
    QuotientGraph q = build_quotient(ssg);
    if (find_g_circuit(ssg).has_value() != !find_circuits(q.graph).empty())
      ++disagreements;
    bool q_entries = true;
    for (const Circuit& c : find_circuits(q.graph))
      if (!has_entry(q.graph, c)) q_entries = false;
    if (g_circuits_all_have_entry(ssg).all_have_entry != q_entries)
      ++disagreements;
    if (is_weakly_g_transitive(ssg).cofinal != is_cofinal(q.graph).cofinal)
      ++disagreements;
  }
  double dt = seconds_since(t0);
  report(3, "G-circuit / entry / transitivity equivalences (200+ instances)",
         disagreements == 0 && dt < 60.0,
         std::to_string(disagreements) + " disagreements, " +
             std::to_string(dt) + " s");
}

// ---- criterion 4: trace bridge ----
void criterion_4(const std::vector<SelfSimilarGraph>& corpus_) {
  bool ok = true;
  for (const SelfSimilarGraph& ssg : corpus_) {
    QuotientGraph q = build_quotient(ssg);
    auto gt = graph_g_trace_exists(ssg);
    auto qt = graph_trace_exists(q.graph);
    if (gt.has_value() != qt.has_value()) ok = false;
    if (gt && !verify_graph_g_trace(ssg, *gt)) ok = false;
    if (qt && !verify_graph_trace(q.graph, *qt)) ok = false;

    if (find_circuits(q.graph).empty() && !qt) ok = false;

    bool q_entries = true;
    std::vector<char> on_circuit(q.graph.vertex_count(), 0);
    for (const Circuit& c : find_circuits(q.graph)) {
      if (!has_entry(q.graph, c)) q_entries = false;
      for (VertexId v : circuit_vertices(q.graph, c)) on_circuit[v] = 1;
    }
    bool all_below = true;
    for (VertexId v = 0; v < q.graph.vertex_count(); ++v) {
      std::vector<char> reach = reachable_from(q.graph, v);
      bool hit = false;
      for (VertexId w = 0; w < q.graph.vertex_count(); ++w)
        if (reach[w] && on_circuit[w]) hit = true;
      all_below = all_below && hit;
    }
    if (is_cofinal(q.graph).cofinal && q_entries && all_below && qt) ok = false;
  }
  report(4, "trace existence bridge with exact certificates", ok);
}

// ---- criterion 5: monoid group test vs the structural criterion ----
void criterion_5() {
  bool ok = true;
  std::vector<Graph> curated;
  curated.push_back(corpus::two_loops());
  curated.push_back(corpus::one_loop());
  curated.push_back(corpus::two_cycle());
  curated.push_back(corpus::disconnected_loops());
  std::mt19937 rng(550055);
  while (curated.size() < 24) {
    SelfSimilarGraph ssg = corpus::random_trivial(rng, 4, 6);
    curated.push_back(ssg.graph());
  }

  for (std::size_t i = 0; i < curated.size(); ++i) {
    const Graph& g = curated[i];
    GroupTestVerdict v = is_group_nonzero(monoid_of(g));
    bool structural = graph_algebra_simple(g).holds &&
                      !find_circuits(g).empty();
    if (v.verdict == GroupTestVerdict::Value::Group && !structural) ok = false;
    if (v.verdict == GroupTestVerdict::Value::NotGroup && structural)
      ok = false;
  }
  GroupTestVerdict two = is_group_nonzero(monoid_of(corpus::two_loops()));
  GroupTestVerdict one = is_group_nonzero(monoid_of(corpus::one_loop()));
  GroupTestVerdict cyc = is_group_nonzero(monoid_of(corpus::two_cycle()));
  ok = ok && two.verdict == GroupTestVerdict::Value::Group &&
       one.verdict == GroupTestVerdict::Value::NotGroup &&
       cyc.verdict == GroupTestVerdict::Value::NotGroup;
  report(5, "monoid group test vs structural criterion (24 curated graphs)",
         ok);
}

// ---- criterion 6: fixed point vs path-fixing oracle ----
struct FixesAllOracle {
  const SelfSimilarGraph& ssg;
  std::map<std::tuple<GroupElem, VertexId, int>, bool> memo;
  bool operator()(GroupElem h, VertexId w, int depth) {
    if (depth == 0) return true;
    auto key = std::make_tuple(h, w, depth);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = ssg.act_vertex(h, w) == w;
    for (EdgeId e : ssg.graph().in_edges(w)) {
      if (!ok) break;
      ok = ssg.act_edge(h, e) == e &&
           (*this)(ssg.restrict(h, e), ssg.graph().dom(e), depth - 1);
    }
    memo[key] = ok;
    return ok;
  }
};

void criterion_6(const std::vector<SelfSimilarGraph>& corpus_) {
  int disagreements = 0;
  for (const SelfSimilarGraph& ssg : corpus_) {
    TrivSet triv = compute_triv(ssg);
    FixesAllOracle oracle{ssg, {}};
    int depth = ssg.group().order() * ssg.graph().vertex_count() + 1;
    for (GroupElem g = 0; g < ssg.group().order(); ++g)
      for (VertexId v = 0; v < ssg.graph().vertex_count(); ++v)
        if (triv.contains(g, v) != oracle(g, v, depth)) ++disagreements;
  }
  report(6, "transducer fixed point vs brute-force path oracle",
         disagreements == 0, std::to_string(disagreements) + " disagreements");
}

// ---- criteria 7 and 8: report meta-invariants and witness replay ----
void criteria_7_8(const std::vector<SelfSimilarGraph>& corpus_) {
  bool meta_ok = true;
  bool replay_ok = true;
  std::string replay_note;

  std::vector<const SelfSimilarGraph*> all;
  for (const SelfSimilarGraph& s : corpus_) all.push_back(&s);
  std::vector<SelfSimilarGraph> extra;
  extra.push_back(corpus::z2_two_loops(true));
  extra.push_back(corpus::z2_two_loops(false));
  extra.push_back(corpus::trivial_ssg(corpus::disconnected_loops()));
  extra.push_back(corpus::trivial_ssg(corpus::one_loop()));
  extra.push_back(corpus::trivial_ssg(corpus::two_loops()));
  extra.push_back(corpus::trivial_ssg(corpus::two_cycle()));
  for (const SelfSimilarGraph& s : extra) all.push_back(&s);

  for (const SelfSimilarGraph* ssg : all) {
    // cheap monoid budget: the monoid verdicts are corroborating data and
    // criteria 7/8 quantify over the report verdicts, not the budget
    ClassificationReport r = classify(*ssg, 4, 8);
    if (ssg->source_free() && r.stably_finite.value == Truth::Yes)
      meta_ok = false;
    if (r.purely_infinite.value == Truth::Yes &&
        r.stably_finite.value == Truth::Yes)
      meta_ok = false;
    if (r.simple.value == Truth::Yes &&
        !((r.purely_infinite.value == Truth::Yes &&
           r.stably_finite.value == Truth::No) ||
          (r.purely_infinite.value == Truth::No &&
           r.stably_finite.value == Truth::Yes)))
      meta_ok = false;
    if (r.g_trace.has_value() != r.quotient_trace.has_value()) meta_ok = false;
    if (r.simple.value == Truth::Yes &&
        r.purely_infinite.value == Truth::Yes && r.quotient_trace)
      meta_ok = false;

    std::vector<std::string> bad = replay_witnesses(*ssg, r);
    if (!bad.empty()) {
      replay_ok = false;
      if (replay_note.empty()) replay_note = bad.front();
    }
  }
  report(7, "meta-invariants across all emitted reports", meta_ok);
  report(8, "witness replay (100% of Yes/No verdicts)", replay_ok,
         replay_note);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  std::vector<SelfSimilarGraph> corpus_ = symmetric_corpus(220);
  criterion_3(corpus_);
  criterion_4(corpus_);
  criterion_5();
  criterion_6(corpus_);
  criteria_7_8(corpus_);
  return failures == 0 ? 0 : 1;
}
