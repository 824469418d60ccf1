#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "ssg/classify.hpp"

using namespace ssg;

TEST_CASE("cyclic ring: simple and purely infinite") {
  for (int n : {2, 3, 5}) {
    SelfSimilarGraph ssg = corpus::cyclic_ring(n);
    ClassificationReport r = classify(ssg);

    CHECK(r.source_free);
    CHECK(r.pseudo_free.value == Truth::Yes);
    CHECK(r.effectivity.value == Truth::Yes);
    CHECK(r.minimal.value == Truth::Yes);
    CHECK(r.simple.value == Truth::Yes);
    CHECK(r.purely_infinite.value == Truth::Yes);
    CHECK(r.stably_finite.value == Truth::No);
    CHECK(r.dichotomy == "purely infinite (Kirchberg)");
    REQUIRE(r.purely_infinite.g_circuit);

    CHECK(!r.g_trace);
    CHECK(!r.quotient_trace);
    CHECK(r.monoid_quotient.verdict == GroupTestVerdict::Value::Group);

    CHECK(r.quotient.vertex_count == 2);
    CHECK(r.quotient.edge_count == n + 2);

    CHECK(replay_witnesses(ssg, r).empty());
  }
}

TEST_CASE("non-pseudo-free input degrades to named gaps") {
  SelfSimilarGraph ssg = corpus::z2_two_loops(/*flat=*/true);
  ClassificationReport r = classify(ssg);
  CHECK(r.pseudo_free.value == Truth::No);
  REQUIRE(r.pseudo_free.ge_pair);
  CHECK(r.simple.value == Truth::Unknown);
  CHECK(!r.simple.gap.empty());
  CHECK(r.stably_finite.value == Truth::Unknown);
  CHECK(replay_witnesses(ssg, r).empty());
}

TEST_CASE("pseudo-free but cylinder-fixing input is not effective") {
  SelfSimilarGraph ssg = corpus::z2_two_loops(/*flat=*/false);
  ClassificationReport r = classify(ssg);
  CHECK(r.pseudo_free.value == Truth::Yes);
  CHECK(r.effectivity.value == Truth::No);
  REQUIRE(r.effectivity.gv_pair);
  // quotient graph is two loops at one vertex: still graph-algebra simple,
  // so simplicity of the twisted algebra stays open
  CHECK(r.simple.value == Truth::Unknown);
  CHECK(replay_witnesses(ssg, r).empty());
}

TEST_CASE("source-present input yields a degraded report") {
  Graph g;
  g.add_vertex("u");
  g.add_vertex("w");
  g.add_edge("a", "u", "w");  // u is a source
  SelfSimilarGraph ssg = corpus::trivial_ssg(std::move(g));
  ClassificationReport r = classify(ssg);
  CHECK(!r.source_free);
  CHECK(r.simple.value == Truth::Unknown);
  CHECK(r.purely_infinite.value == Truth::Unknown);
  CHECK(r.stably_finite.value == Truth::Unknown);
  CHECK(r.dichotomy == "not applicable (source present)");
  CHECK(replay_witnesses(ssg, r).empty());
}

TEST_CASE("disconnected loops: simple No with a replayable witness") {
  SelfSimilarGraph ssg = corpus::trivial_ssg(corpus::disconnected_loops());
  ClassificationReport r = classify(ssg);
  CHECK(r.simple.value == Truth::No);
  CHECK(r.minimal.value == Truth::No);
  CHECK(r.effectivity.value == Truth::No);  // entryless loops
  CHECK(r.stably_finite.value == Truth::Unknown);
  CHECK(r.purely_infinite.value != Truth::No);
  CHECK(replay_witnesses(ssg, r).empty());
}

TEST_CASE("trivial-group classification matches the plain-graph criteria") {
  std::mt19937 rng(60601);
  for (int i = 0; i < 30; ++i) {
    SelfSimilarGraph ssg = corpus::random_trivial(rng);
    ClassificationReport r = classify(ssg, 4, 8);  // cheap monoid budget
    GraphAlgebraResult plain = graph_algebra_simple(ssg.graph());
    if (plain.holds) {
      CHECK(r.simple.value == Truth::Yes);
      CHECK(r.purely_infinite.value == Truth::Yes);  // forced circuit
    } else {
      CHECK(r.simple.value == Truth::No);
    }
    CHECK(replay_witnesses(ssg, r).empty());
  }
}

TEST_CASE("report invariants across a randomized corpus") {
  std::mt19937 rng(60602);
  std::vector<SelfSimilarGraph> instances;
  for (int n : {1, 2, 3, 5}) instances.push_back(corpus::cyclic_ring(n));
  instances.push_back(corpus::z2_two_loops(true));
  instances.push_back(corpus::z2_two_loops(false));
  for (int i = 0; i < 40; ++i)
    instances.push_back(corpus::random_cyclic(rng, 1 + i % 4));

  for (const SelfSimilarGraph& ssg : instances) {
    ClassificationReport r = classify(ssg, 4, 8);  // cheap monoid budget

    // a finite source-free graph always contains a circuit
    CHECK(r.stably_finite.value != Truth::Yes);
    // dichotomy exclusivity
    CHECK(!(r.purely_infinite.value == Truth::Yes &&
            r.stably_finite.value == Truth::Yes));
    if (r.simple.value == Truth::Yes)
      CHECK(((r.purely_infinite.value == Truth::Yes &&
              r.stably_finite.value == Truth::No) ||
             (r.purely_infinite.value == Truth::No &&
              r.stably_finite.value == Truth::Yes)));
    // trace consistency: a purely infinite verdict excludes a trace
    if (r.purely_infinite.value == Truth::Yes && r.simple.value == Truth::Yes)
      CHECK(!r.quotient_trace);
    // the two trace computations must agree on existence
    CHECK(r.g_trace.has_value() == r.quotient_trace.has_value());

    CHECK(replay_witnesses(ssg, r).empty());
  }
}
