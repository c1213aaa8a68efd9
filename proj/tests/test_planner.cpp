#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "webtrace/errors.hpp"
#include "webtrace/planner.hpp"
#include "webtrace/trace.hpp"
#include "webtrace/web.hpp"

using namespace webtrace;

namespace {

SignaturePtr two_type_sig() { return TypeSignature::make({{"f", 2, 2}, {"g", 1, 1}}); }

}  // namespace

TEST_CASE("plans touch every vertex and stay inside components") {
  auto sig = two_type_sig();
  testutil::Rng rng(41);
  for (int i = 0; i < 30; ++i) {
    const Web w = testutil::random_web(rng, sig, 0, 0, 4);
    const ContractionPlan plan = plan_contraction(w);
    CHECK(plan.initial_factors == static_cast<int>(w.vertices().size()));
    const int m = plan.initial_factors;
    for (std::size_t s = 0; s < plan.steps.size(); ++s) {
      const auto& step = plan.steps[s];
      const int limit = m + static_cast<int>(s);
      CHECK(step.first >= 0);
      CHECK(step.second >= 0);
      CHECK(step.first < limit);
      CHECK(step.second < limit);
    }
  }
}

TEST_CASE("planned trace equals naive trace on random webs") {
  auto sig = two_type_sig();
  testutil::Rng rng(42);
  for (int i = 0; i < 60; ++i) {
    const int n = testutil::uniform(rng, 0, 3);
    const Representation r = testutil::random_representation(rng, sig, n);
    const Web w = testutil::random_web(rng, sig, 0, 0, 4);
    CHECK(planned_trace(r, w) == naive_trace(r, w));
  }
}

TEST_CASE("planned trace on handpicked shapes") {
  auto sig = two_type_sig();
  testutil::Rng rng(43);
  const Representation r = testutil::random_representation(rng, sig, 3);

  // no vertices at all
  CHECK(planned_trace(r, Web(sig, {}, {}, 0, 0, 0)) == make_rat(1));
  CHECK(planned_trace(r, Web(sig, {}, {}, 0, 0, 2)) == make_rat(9));

  // triangle of (1,1) vertices
  const std::vector<int> ggg = {1, 1, 1};
  const Web triangle = cycle_diagram(sig, ggg);
  CHECK(planned_trace(r, triangle) == naive_trace(r, triangle));

  // double edge between two (2,2) vertices, both wirings
  WebBuilder b(sig);
  const int v1 = b.add_vertex("a", "f");
  const int v2 = b.add_vertex("b", "f");
  b.edge(v1, 1, v2, 1).edge(v1, 2, v2, 2).edge(v2, 1, v1, 1).edge(v2, 2, v1, 2);
  const Web theta = b.build(0, 0);
  CHECK(planned_trace(r, theta) == naive_trace(r, theta));

  // self-loops: a (2,2) vertex closed onto itself
  WebBuilder b2(sig);
  const int u = b2.add_vertex("a", "f");
  b2.edge(u, 1, u, 2).edge(u, 2, u, 1);
  const Web curl = b2.build(0, 0);
  CHECK(planned_trace(r, curl) == naive_trace(r, curl));

  // two disjoint components times a loop
  const Web both = disjoint_union(disjoint_union(triangle, curl), Web(sig, {}, {}, 0, 0, 1));
  CHECK(planned_trace(r, both) == naive_trace(r, both));
  CHECK(planned_trace(r, both) ==
        planned_trace(r, triangle) * planned_trace(r, curl) * make_rat(3));
}

TEST_CASE("plan cost is positive and bounds the run") {
  auto sig = two_type_sig();
  testutil::Rng rng(44);
  const Representation r = testutil::random_representation(rng, sig, 3);
  std::vector<int> word(6, 1);
  const Web big = cycle_diagram(sig, word);
  const ContractionPlan plan = plan_contraction(big);
  CHECK(plan_cost(big, plan, 3) > 0);

  TraceOptions tight;
  tight.budget = 2;
  CHECK_THROWS_AS(planned_trace(r, big, tight), Error);
  try {
    planned_trace(r, big, tight);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::budget_exceeded);
  }
}

TEST_CASE("planned trace beats the naive coloring count on a long cycle") {
  // 10 (1,1)-vertices in a cycle: 3^10 colorings naive, but pairwise
  // contraction stays quadratic. Keep the naive side unevaluated and just
  // check the planned cost is far below the coloring count.
  auto sig = two_type_sig();
  std::vector<int> word(10, 1);
  const Web big = cycle_diagram(sig, word);
  const ContractionPlan plan = plan_contraction(big);
  CHECK(plan_cost(big, plan, 3) < Int(3000));  // 3^10 = 59049 colorings

  testutil::Rng rng(45);
  const Representation r = testutil::random_representation(rng, sig, 3);
  TraceOptions opts;
  opts.budget = 3000;  // enough for the plan, nowhere near enough for naive
  const Rat planned = planned_trace(r, big, opts);
  CHECK_THROWS_AS(naive_trace(r, big, opts), Error);
  TraceOptions roomy;
  CHECK(planned == naive_trace(r, big, roomy));
}

TEST_CASE("planned trace rejects open or invalid webs") {
  auto sig = two_type_sig();
  testutil::Rng rng(46);
  const Representation r = testutil::random_representation(rng, sig, 2);
  CHECK_THROWS_AS(planned_trace(r, word_web(sig, {})), Error);
  WebBuilder b(sig);
  b.add_vertex("a", "g");
  CHECK_THROWS_AS(planned_trace(r, b.build(0, 0, false)), Error);
}
