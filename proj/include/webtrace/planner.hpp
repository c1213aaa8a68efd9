#pragma once

#include <vector>

#include "webtrace/trace.hpp"

namespace webtrace {

// One pairwise contraction. first == second names a factor whose internal
// (self-loop) edges are traced out; otherwise the two factors merge, summing
// over every edge they share. Factor ids 0..m-1 are the typed vertices in
// order; step i produces factor m + i.
struct ContractionStep {
  int first = 0;
  int second = 0;
};

struct ContractionPlan {
  int initial_factors = 0;
  std::vector<ContractionStep> steps;
};

// Greedy planner: first traces out self-loops (ascending vertex id), then
// repeatedly merges the edge-sharing factor pair whose result has the fewest
// open axes, breaking ties by the smallest original vertex id contained in
// the pair. Every port-to-port edge is contracted by exactly one step;
// factors from different connected components are never merged.
ContractionPlan plan_contraction(const Web& g);

// Entry-count cost of running the plan at dimension dim: the sum over steps
// of the produced factor's entry count.
Int plan_cost(const Web& g, const ContractionPlan& plan, int dim);

// Trace of a closed diagram evaluated by pairwise contraction along
// plan_contraction's plan; agrees exactly with naive_trace.
Rat planned_trace(const Representation& r, const Web& g, const TraceOptions& opts = {});

}  // namespace webtrace
