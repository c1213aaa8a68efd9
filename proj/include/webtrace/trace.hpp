#pragma once

#include "webtrace/quantum.hpp"
#include "webtrace/representation.hpp"
#include "webtrace/tensor.hpp"
#include "webtrace/web.hpp"

namespace webtrace {

struct TraceOptions {
  // Bounds both the number of edge colorings a coloring sum may visit and
  // the entry count of any tensor produced along the way.
  long long budget = 10'000'000;
};

// Partition function of a closed diagram: the sum over all edge colorings by
// {0..n-1} of the product of vertex tensor entries, each vertexless loop
// contributing an independent factor n. Direct summation; serves as the
// oracle for the planned evaluator.
Rat naive_trace(const Representation& r, const Web& g, const TraceOptions& opts = {});

// Boundary tensor of a (k,l)-web: in-index a is the color of the edge
// leaving root a, out-index b the color of the edge entering sink b; interior
// edges are summed out. For a (0,0) web the single entry is naive_trace.
Tensor extended_trace(const Representation& r, const Web& w, const TraceOptions& opts = {});

// Linear extension over the terms of a quantum web. All terms must share one
// boundary profile; the zero quantum web yields the (0,0) zero tensor.
Tensor quantum_trace(const Representation& r, const QuantumWeb& q, const TraceOptions& opts = {});

// Convenience for profile-(0,0) quantum webs.
Rat quantum_trace_scalar(const Representation& r, const QuantumWeb& q, const TraceOptions& opts = {});

}  // namespace webtrace
