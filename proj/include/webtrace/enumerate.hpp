#pragma once

#include <vector>

#include "webtrace/web.hpp"

namespace webtrace {

struct EnumerationBounds {
  int max_vertices = 3;
  int max_loops = 1;
};

// All valid (roots, sinks)-webs over the signature with at most max_vertices
// typed vertices and at most max_loops vertexless loops, one representative
// per isomorphism class, ordered by (vertex count, loop count, canonical
// key). Throws Error(cap_exceeded) when a vertex-type choice yields too many
// wirings to enumerate.
std::vector<Web> enumerate_webs(const SignaturePtr& sig, int roots, int sinks,
                                const EnumerationBounds& bounds = {});

}  // namespace webtrace
