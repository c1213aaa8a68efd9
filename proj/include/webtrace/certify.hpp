#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "webtrace/enumerate.hpp"
#include "webtrace/linalg.hpp"
#include "webtrace/planner.hpp"
#include "webtrace/quantum.hpp"
#include "webtrace/representation.hpp"
#include "webtrace/trace.hpp"

namespace webtrace {

// Gram-style matrix of the trace against gluing: entry (i, j) is the trace
// of glue(row_webs[i], col_webs[j]). Symmetric whenever rows = columns,
// because gluing is symmetric up to isomorphism.
struct ConnectionMatrix {
  int k = 0;
  std::vector<Web> row_webs;
  std::vector<Web> col_webs;
  RatMatrix entries;
};

struct DeltaReport {
  int dim = 0;
  bool hat_zero = false;
};

// Evaluates the antisymmetrizer on dim+1 strands under R and reports whether
// the resulting boundary tensor vanishes. It must, for every representation:
// dim+1 indices in a dim-dimensional space cannot be antisymmetrized.
// Requires dim + 1 <= 8 (materialized antisymmetrizer).
DeltaReport check_delta_annihilation(const Representation& r, const TraceOptions& opts = {});

// All webs must have profile (k, k); rows and columns are the same list.
ConnectionMatrix connection_matrix(const Representation& r, int k,
                                   std::span<const Web> webs,
                                   const TraceOptions& opts = {});

// Rank over the rationals via fraction-free (Bareiss) elimination on the
// integer matrix obtained by clearing row denominators.
long exact_rank(const RatMatrix& m);

struct RankReport {
  int k = 0;
  std::size_t web_count = 0;
  long rank = 0;
  Int bound;  // dim^(2k)
  bool pass = false;
};

// For each k <= k_max: enumerate (k,k)-webs within bounds, form the
// connection matrix of the trace, and compare its exact rank against
// dim^(2k). Every genuine trace of dimension dim must pass.
std::vector<RankReport> rank_growth_check(const Representation& r, int k_max,
                                          const EnumerationBounds& bounds = {},
                                          const TraceOptions& opts = {});

struct WitnessReport {
  std::optional<Web> witness;   // first web (canonical order) with nonzero product trace
  std::size_t candidates = 0;   // webs examined
};

// Searches enumerate_webs(sig, l, k, bounds) for a web W with
// trace(omega * W) != 0, where omega has profile (k, l). Exhaustion is a
// bounded semi-decision, not a proof that omega is annihilated.
WitnessReport annihilation_witness_search(const Representation& r, const QuantumWeb& omega,
                                          const EnumerationBounds& bounds = {},
                                          const TraceOptions& opts = {});

// The two-dimensional trace identity
//   f(abc) + f(cba) + f(a)f(b)f(c) = f(ab)f(c) + f(ac)f(b) + f(bc)f(a)
// with f(w) the trace of the cycle diagram through the word's vertices.
// Types a, b, c must exist with arity (1,1). Holds for every representation
// of dimension <= 2; fails for generic higher-dimensional ones.
bool character_identity_check(const Representation& r, std::string_view a,
                              std::string_view b, std::string_view c,
                              const TraceOptions& opts = {});

}  // namespace webtrace
