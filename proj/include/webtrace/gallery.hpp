#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "webtrace/certify.hpp"
#include "webtrace/linalg.hpp"
#include "webtrace/quantum.hpp"
#include "webtrace/representation.hpp"

namespace webtrace {

enum class Expectation { zero, nonzero, unchecked };

struct Relation {
  std::string name;
  QuantumWeb web;
  Expectation expect = Expectation::unchecked;
};

// A worked example family: a signature, its defining relation set as quantum
// webs, and (when one exists) a concrete representation together with the
// declared outcome of evaluating each relation under it.
struct ExamplePack {
  std::string name;
  SignaturePtr sig;
  std::vector<Relation> relations;
  std::optional<Representation> rep;
  std::vector<std::string> notes;
};

// Finite multiplication table; may be a fragment of a larger (even infinite)
// group: products are only recorded where they stay inside the element list.
struct GroupTable {
  std::vector<std::string> elements;
  std::string unit;
  std::map<std::pair<std::string, std::string>, std::string> product;
};

// Two crossing types of arity (2,2) with the Reidemeister-move relations in
// their standard form; representation: both crossings act as the swap on
// V (x) V, so every move holds exactly (the resulting invariant is
// dim^(number of components) — it certifies the machinery, not knots).
ExamplePack virtual_links(int dim = 2);

// One chord type of arity (2,2); relations: chord-flip symmetry and the 4T
// relation in its standard commutator form. Representation: the matrix-unit
// chord tensor, concretely the same swap array.
ExamplePack chord_diagrams(int dim = 2);

// One (1,1) type per element; relations: one per recorded product
// ((a then b path) minus the ab vertex) plus the unit law (unit vertex minus
// bare strand). Each relation's expectation is computed by direct matrix
// arithmetic: expected zero iff R(a)R(b) = R(ab) (resp. R(unit) = I).
// Throws when the table is inconsistent (bad unit or associativity where
// defined) or a matrix is missing or ill-shaped.
ExamplePack group_pack(const std::string& name, const GroupTable& table, int dim,
                       const std::map<std::string, RatMatrix>& matrices);

// Types mul (2,1) and unit (0,1); relations: associativity and the two unit
// laws. c[i][j][k] is the coefficient of basis element k in e_i * e_j; unit
// holds the unit's coordinates. Expectations come from directly checking the
// structure constants.
ExamplePack algebra_pack(const std::string& name,
                         const std::vector<std::vector<std::vector<Rat>>>& c,
                         const std::vector<Rat>& unit);

// (Permuted single-vertex web) minus (unpermuted), both around one vertex of
// the named type: in-edge a enters slot in_perm[a], out-edge b leaves toward
// sink out_perm[b]. Vanishes under R exactly when R's tensor has the
// corresponding index symmetry.
QuantumWeb directed_graph_relation(const SignaturePtr& sig, std::string_view type,
                                   std::span<const int> in_perm,
                                   std::span<const int> out_perm);

// Two (2,0) types holding a symmetric and an asymmetric array; the input-swap
// relation vanishes for the first and not the second.
ExamplePack directed_graphs_pack();

// One (1,1) type with the 2x2 unipotent array [[1,1],[0,1]]; its relation
// (typed vertex minus bare strand) evaluates to a nonzero nilpotent tensor,
// yet every closed product trace vanishes, so bounded witness search
// exhausts: the canonical degenerate representation.
ExamplePack degenerate_example();

// Signature only: the five structure types of a Hopf-algebra presentation
// (product 2->1, unit 0->1, coproduct 1->2, counit 1->0, antipode 1->1).
// No relation set and no representation are shipped.
ExamplePack hopf_template();

std::vector<std::string> gallery_names();
ExamplePack gallery_pack(std::string_view name);

struct RelationCheck {
  std::string name;
  Expectation expect = Expectation::unchecked;
  bool zero = false;
  bool match = false;
};

// Recomputes every relation of the pack under its representation and
// compares against the declared expectations. Packs without a representation
// yield all-unchecked results (match = true).
std::vector<RelationCheck> check_pack(const ExamplePack& pack, const TraceOptions& opts = {});

}  // namespace webtrace
