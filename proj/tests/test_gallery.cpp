#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "webtrace/errors.hpp"
#include "webtrace/gallery.hpp"
#include "webtrace/io.hpp"
#include "webtrace/trace.hpp"

using namespace webtrace;

namespace {

const Relation& find_relation(const ExamplePack& pack, const std::string& name) {
  for (const Relation& r : pack.relations) {
    if (r.name == name) return r;
  }
  FAIL("no relation named ", name, " in pack ", pack.name);
  static Relation dummy{"", QuantumWeb(TypeSignature::make({{"x", 1, 1}})),
                        Expectation::unchecked};
  return dummy;
}

void expect_all_match(const ExamplePack& pack) {
  for (const RelationCheck& c : check_pack(pack)) {
    INFO(pack.name, " / ", c.name);
    CHECK(c.match);
  }
}

}  // namespace

TEST_CASE("the gallery lists twelve packs and builds each one") {
  const auto names = gallery_names();
  const std::vector<std::string> expected = {
      "virtual_links",    "chord_diagrams", "z2_diag",
      "z2_nonhom",        "z_fragment_unipotent", "trivial_group",
      "diag2_algebra",    "matrix2_algebra", "matrix2_algebra_perturbed",
      "directed_graphs",  "degenerate_unipotent", "hopf_template"};
  CHECK(names == expected);
  for (const auto& name : names) {
    const ExamplePack pack = gallery_pack(name);
    CHECK(pack.name == name);
    CHECK(pack.sig != nullptr);
  }
  CHECK_THROWS_AS(gallery_pack("nope"), Error);
}

TEST_CASE("every declared expectation is reproduced") {
  for (const auto& name : gallery_names()) {
    expect_all_match(gallery_pack(name));
  }
}

TEST_CASE("crossing moves vanish under the swap tensors") {
  const ExamplePack pack = virtual_links();
  REQUIRE(pack.rep.has_value());
  CHECK(pack.rep->dim() == 2);
  std::set<std::string> names;
  for (const Relation& r : pack.relations) {
    names.insert(r.name);
    CHECK(r.expect == Expectation::zero);
    CHECK(quantum_trace(*pack.rep, r.web).is_zero());
  }
  CHECK(names.count("r1_positive") == 1);
  CHECK(names.count("r1_negative") == 1);
  CHECK(names.count("r2") == 1);
  CHECK(names.count("r3") == 1);

  // the same moves hold at dimension 3
  const ExamplePack big = virtual_links(3);
  for (const Relation& r : big.relations) {
    CHECK(quantum_trace(*big.rep, r.web).is_zero());
  }
}

TEST_CASE("chord relations and the one-chord circle") {
  const ExamplePack pack = chord_diagrams();
  REQUIRE(pack.rep.has_value());

  CHECK(find_relation(pack, "chord_flip").expect == Expectation::zero);
  CHECK(find_relation(pack, "four_term").expect == Expectation::zero);
  CHECK(quantum_trace(*pack.rep, find_relation(pack, "four_term").web).is_zero());

  const Relation& circle = find_relation(pack, "one_chord_circle");
  CHECK(circle.expect == Expectation::nonzero);
  CHECK(quantum_trace_scalar(*pack.rep, circle.web) == make_rat(4));  // dim^2 at dim 2
}

TEST_CASE("group packs certify homomorphisms product by product") {
  const ExamplePack diag = gallery_pack("z2_diag");
  REQUIRE(diag.rep.has_value());
  for (const Relation& r : diag.relations) {
    CHECK(r.expect == Expectation::zero);  // a genuine homomorphism
  }

  const ExamplePack frag = gallery_pack("z_fragment_unipotent");
  CHECK(frag.sig->count() == 5);
  std::size_t products = 0;
  for (const Relation& r : frag.relations) {
    CHECK(r.expect == Expectation::zero);
    if (r.name != "unit") ++products;
  }
  CHECK(products == 15);  // recorded products of the five-element fragment

  const ExamplePack bad = gallery_pack("z2_nonhom");
  CHECK(find_relation(bad, "unit").expect == Expectation::zero);
  bool saw_nonzero = false;
  for (const Relation& r : bad.relations) saw_nonzero |= r.expect == Expectation::nonzero;
  CHECK(saw_nonzero);

  const ExamplePack triv = gallery_pack("trivial_group");
  REQUIRE(triv.rep.has_value());
  CHECK(triv.rep->dim() == 1);
  expect_all_match(triv);
}

TEST_CASE("group table validation") {
  GroupTable t;
  t.elements = {"e", "u"};
  t.unit = "e";
  t.product[{"e", "e"}] = "e";
  t.product[{"e", "u"}] = "u";
  t.product[{"u", "e"}] = "u";
  t.product[{"u", "u"}] = "e";
  const RatMatrix id2 = identity_matrix(2);
  const std::map<std::string, RatMatrix> mats = {{"e", id2}, {"u", id2}};

  CHECK(group_pack("ok", t, 2, mats).relations.size() == 5);

  GroupTable dup = t;
  dup.elements = {"e", "e"};
  CHECK_THROWS_AS(group_pack("dup", dup, 2, mats), Error);

  GroupTable no_unit = t;
  no_unit.unit = "z";
  CHECK_THROWS_AS(group_pack("no_unit", no_unit, 2, mats), Error);

  GroupTable stray = t;
  stray.product[{"u", "u"}] = "w";
  CHECK_THROWS_AS(group_pack("stray", stray, 2, mats), Error);

  GroupTable bad_unit = t;
  bad_unit.product[{"e", "u"}] = "e";
  CHECK_THROWS_AS(group_pack("bad_unit", bad_unit, 2, mats), Error);

  GroupTable bad_row = t;
  bad_row.product[{"u", "e"}] = "e";  // violates the unit law
  CHECK_THROWS_AS(group_pack("bad_row", bad_row, 2, mats), Error);

  std::map<std::string, RatMatrix> missing = mats;
  missing.erase("u");
  CHECK_THROWS_AS(group_pack("missing", t, 2, missing), Error);

  std::map<std::string, RatMatrix> ragged = mats;
  ragged["u"] = {{make_rat(1)}};
  CHECK_THROWS_AS(group_pack("ragged", t, 2, ragged), Error);
}

TEST_CASE("a genuinely non-associative table is rejected") {
  // three elements, unit e, with (a a) a != a (a a) where all intermediate
  // products are recorded
  GroupTable t;
  t.elements = {"e", "a", "b"};
  t.unit = "e";
  for (const std::string& g : t.elements) {
    t.product[{"e", g}] = g;
    t.product[{g, "e"}] = g;
  }
  t.product[{"a", "a"}] = "b";
  t.product[{"a", "b"}] = "e";
  t.product[{"b", "a"}] = "a";  // (a a) a = b a = a, but a (a a) = a b = e
  t.product[{"b", "b"}] = "b";
  const RatMatrix id2 = identity_matrix(2);
  const std::map<std::string, RatMatrix> mats = {{"e", id2}, {"a", id2}, {"b", id2}};
  CHECK_THROWS_AS(group_pack("bad", t, 2, mats), Error);
}

TEST_CASE("algebra packs certify associativity and units") {
  const ExamplePack m2 = gallery_pack("matrix2_algebra");
  REQUIRE(m2.rep.has_value());
  CHECK(m2.rep->dim() == 4);
  for (const Relation& r : m2.relations) CHECK(r.expect == Expectation::zero);
  expect_all_match(m2);

  const ExamplePack diag = gallery_pack("diag2_algebra");
  for (const Relation& r : diag.relations) CHECK(r.expect == Expectation::zero);
  expect_all_match(diag);

  const ExamplePack bad = gallery_pack("matrix2_algebra_perturbed");
  CHECK(find_relation(bad, "assoc").expect == Expectation::nonzero);
  REQUIRE(bad.rep.has_value());
  CHECK_FALSE(quantum_trace(*bad.rep, find_relation(bad, "assoc").web).is_zero());
  CHECK(find_relation(bad, "unit_left").expect == Expectation::zero);
  CHECK(find_relation(bad, "unit_right").expect == Expectation::zero);
  expect_all_match(bad);

  CHECK_THROWS_AS(algebra_pack("empty", {}, {}), Error);
  // ragged structure constants
  std::vector<std::vector<std::vector<Rat>>> c(
      2, std::vector<std::vector<Rat>>(2, std::vector<Rat>(2, make_rat(0))));
  c[1].pop_back();
  CHECK_THROWS_AS(algebra_pack("ragged", c, {make_rat(1), make_rat(0)}),
                  Error);
}

TEST_CASE("index symmetry relations on array types") {
  const ExamplePack pack = gallery_pack("directed_graphs");
  REQUIRE(pack.rep.has_value());
  CHECK(find_relation(pack, "sym_swap").expect == Expectation::zero);
  CHECK(find_relation(pack, "asym_swap").expect == Expectation::nonzero);
  expect_all_match(pack);

  // directed_graph_relation validates its inputs
  const std::vector<int> swap_perm = {2, 1}, ident = {1};
  CHECK_THROWS_AS(directed_graph_relation(pack.sig, "zzz", swap_perm, {}), Error);
  CHECK_THROWS_AS(directed_graph_relation(pack.sig, "sym", ident, {}), Error);
}

TEST_CASE("the degenerate example deviates but is invisible to gluing") {
  const ExamplePack pack = gallery_pack("degenerate_unipotent");
  REQUIRE(pack.rep.has_value());
  const Relation& dev = find_relation(pack, "deviation");
  CHECK(dev.expect == Expectation::nonzero);

  const Tensor hat = quantum_trace(*pack.rep, dev.web);
  Tensor expected(1, 1, 2);
  const std::vector<int> zero = {0}, one = {1};
  expected.at(zero, one) = make_rat(1);  // upper-right corner only
  CHECK(hat == expected);

  // closed words all trace to 2
  for (int len = 1; len <= 5; ++len) {
    const std::vector<int> word(static_cast<std::size_t>(len), 0);
    CHECK(naive_trace(*pack.rep, cycle_diagram(pack.sig, word)) == make_rat(2));
  }
}

TEST_CASE("the five-type template ships without relations") {
  const ExamplePack pack = gallery_pack("hopf_template");
  CHECK(pack.sig->count() == 5);
  CHECK(pack.relations.empty());
  CHECK_FALSE(pack.rep.has_value());
  const auto checks = check_pack(pack);
  CHECK(checks.empty());
}

TEST_CASE("packs survive a serialize/parse round trip") {
  for (const auto& name : gallery_names()) {
    const ExamplePack pack = gallery_pack(name);
    const std::string text = serialize_pack(pack);
    const ExamplePack back = parse_pack(text);
    CHECK(back.name == pack.name);
    CHECK(serialize_pack(back) == text);
    CHECK(same_signature(back.sig, pack.sig));
    REQUIRE(back.relations.size() == pack.relations.size());
    for (std::size_t i = 0; i < pack.relations.size(); ++i) {
      CHECK(back.relations[i].name == pack.relations[i].name);
      CHECK(back.relations[i].expect == pack.relations[i].expect);
      CHECK(back.relations[i].web == pack.relations[i].web);
    }
    CHECK(back.rep.has_value() == pack.rep.has_value());
    if (pack.rep) CHECK(*back.rep == *pack.rep);
  }
}
