#include <functional>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "webtrace/errors.hpp"
#include "webtrace/gallery.hpp"
#include "webtrace/io.hpp"
#include "webtrace/quantum.hpp"
#include "webtrace/trace.hpp"

using namespace webtrace;

namespace {

SignaturePtr two_type_sig() { return TypeSignature::make({{"f", 2, 2}, {"g", 1, 1}}); }

// Adds a source and a sink type so open boundary profiles can balance.
SignaturePtr open_sig() {
  return TypeSignature::make({{"f", 2, 2}, {"g", 1, 1}, {"src", 0, 1}, {"snk", 1, 0}});
}

int parse_error_line(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("signature text round trip") {
  const std::string text = "type f in=2 out=2\ntype g in=1 out=1\n";
  const SignaturePtr sig = parse_signature(text);
  CHECK(sig->count() == 2);
  CHECK(serialize_signature(*sig) == text);

  // comments and blank lines are invisible
  const SignaturePtr sig2 = parse_signature("# heading\n\n" + text + "\n# tail\n");
  CHECK(same_signature(sig, sig2));
}

TEST_CASE("signature parse errors carry positions") {
  CHECK_THROWS_AS(parse_signature(""), ParseError);
  CHECK_THROWS_AS(parse_signature("type f in=2\n"), ParseError);
  CHECK_THROWS_AS(parse_signature("type f in=2 out=-1\n"), ParseError);
  CHECK_THROWS_AS(parse_signature("type f in=a out=1\n"), ParseError);
  CHECK_THROWS_AS(parse_signature("typo f in=1 out=1\n"), ParseError);
  CHECK_THROWS_AS(parse_signature("type f in=1 out=1\ntype f in=1 out=1\n"), ParseError);
  CHECK(parse_error_line([] {
          parse_signature("type f in=1 out=1\ntype g in=1 out=\n");
        }) == 2);
}

TEST_CASE("a header-only web document is the vertexless loop") {
  auto sig = two_type_sig();
  const Web w = parse_web("web k=0 l=0 loops=1\n", sig);
  CHECK(w.vertices().empty());
  CHECK(w.edges().empty());
  CHECK(w.loops() == 1);
  CHECK(serialize_web(w) == "web k=0 l=0 loops=1\n");
}

TEST_CASE("web text round trip with vertices") {
  auto sig = two_type_sig();
  const std::string text =
      "web k=1 l=1 loops=0\n"
      "vertex v1 : g\n"
      "edge root 1 -> (v1, in 1)\n"
      "edge (v1, out 1) -> sink 1\n";
  const Web w = parse_web(text, sig);
  CHECK(w.vertices().size() == 1);
  CHECK(serialize_web(w) == text);

  // whitespace, comments, and names are immaterial
  const Web w2 = parse_web(
      "# a remark\nweb   k=1   l=1 loops=0\n\nvertex zz : g\n"
      "edge ( zz , out 1 ) -> sink 1\nedge root 1 -> ( zz , in 1 )\n",
      sig);
  CHECK(serialize_web(w2) == text);
  CHECK(canonical_key(w) == canonical_key(w2));
}

TEST_CASE("isomorphic webs serialize to identical bytes") {
  auto sig = open_sig();
  testutil::Rng rng(61);
  for (int i = 0; i < 30; ++i) {
    const Web w = testutil::random_web(rng, sig, testutil::uniform(rng, 0, 2),
                                       testutil::uniform(rng, 0, 2), 3);
    // reparse of the serialization is isomorphic, and fixed-point
    const std::string text = serialize_web(w);
    const Web back = parse_web(text, sig);
    CHECK(canonical_key(back) == canonical_key(w));
    CHECK(serialize_web(back) == text);
  }
}

TEST_CASE("web parse errors") {
  auto sig = two_type_sig();
  // unknown type
  CHECK_THROWS_AS(parse_web("web k=0 l=0 loops=0\nvertex a : h\n", sig), ParseError);
  // duplicate vertex id
  CHECK_THROWS_AS(
      parse_web("web k=0 l=0 loops=0\nvertex a : g\nvertex a : g\n", sig, false),
      ParseError);
  // unknown vertex in an edge
  CHECK_THROWS_AS(parse_web("web k=0 l=0 loops=0\nedge (a, out 1) -> (a, in 1)\n", sig),
                  ParseError);
  // slot out of range names the vertex
  try {
    parse_web("web k=0 l=0 loops=0\nvertex a : g\nedge (a, out 2) -> (a, in 1)\n", sig);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("'a'") != std::string::npos);
  }
  // boundary label out of range
  CHECK_THROWS_AS(parse_web("web k=1 l=1 loops=0\nedge root 2 -> sink 1\n", sig), ParseError);
  // tails do not sit on in-slots
  CHECK_THROWS_AS(
      parse_web("web k=0 l=0 loops=0\nvertex a : g\nedge (a, in 1) -> (a, out 1)\n", sig),
      ParseError);
  // vertex lines after an edge line
  CHECK_THROWS_AS(
      parse_web("web k=0 l=0 loops=1\nedge root 1 -> sink 1\nvertex a : g\n", sig, false),
      ParseError);
  // missing header
  CHECK_THROWS_AS(parse_web("vertex a : g\n", sig), ParseError);
}

TEST_CASE("strict parsing demands validity, lenient does not") {
  auto sig = two_type_sig();
  const std::string text = "web k=0 l=0 loops=0\nvertex a : g\n";  // slots unused
  CHECK_THROWS_AS(parse_web(text, sig), ParseError);
  const Web w = parse_web(text, sig, false);
  CHECK_FALSE(validate(w).empty());

  // the error message counts the remaining problems
  try {
    parse_web(text, sig);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("invalid web") != std::string::npos);
  }
}

TEST_CASE("the two-strand antisymmetrizer serializes to two signed terms") {
  auto sig = two_type_sig();
  const QuantumWeb d2 = delta(sig, 2);
  const std::string expected =
      "term 1\n"
      "web k=2 l=2 loops=0\n"
      "edge root 1 -> sink 1\n"
      "edge root 2 -> sink 2\n"
      "term -1\n"
      "web k=2 l=2 loops=0\n"
      "edge root 1 -> sink 2\n"
      "edge root 2 -> sink 1\n";
  CHECK(serialize_quantum_web(d2) == expected);
  CHECK(parse_quantum_web(expected, sig) == d2);
}

TEST_CASE("quantum web round trip and coefficient merging") {
  auto sig = two_type_sig();
  testutil::Rng rng(62);
  for (int i = 0; i < 20; ++i) {
    QuantumWeb q(sig);
    const int terms = testutil::uniform(rng, 0, 4);
    for (int t = 0; t < terms; ++t) {
      q.add(testutil::random_rational(rng), testutil::random_web(rng, sig, 1, 1, 2));
    }
    const std::string text = serialize_quantum_web(q);
    const QuantumWeb back = parse_quantum_web(text, sig);
    CHECK(back == q);
    CHECK(serialize_quantum_web(back) == text);
  }

  // the minus sign from the compatibility alphabet works in coefficients
  const QuantumWeb q =
      parse_quantum_web("term \xe2\x88\x92" "3/6\nweb k=0 l=0 loops=1\n", sig);
  REQUIRE(q.term_count() == 1);
  CHECK(q.terms().front().coeff == make_rat(-1, 2));

  // same web twice merges
  const QuantumWeb merged = parse_quantum_web(
      "term 1\nweb k=0 l=0 loops=1\nterm 2\nweb k=0 l=0 loops=1\n", sig);
  CHECK(merged.term_count() == 1);
  CHECK(merged.terms().front().coeff == make_rat(3));

  CHECK_THROWS_AS(parse_quantum_web("web k=0 l=0 loops=1\n", sig), ParseError);
  CHECK_THROWS_AS(parse_quantum_web("term x\nweb k=0 l=0 loops=1\n", sig), ParseError);
  // a term whose web is invalid is rejected even in lenient mode
  CHECK_THROWS_AS(
      parse_quantum_web("term 1\nweb k=0 l=0 loops=0\nvertex a : g\n", sig, false),
      ParseError);
}

TEST_CASE("tensor text round trip") {
  const std::string text = "tensor dim=2 in=1 out=1\n1 0\n0 1\n";
  const Tensor t = parse_tensor(text);
  CHECK(t == Tensor::identity(2));
  CHECK(serialize_tensor(t) == text);

  // scalars occupy a single line
  const Tensor s = Tensor::scalar(make_rat(-7, 2));
  CHECK(serialize_tensor(s) == "tensor dim=0 in=0 out=0\n-7/2\n");
  CHECK(parse_tensor(serialize_tensor(s)) == s);

  // U+2212 in entries
  const Tensor neg = parse_tensor("tensor dim=1 in=0 out=1\n\xe2\x88\x92" "3/6\n");
  CHECK(neg.entries().front() == make_rat(-1, 2));

  testutil::Rng rng(63);
  for (int i = 0; i < 20; ++i) {
    const Tensor r = testutil::random_tensor(rng, testutil::uniform(rng, 0, 2),
                                             testutil::uniform(rng, 0, 2),
                                             testutil::uniform(rng, 1, 3));
    CHECK(parse_tensor(serialize_tensor(r)) == r);
  }
}

TEST_CASE("tensor entry counting") {
  CHECK_THROWS_AS(parse_tensor("tensor dim=2 in=1 out=1\n1 0\n0\n"), ParseError);
  CHECK_THROWS_AS(parse_tensor("tensor dim=2 in=1 out=1\n1 0\n0 1\n7\n"), ParseError);
  CHECK_THROWS_AS(parse_tensor("tensor dim=2 in=1 out=1\n"), ParseError);
  try {
    parse_tensor("tensor dim=2 in=1 out=1\n1 0\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("expected 4 entries") != std::string::npos);
  }
}

TEST_CASE("representation text round trip") {
  auto sig = two_type_sig();
  testutil::Rng rng(64);
  const Representation r = testutil::random_representation(rng, sig, 2);
  const std::string text = serialize_representation(r);
  const Representation back = parse_representation(text);
  CHECK(back == r);
  CHECK(same_signature(back.signature(), sig));
  CHECK(serialize_representation(back) == text);

  CHECK_THROWS_AS(parse_representation("dim 2\n"), ParseError);             // no tensors
  CHECK_THROWS_AS(parse_representation("tensor f dim=2 in=1 out=1\n1 0\n0 1\n"),
                  ParseError);  // missing dim line
  // dimension mismatch between header and block
  CHECK_THROWS_AS(parse_representation("dim 3\ntensor f dim=2 in=1 out=1\n1 0\n0 1\n"),
                  ParseError);
  // unnamed block
  CHECK_THROWS_AS(parse_representation("dim 2\ntensor dim=2 in=1 out=1\n1 0\n0 1\n"),
                  ParseError);
  // duplicate names
  CHECK_THROWS_AS(parse_representation("dim 1\ntensor f dim=1 in=0 out=0\n1\n"
                                       "tensor f dim=1 in=0 out=0\n1\n"),
                  ParseError);
}

TEST_CASE("pack parse errors") {
  const char* missing_close =
      "pack p\nsignature\ntype f in=1 out=1\nend signature\n";
  CHECK_THROWS_AS(parse_pack(missing_close), ParseError);
  try {
    parse_pack(missing_close);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("never closed") != std::string::npos);
  }

  // relations must follow the signature
  CHECK_THROWS_AS(parse_pack("pack p\nrelation r expect=zero\nend relation\n"
                             "signature\ntype f in=1 out=1\nend signature\nend pack\n"),
                  ParseError);
  // a second signature block is rejected
  CHECK_THROWS_AS(parse_pack("pack p\nsignature\ntype f in=1 out=1\nend signature\n"
                             "signature\ntype f in=1 out=1\nend signature\nend pack\n"),
                  ParseError);
  // representation signature must match the pack signature
  CHECK_THROWS_AS(parse_pack("pack p\nsignature\ntype f in=1 out=1\nend signature\n"
                             "representation\ndim 2\ntensor g dim=2 in=1 out=1\n1 0\n0 1\n"
                             "end representation\nend pack\n"),
                  ParseError);
  // missing signature entirely
  CHECK_THROWS_AS(parse_pack("pack p\nend pack\n"), ParseError);
  // trailing text after the closer
  CHECK_THROWS_AS(parse_pack("pack p\nsignature\ntype f in=1 out=1\nend signature\n"
                             "end pack\nleftover\n"),
                  ParseError);
  // bad expectation word
  CHECK_THROWS_AS(parse_pack("pack p\nsignature\ntype f in=1 out=1\nend signature\n"
                             "relation r expect=maybe\nend relation\nend pack\n"),
                  ParseError);
}

TEST_CASE("a hand-written pack parses") {
  const std::string text =
      "pack demo\n"
      "note one closed loop with weight one half\n"
      "signature\n"
      "type f in=1 out=1\n"
      "end signature\n"
      "relation sample expect=unchecked\n"
      "term \xe2\x88\x92" "3/6\n"
      "web k=0 l=0 loops=1\n"
      "end relation\n"
      "end pack\n";
  const ExamplePack pack = parse_pack(text);
  CHECK(pack.name == "demo");
  REQUIRE(pack.notes.size() == 1);
  CHECK(pack.notes.front() == "one closed loop with weight one half");
  REQUIRE(pack.relations.size() == 1);
  CHECK(pack.relations.front().expect == Expectation::unchecked);
  CHECK(pack.relations.front().web.terms().front().coeff == make_rat(-1, 2));
  CHECK_FALSE(pack.rep.has_value());

  const ExamplePack back = parse_pack(serialize_pack(pack));
  CHECK(serialize_pack(back) == serialize_pack(pack));
}

TEST_CASE("random documents round trip") {
  auto sig = open_sig();
  testutil::Rng rng(65);
  for (int i = 0; i < 200; ++i) {
    const int kind = testutil::uniform(rng, 0, 3);
    if (kind == 0) {
      const Web w = testutil::random_web(rng, sig, testutil::uniform(rng, 0, 2),
                                         testutil::uniform(rng, 0, 2), 3);
      const std::string text = serialize_web(w);
      CHECK(serialize_web(parse_web(text, sig)) == text);
    } else if (kind == 1) {
      QuantumWeb q(sig);
      for (int t = testutil::uniform(rng, 0, 3); t > 0; --t) {
        q.add(testutil::random_rational(rng), testutil::random_web(rng, sig, 0, 1, 2));
      }
      const std::string text = serialize_quantum_web(q);
      CHECK(serialize_quantum_web(parse_quantum_web(text, sig)) == text);
    } else if (kind == 2) {
      const Tensor t = testutil::random_tensor(rng, testutil::uniform(rng, 0, 2),
                                               testutil::uniform(rng, 0, 2),
                                               testutil::uniform(rng, 0, 3));
      const std::string text = serialize_tensor(t);
      CHECK(serialize_tensor(parse_tensor(text)) == text);
    } else {
      const Representation r =
          testutil::random_representation(rng, sig, testutil::uniform(rng, 1, 3));
      const std::string text = serialize_representation(r);
      CHECK(serialize_representation(parse_representation(text)) == text);
    }
  }
}
