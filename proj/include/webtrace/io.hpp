#pragma once

#include <string>
#include <string_view>

#include "webtrace/gallery.hpp"
#include "webtrace/quantum.hpp"
#include "webtrace/representation.hpp"
#include "webtrace/signature.hpp"
#include "webtrace/tensor.hpp"
#include "webtrace/web.hpp"

namespace webtrace {

// Line-oriented text formats. Blank lines and lines starting with '#' are
// ignored everywhere. All parsers throw ParseError with a 1-based position.
//
//   signature       type <name> in=<i> out=<o>          (one line per type)
//   web             web k=<k> l=<l> loops=<c>
//                   vertex <id> : <type>
//                   edge <endpoint> -> <endpoint>
//                     endpoint: root <i> | sink <j> | (<id>, out <s>) | (<id>, in <s>)
//   quantum web     term <rational>  followed by a web block, repeated
//   tensor          tensor dim=<n> in=<k> out=<l>  then entries row-major
//   representation  dim <n>  then one block  tensor <name> dim= in= out= ...
//                   per type (the signature is read off the blocks)
//   pack            pack <name> / note ... / signature ... end signature /
//                   representation ... end representation (optional) /
//                   relation <name> expect=... ... end relation / end pack
//
// With strict = true (the default), webs must be structurally valid; the
// lenient mode binds names and shapes only, leaving validity to validate().
// Quantum-web terms are validated regardless: merging isomorphic terms needs
// canonical keys, which only valid webs have.

SignaturePtr parse_signature(std::string_view text);
std::string serialize_signature(const TypeSignature& sig);

Web parse_web(std::string_view text, const SignaturePtr& sig, bool strict = true);
// Deterministic: vertices in canonical order, edges in tail order.
std::string serialize_web(const Web& w);

QuantumWeb parse_quantum_web(std::string_view text, const SignaturePtr& sig, bool strict = true);
std::string serialize_quantum_web(const QuantumWeb& q);

Tensor parse_tensor(std::string_view text);
std::string serialize_tensor(const Tensor& t);

Representation parse_representation(std::string_view text);
std::string serialize_representation(const Representation& r);

ExamplePack parse_pack(std::string_view text);
std::string serialize_pack(const ExamplePack& pack);

}  // namespace webtrace
