#pragma once

#include <map>
#include <optional>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "webtrace/rational.hpp"
#include "webtrace/web.hpp"

namespace webtrace {

struct QTerm {
  Rat coeff;
  Web web;
};

// Formal rational-linear combination of webs over one signature. Terms are
// keyed by canonical_key, so isomorphic webs always merge and zero terms are
// dropped. Terms of different boundary profiles may coexist; the gluing
// product zeroes mismatched pairs. Term order is (vertex count, loops, key),
// making iteration and serialization deterministic.
class QuantumWeb {
 public:
  explicit QuantumWeb(SignaturePtr sig);

  // Single term with coefficient 1. The web must be valid.
  static QuantumWeb from_web(const Web& w);

  const SignaturePtr& signature() const { return sig_; }
  bool zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::vector<QTerm> terms() const;

  // The common (roots, sinks) profile, or nullopt when zero or mixed.
  std::optional<std::pair<int, int>> profile() const;

  // Adds coeff * w, merging with an isomorphic term if present.
  void add(const Rat& coeff, const Web& w);
  void add_scaled(const Rat& coeff, const QuantumWeb& other);

  friend bool operator==(const QuantumWeb& a, const QuantumWeb& b);

 private:
  using Key = std::tuple<std::size_t, long, std::string>;

  SignaturePtr sig_;
  std::map<Key, QTerm> terms_;
};

// Sum of coeff * web over the list; all webs must share the signature.
QuantumWeb linear_combine(SignaturePtr sig, std::span<const std::pair<Rat, Web>> pairs);

// Bilinear extension of glue: term pairs with dual profiles (k,l) vs (l,k)
// glue; all other pairs contribute zero.
QuantumWeb qw_product(const QuantumWeb& a, const QuantumWeb& b);

// The antisymmetrizer: the signed sum over all k! permutation webs on k
// strands. Materialized form capped at k = 8; use DeltaStream beyond.
QuantumWeb delta(SignaturePtr sig, int k);

// Streams the (sign, permutation web) terms of the antisymmetrizer in
// lexicographic order of the permutation's image sequence, without
// materializing k! terms.
class DeltaStream {
 public:
  DeltaStream(SignaturePtr sig, int k);

  std::optional<QTerm> next();

 private:
  SignaturePtr sig_;
  std::vector<int> perm_;
  bool first_ = true;
  bool done_ = false;
};

}  // namespace webtrace
