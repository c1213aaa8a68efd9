#include "webtrace/quantum.hpp"

#include <algorithm>

#include "webtrace/errors.hpp"

namespace webtrace {

namespace {

int permutation_sign(std::span<const int> perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

QuantumWeb::QuantumWeb(SignaturePtr sig) : sig_(std::move(sig)) {
  if (!sig_) throw Error(ErrorCode::invalid_argument, "quantum web without signature");
}

QuantumWeb QuantumWeb::from_web(const Web& w) {
  QuantumWeb q(w.signature());
  q.add(make_rat(1), w);
  return q;
}

std::vector<QTerm> QuantumWeb::terms() const {
  std::vector<QTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, term] : terms_) out.push_back(term);
  return out;
}

std::optional<std::pair<int, int>> QuantumWeb::profile() const {
  std::optional<std::pair<int, int>> p;
  for (const auto& [key, term] : terms_) {
    std::pair<int, int> here{term.web.roots(), term.web.sinks()};
    if (!p) {
      p = here;
    } else if (*p != here) {
      return std::nullopt;
    }
  }
  return p;
}

void QuantumWeb::add(const Rat& coeff, const Web& w) {
  if (!same_signature(sig_, w.signature())) {
    throw Error(ErrorCode::profile_mismatch, "term signature differs from quantum web signature");
  }
  if (coeff == 0) return;
  Key key{w.vertices().size(), w.loops(), canonical_key(w)};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), QTerm{coeff, w});
    return;
  }
  it->second.coeff += coeff;
  if (it->second.coeff == 0) terms_.erase(it);
}

void QuantumWeb::add_scaled(const Rat& coeff, const QuantumWeb& other) {
  if (!same_signature(sig_, other.sig_)) {
    throw Error(ErrorCode::profile_mismatch, "combining quantum webs over different signatures");
  }
  if (coeff == 0) return;
  for (const auto& [key, term] : other.terms_) add(coeff * term.coeff, term.web);
}

bool operator==(const QuantumWeb& a, const QuantumWeb& b) {
  if (!same_signature(a.sig_, b.sig_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.coeff != ib->second.coeff) return false;
  }
  return true;
}

QuantumWeb linear_combine(SignaturePtr sig, std::span<const std::pair<Rat, Web>> pairs) {
  QuantumWeb q(std::move(sig));
  for (const auto& [coeff, web] : pairs) q.add(coeff, web);
  return q;
}

QuantumWeb qw_product(const QuantumWeb& a, const QuantumWeb& b) {
  if (!same_signature(a.signature(), b.signature())) {
    throw Error(ErrorCode::profile_mismatch, "product of quantum webs over different signatures");
  }
  QuantumWeb out(a.signature());
  for (const QTerm& ta : a.terms()) {
    for (const QTerm& tb : b.terms()) {
      // Mismatched profiles multiply to zero; dual profiles glue.
      if (tb.web.roots() != ta.web.sinks() || tb.web.sinks() != ta.web.roots()) continue;
      out.add(ta.coeff * tb.coeff, glue(ta.web, tb.web));
    }
  }
  return out;
}

QuantumWeb delta(SignaturePtr sig, int k) {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "antisymmetrizer needs k >= 0");
  if (k > 8) {
    throw Error(ErrorCode::cap_exceeded,
                "materialized antisymmetrizer capped at k = 8 (" + std::to_string(k) +
                    " requested); use the term stream");
  }
  QuantumWeb q(sig);
  DeltaStream stream(std::move(sig), k);
  while (auto term = stream.next()) q.add(term->coeff, term->web);
  return q;
}

DeltaStream::DeltaStream(SignaturePtr sig, int k) : sig_(std::move(sig)) {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "antisymmetrizer needs k >= 0");
  perm_.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) perm_[static_cast<std::size_t>(i)] = i + 1;
}

std::optional<QTerm> DeltaStream::next() {
  if (done_) return std::nullopt;
  if (!first_) {
    if (!std::next_permutation(perm_.begin(), perm_.end())) {
      done_ = true;
      return std::nullopt;
    }
  }
  first_ = false;
  return QTerm{make_rat(permutation_sign(perm_)), permutation_web(sig_, perm_)};
}

}  // namespace webtrace
