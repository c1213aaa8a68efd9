#include "webtrace.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "webtrace/certify.hpp"
#include "webtrace/errors.hpp"
#include "webtrace/gallery.hpp"
#include "webtrace/io.hpp"
#include "webtrace/planner.hpp"
#include "webtrace/quantum.hpp"
#include "webtrace/trace.hpp"

struct wt_signature {
  webtrace::SignaturePtr sig;
};
struct wt_web {
  webtrace::Web web;
};
struct wt_qweb {
  webtrace::QuantumWeb q;
};
struct wt_tensor {
  webtrace::Tensor t;
};
struct wt_representation {
  webtrace::Representation r;
};
struct wt_pack {
  webtrace::ExamplePack p;
};

namespace {

thread_local std::string g_last_error;

wt_status map_code(webtrace::ErrorCode code) {
  using webtrace::ErrorCode;
  switch (code) {
    case ErrorCode::parse:
      return WT_ERR_PARSE;
    case ErrorCode::invalid_argument:
      return WT_ERR_INVALID_ARGUMENT;
    case ErrorCode::profile_mismatch:
      return WT_ERR_PROFILE_MISMATCH;
    case ErrorCode::shape_mismatch:
      return WT_ERR_SHAPE_MISMATCH;
    case ErrorCode::budget_exceeded:
      return WT_ERR_BUDGET_EXCEEDED;
    case ErrorCode::cap_exceeded:
      return WT_ERR_CAP_EXCEEDED;
    case ErrorCode::singular_matrix:
      return WT_ERR_SINGULAR_MATRIX;
    case ErrorCode::missing_type:
      return WT_ERR_MISSING_TYPE;
    case ErrorCode::io:
      return WT_ERR_IO;
  }
  return WT_ERR_UNKNOWN;
}

template <typename F>
wt_status guarded(F&& f) {
  try {
    f();
    return WT_OK;
  } catch (const webtrace::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WT_ERR_UNKNOWN;
  } catch (...) {
    g_last_error = "unknown failure";
    return WT_ERR_UNKNOWN;
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

wt_status null_argument() {
  g_last_error = "null argument";
  return WT_ERR_INVALID_ARGUMENT;
}

webtrace::TraceOptions options(long long budget) {
  webtrace::TraceOptions opts;
  if (budget > 0) opts.budget = budget;
  return opts;
}

webtrace::EnumerationBounds bounds(int max_vertices, int max_loops) {
  webtrace::EnumerationBounds b;
  if (max_vertices >= 0) b.max_vertices = max_vertices;
  if (max_loops >= 0) b.max_loops = max_loops;
  return b;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string expectation_text(webtrace::Expectation e) {
  switch (e) {
    case webtrace::Expectation::zero:
      return "zero";
    case webtrace::Expectation::nonzero:
      return "nonzero";
    default:
      return "unchecked";
  }
}

}  // namespace

extern "C" {

const char* wt_last_error(void) { return g_last_error.c_str(); }

void wt_string_free(char* s) { std::free(s); }

/* --- signatures --------------------------------------------------------- */

wt_status wt_signature_parse(const char* text, wt_signature** out) {
  if (!text || !out) return null_argument();
  return guarded([&] { *out = new wt_signature{webtrace::parse_signature(text)}; });
}

wt_status wt_signature_serialize(const wt_signature* sig, char** out) {
  if (!sig || !out) return null_argument();
  return guarded([&] { *out = dup_string(webtrace::serialize_signature(*sig->sig)); });
}

wt_status wt_signature_type_count(const wt_signature* sig, int* out) {
  if (!sig || !out) return null_argument();
  *out = sig->sig->count();
  return WT_OK;
}

void wt_signature_free(wt_signature* sig) { delete sig; }

/* --- webs ---------------------------------------------------------------- */

wt_status wt_web_parse(const wt_signature* sig, const char* text, int strict, wt_web** out) {
  if (!sig || !text || !out) return null_argument();
  return guarded(
      [&] { *out = new wt_web{webtrace::parse_web(text, sig->sig, strict != 0)}; });
}

wt_status wt_web_serialize(const wt_web* w, char** out) {
  if (!w || !out) return null_argument();
  return guarded([&] { *out = dup_string(webtrace::serialize_web(w->web)); });
}

wt_status wt_web_validate(const wt_web* w, char** report, int* valid) {
  if (!w || !report || !valid) return null_argument();
  return guarded([&] {
    const std::vector<std::string> problems = webtrace::validate(w->web);
    std::string text;
    for (const std::string& p : problems) {
      text += p;
      text += '\n';
    }
    *report = dup_string(text);
    *valid = problems.empty() ? 1 : 0;
  });
}

wt_status wt_web_info(const wt_web* w, int* roots, int* sinks, long* loops, int* vertex_count) {
  if (!w) return null_argument();
  if (roots) *roots = w->web.roots();
  if (sinks) *sinks = w->web.sinks();
  if (loops) *loops = w->web.loops();
  if (vertex_count) *vertex_count = static_cast<int>(w->web.vertices().size());
  return WT_OK;
}

wt_status wt_web_canonical_key(const wt_web* w, char** out) {
  if (!w || !out) return null_argument();
  return guarded([&] { *out = dup_string(webtrace::canonical_key(w->web)); });
}

wt_status wt_web_glue(const wt_web* a, const wt_web* b, wt_web** out) {
  if (!a || !b || !out) return null_argument();
  return guarded([&] { *out = new wt_web{webtrace::glue(a->web, b->web)}; });
}

wt_status wt_web_union(const wt_web* a, const wt_web* b, wt_web** out) {
  if (!a || !b || !out) return null_argument();
  return guarded([&] { *out = new wt_web{webtrace::disjoint_union(a->web, b->web)}; });
}

void wt_web_free(wt_web* w) { delete w; }

/* --- quantum webs -------------------------------------------------------- */

wt_status wt_qweb_parse(const wt_signature* sig, const char* text, wt_qweb** out) {
  if (!sig || !text || !out) return null_argument();
  return guarded([&] { *out = new wt_qweb{webtrace::parse_quantum_web(text, sig->sig)}; });
}

wt_status wt_qweb_serialize(const wt_qweb* q, char** out) {
  if (!q || !out) return null_argument();
  return guarded([&] { *out = dup_string(webtrace::serialize_quantum_web(q->q)); });
}

wt_status wt_qweb_delta(const wt_signature* sig, int k, wt_qweb** out) {
  if (!sig || !out) return null_argument();
  return guarded([&] { *out = new wt_qweb{webtrace::delta(sig->sig, k)}; });
}

wt_status wt_qweb_term_count(const wt_qweb* q, size_t* out) {
  if (!q || !out) return null_argument();
  *out = q->q.term_count();
  return WT_OK;
}

wt_status wt_qweb_product(const wt_qweb* a, const wt_qweb* b, wt_qweb** out) {
  if (!a || !b || !out) return null_argument();
  return guarded([&] { *out = new wt_qweb{webtrace::qw_product(a->q, b->q)}; });
}

void wt_qweb_free(wt_qweb* q) { delete q; }

/* --- tensors --------------------------------------------------------------- */

wt_status wt_tensor_serialize(const wt_tensor* t, char** out) {
  if (!t || !out) return null_argument();
  return guarded([&] { *out = dup_string(webtrace::serialize_tensor(t->t)); });
}

wt_status wt_tensor_is_zero(const wt_tensor* t, int* out) {
  if (!t || !out) return null_argument();
  *out = t->t.is_zero() ? 1 : 0;
  return WT_OK;
}

wt_status wt_tensor_pairing(const wt_tensor* a, const wt_tensor* b, char** value) {
  if (!a || !b || !value) return null_argument();
  return guarded(
      [&] { *value = dup_string(webtrace::format_rational(webtrace::pairing(a->t, b->t))); });
}

void wt_tensor_free(wt_tensor* t) { delete t; }

/* --- representations -------------------------------------------------------- */

wt_status wt_representation_parse(const char* text, wt_representation** out) {
  if (!text || !out) return null_argument();
  return guarded(
      [&] { *out = new wt_representation{webtrace::parse_representation(text)}; });
}

wt_status wt_representation_serialize(const wt_representation* r, char** out) {
  if (!r || !out) return null_argument();
  return guarded([&] { *out = dup_string(webtrace::serialize_representation(r->r)); });
}

wt_status wt_representation_dim(const wt_representation* r, int* out) {
  if (!r || !out) return null_argument();
  *out = r->r.dim();
  return WT_OK;
}

wt_status wt_representation_signature(const wt_representation* r, wt_signature** out) {
  if (!r || !out) return null_argument();
  return guarded([&] { *out = new wt_signature{r->r.signature()}; });
}

void wt_representation_free(wt_representation* r) { delete r; }

/* --- evaluation -------------------------------------------------------------- */

wt_status wt_trace(const wt_representation* r, const wt_web* w, long long budget, char** value) {
  if (!r || !w || !value) return null_argument();
  return guarded([&] {
    *value = dup_string(
        webtrace::format_rational(webtrace::planned_trace(r->r, w->web, options(budget))));
  });
}

wt_status wt_extended_trace(const wt_representation* r, const wt_web* w, long long budget,
                            wt_tensor** out) {
  if (!r || !w || !out) return null_argument();
  return guarded(
      [&] { *out = new wt_tensor{webtrace::extended_trace(r->r, w->web, options(budget))}; });
}

wt_status wt_qweb_trace(const wt_representation* r, const wt_qweb* q, long long budget,
                        wt_tensor** out) {
  if (!r || !q || !out) return null_argument();
  return guarded(
      [&] { *out = new wt_tensor{webtrace::quantum_trace(r->r, q->q, options(budget))}; });
}

/* --- certification ------------------------------------------------------------ */

wt_status wt_check_delta(const wt_representation* r, long long budget, char** report,
                         int* hat_zero) {
  if (!r || !report || !hat_zero) return null_argument();
  return guarded([&] {
    const webtrace::DeltaReport rep = webtrace::check_delta_annihilation(r->r, options(budget));
    *report = dup_string("dim=" + std::to_string(rep.dim) +
                         " strands=" + std::to_string(rep.dim + 1) +
                         " annihilated=" + yes_no(rep.hat_zero) + "\n");
    *hat_zero = rep.hat_zero ? 1 : 0;
  });
}

wt_status wt_connmat(const wt_representation* r, int k, int max_vertices, int max_loops,
                     long long budget, char** report, long* rank, size_t* web_count) {
  if (!r || !report) return null_argument();
  return guarded([&] {
    const std::vector<webtrace::Web> webs =
        webtrace::enumerate_webs(r->r.signature(), k, k, bounds(max_vertices, max_loops));
    const webtrace::ConnectionMatrix m =
        webtrace::connection_matrix(r->r, k, webs, options(budget));
    const long rk = webtrace::exact_rank(m.entries);
    std::string text = "k=" + std::to_string(k) + " webs=" + std::to_string(webs.size()) +
                       " rank=" + std::to_string(rk) + "\n";
    for (std::size_t i = 0; i < webs.size(); ++i) {
      text += "# web " + std::to_string(i + 1) + "\n";
      text += webtrace::serialize_web(webs[i]);
    }
    text += "matrix\n";
    for (const auto& row : m.entries) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        text += webtrace::format_rational(row[j]);
        text += j + 1 == row.size() ? '\n' : ' ';
      }
    }
    if (webs.empty()) text += "(empty)\n";
    *report = dup_string(text);
    if (rank) *rank = rk;
    if (web_count) *web_count = webs.size();
  });
}

wt_status wt_rank_check(const wt_representation* r, int k_max, int max_vertices, int max_loops,
                        long long budget, char** report, int* all_pass) {
  if (!r || !report || !all_pass) return null_argument();
  return guarded([&] {
    const std::vector<webtrace::RankReport> reports = webtrace::rank_growth_check(
        r->r, k_max, bounds(max_vertices, max_loops), options(budget));
    std::string text;
    bool ok = true;
    for (const webtrace::RankReport& rep : reports) {
      text += "k=" + std::to_string(rep.k) + " webs=" + std::to_string(rep.web_count) +
              " rank=" + std::to_string(rep.rank) + " bound=" + rep.bound.get_str() +
              " pass=" + yes_no(rep.pass) + "\n";
      ok = ok && rep.pass;
    }
    *report = dup_string(text);
    *all_pass = ok ? 1 : 0;
  });
}

wt_status wt_witness_search(const wt_representation* r, const wt_qweb* omega, int max_vertices,
                            int max_loops, long long budget, char** witness,
                            size_t* candidates) {
  if (!r || !omega || !witness) return null_argument();
  return guarded([&] {
    const webtrace::WitnessReport rep = webtrace::annihilation_witness_search(
        r->r, omega->q, bounds(max_vertices, max_loops), options(budget));
    *witness = rep.witness ? dup_string(webtrace::serialize_web(*rep.witness)) : nullptr;
    if (candidates) *candidates = rep.candidates;
  });
}

wt_status wt_character_identity(const wt_representation* r, const char* a, const char* b,
                                const char* c, long long budget, int* holds) {
  if (!r || !a || !b || !c || !holds) return null_argument();
  return guarded([&] {
    *holds = webtrace::character_identity_check(r->r, a, b, c, options(budget)) ? 1 : 0;
  });
}

/* --- example packs ------------------------------------------------------------ */

wt_status wt_pack_parse(const char* text, wt_pack** out) {
  if (!text || !out) return null_argument();
  return guarded([&] { *out = new wt_pack{webtrace::parse_pack(text)}; });
}

wt_status wt_pack_serialize(const wt_pack* p, char** out) {
  if (!p || !out) return null_argument();
  return guarded([&] { *out = dup_string(webtrace::serialize_pack(p->p)); });
}

wt_status wt_pack_name(const wt_pack* p, char** out) {
  if (!p || !out) return null_argument();
  return guarded([&] { *out = dup_string(p->p.name); });
}

wt_status wt_pack_check(const wt_pack* p, long long budget, char** report, int* all_match) {
  if (!p || !report || !all_match) return null_argument();
  return guarded([&] {
    const std::vector<webtrace::RelationCheck> checks =
        webtrace::check_pack(p->p, options(budget));
    std::string text;
    bool ok = true;
    for (const webtrace::RelationCheck& c : checks) {
      if (!p->p.rep) {
        text += "relation " + c.name + ": skipped (no representation)\n";
        continue;
      }
      text += "relation " + c.name + ": expect=" + expectation_text(c.expect) +
              " got=" + (c.zero ? "zero" : "nonzero") + (c.match ? " match" : " MISMATCH") +
              "\n";
      ok = ok && c.match;
    }
    if (checks.empty()) text += "(no relations)\n";
    *report = dup_string(text);
    *all_match = ok ? 1 : 0;
  });
}

void wt_pack_free(wt_pack* p) { delete p; }

wt_status wt_gallery_names(char** out) {
  if (!out) return null_argument();
  return guarded([&] {
    std::string text;
    for (const std::string& name : webtrace::gallery_names()) {
      text += name;
      text += '\n';
    }
    *out = dup_string(text);
  });
}

wt_status wt_gallery_pack(const char* name, wt_pack** out) {
  if (!name || !out) return null_argument();
  return guarded([&] { *out = new wt_pack{webtrace::gallery_pack(name)}; });
}

}  // extern "C"
