/* webtrace — exact rational evaluation of typed diagram traces.
 *
 * C interface to the shared library. Every function returns a wt_status;
 * results come back through out parameters. On failure the out parameters
 * are left untouched and a human-readable message for the calling thread is
 * available from wt_last_error(). Returned strings are heap copies owned by
 * the caller; release them with wt_string_free. Handles are released with
 * their matching *_free function; freeing NULL is a no-op.
 */

#ifndef WEBTRACE_H
#define WEBTRACE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wt_status {
  WT_OK = 0,
  WT_ERR_PARSE = 1,
  WT_ERR_INVALID_ARGUMENT = 2,
  WT_ERR_PROFILE_MISMATCH = 3,
  WT_ERR_SHAPE_MISMATCH = 4,
  WT_ERR_BUDGET_EXCEEDED = 5,
  WT_ERR_CAP_EXCEEDED = 6,
  WT_ERR_SINGULAR_MATRIX = 7,
  WT_ERR_MISSING_TYPE = 8,
  WT_ERR_IO = 9,
  WT_ERR_UNKNOWN = 10
} wt_status;

typedef struct wt_signature wt_signature;
typedef struct wt_web wt_web;
typedef struct wt_qweb wt_qweb;
typedef struct wt_tensor wt_tensor;
typedef struct wt_representation wt_representation;
typedef struct wt_pack wt_pack;

/* Message describing this thread's most recent failure ("" if none yet). */
const char* wt_last_error(void);

void wt_string_free(char* s);

/* --- signatures --------------------------------------------------------- */

wt_status wt_signature_parse(const char* text, wt_signature** out);
wt_status wt_signature_serialize(const wt_signature* sig, char** out);
wt_status wt_signature_type_count(const wt_signature* sig, int* out);
void wt_signature_free(wt_signature* sig);

/* --- webs ---------------------------------------------------------------- */

/* strict != 0 demands a structurally valid web; strict == 0 only binds
 * names and shapes, so the result may fail wt_web_validate. */
wt_status wt_web_parse(const wt_signature* sig, const char* text, int strict, wt_web** out);
wt_status wt_web_serialize(const wt_web* w, char** out);
/* *valid = 1 and *report = "" for a well-formed web; otherwise *valid = 0
 * and *report lists one violation per line. */
wt_status wt_web_validate(const wt_web* w, char** report, int* valid);
wt_status wt_web_info(const wt_web* w, int* roots, int* sinks, long* loops, int* vertex_count);
wt_status wt_web_canonical_key(const wt_web* w, char** out);
wt_status wt_web_glue(const wt_web* a, const wt_web* b, wt_web** out);
wt_status wt_web_union(const wt_web* a, const wt_web* b, wt_web** out);
void wt_web_free(wt_web* w);

/* --- quantum webs (formal rational combinations of webs) ----------------- */

wt_status wt_qweb_parse(const wt_signature* sig, const char* text, wt_qweb** out);
wt_status wt_qweb_serialize(const wt_qweb* q, char** out);
/* Signed sum over all k! strand permutations. Materialized; k <= 8. */
wt_status wt_qweb_delta(const wt_signature* sig, int k, wt_qweb** out);
wt_status wt_qweb_term_count(const wt_qweb* q, size_t* out);
wt_status wt_qweb_product(const wt_qweb* a, const wt_qweb* b, wt_qweb** out);
void wt_qweb_free(wt_qweb* q);

/* --- tensors -------------------------------------------------------------- */

wt_status wt_tensor_serialize(const wt_tensor* t, char** out);
wt_status wt_tensor_is_zero(const wt_tensor* t, int* out);
/* Full contraction of dual shapes (k,l) vs (l,k); *value is a rational. */
wt_status wt_tensor_pairing(const wt_tensor* a, const wt_tensor* b, char** value);
void wt_tensor_free(wt_tensor* t);

/* --- representations ------------------------------------------------------ */

wt_status wt_representation_parse(const char* text, wt_representation** out);
wt_status wt_representation_serialize(const wt_representation* r, char** out);
wt_status wt_representation_dim(const wt_representation* r, int* out);
wt_status wt_representation_signature(const wt_representation* r, wt_signature** out);
void wt_representation_free(wt_representation* r);

/* --- evaluation ------------------------------------------------------------
 * budget bounds both the number of edge colorings summed and the entry count
 * of any intermediate tensor; pass budget <= 0 for the default (10^7). */

/* Closed-diagram trace (profile (0,0)); *value is a rational string. */
wt_status wt_trace(const wt_representation* r, const wt_web* w, long long budget, char** value);
/* Boundary tensor of a (k,l)-web: in-indices from roots, out-indices from
 * sinks, interior summed out. */
wt_status wt_extended_trace(const wt_representation* r, const wt_web* w, long long budget,
                            wt_tensor** out);
/* Linear extension over the terms of a quantum web (single profile). */
wt_status wt_qweb_trace(const wt_representation* r, const wt_qweb* q, long long budget,
                        wt_tensor** out);

/* --- certification ---------------------------------------------------------
 * max_vertices / max_loops bound web enumeration; pass a negative value for
 * the default (3 vertices, 1 loop). Reports are plain text for display. */

/* Evaluates the antisymmetrizer on dim+1 strands; *hat_zero = 1 when its
 * boundary tensor vanishes (it must, for every genuine dim-dimensional
 * tensor assignment). Requires dim + 1 <= 8. */
wt_status wt_check_delta(const wt_representation* r, long long budget, char** report,
                         int* hat_zero);

/* Matrix of closed traces glue(web_i, web_j) over all enumerated (k,k)-webs,
 * with its exact rank. */
wt_status wt_connmat(const wt_representation* r, int k, int max_vertices, int max_loops,
                     long long budget, char** report, long* rank, size_t* web_count);

/* For each k' <= k_max, compares the connection-matrix rank against
 * dim^(2k'); *all_pass = 1 when every rank respects the bound. */
wt_status wt_rank_check(const wt_representation* r, int k_max, int max_vertices, int max_loops,
                        long long budget, char** report, int* all_pass);

/* Looks for a web whose gluing against omega has nonzero trace. On return
 * *witness is the serialized web, or NULL when the bounded search exhausted;
 * *candidates counts the webs examined. */
wt_status wt_witness_search(const wt_representation* r, const wt_qweb* omega, int max_vertices,
                            int max_loops, long long budget, char** witness, size_t* candidates);

/* Two-dimensional trace identity over cycle diagrams through types a, b, c;
 * *holds = 1 when it checks out exactly. */
wt_status wt_character_identity(const wt_representation* r, const char* a, const char* b,
                                const char* c, long long budget, int* holds);

/* --- example packs ---------------------------------------------------------
 * A pack bundles a signature, named relation webs with expected outcomes,
 * and (usually) a representation to evaluate them under. */

wt_status wt_pack_parse(const char* text, wt_pack** out);
wt_status wt_pack_serialize(const wt_pack* p, char** out);
wt_status wt_pack_name(const wt_pack* p, char** out);
/* Re-evaluates every relation; *all_match = 1 when every outcome agrees
 * with its declared expectation. */
wt_status wt_pack_check(const wt_pack* p, long long budget, char** report, int* all_match);
void wt_pack_free(wt_pack* p);

/* Newline-separated list of the built-in example packs. */
wt_status wt_gallery_names(char** out);
wt_status wt_gallery_pack(const char* name, wt_pack** out);

#ifdef __cplusplus
}
#endif

#endif /* WEBTRACE_H */
