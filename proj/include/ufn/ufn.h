/* C interface to the Ufnarovskii graph library.
 *
 * All objects are opaque handles created and destroyed here. Functions that
 * produce output write a NUL-terminated, heap-allocated string to *out; the
 * caller releases it with ufn_string_free. On any failure the return status
 * is nonzero, *out is untouched, and ufn_last_error() describes the problem
 * (per thread, valid until the next failing call on that thread).
 */

#ifndef UFN_H
#define UFN_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ufn_status {
  UFN_OK = 0,
  UFN_VERIFY_FAILED = 1, /* a verification check reported a counterexample */
  UFN_INPUT_ERROR = 2,   /* bad JSON, bad schema, out-of-range argument */
  UFN_GUARD_ERROR = 3,   /* an enumeration or search exceeded its bound */
  UFN_INTERNAL_ERROR = 4
} ufn_status;

typedef struct ufn_presentation ufn_presentation;
typedef struct ufn_graph ufn_graph;

const char* ufn_last_error(void);
void ufn_string_free(char* s);

/* --- presentations ------------------------------------------------------ */

/* {"generators": ["x","y"], "relations": [["y","y","y"]]}; a relation may be
 * the compact string "yyy" when all generator names are single characters. */
ufn_status ufn_presentation_parse(const char* json_text,
                                  ufn_presentation** out);

/* {"vertices": [...], "arrows": [{"name","from","to"}...],
 *  "forbidden_paths": [["a","b"], ...]} -> the presentation whose legal
 * words are the surviving composable paths. */
ufn_status ufn_presentation_from_quiver(const char* json_text,
                                        ufn_presentation** out);

void ufn_presentation_free(ufn_presentation* p);

/* Enumerating length-r words is refused once |G|^r exceeds the guard. */
void ufn_presentation_set_guard(ufn_presentation* p, uint64_t max_candidates);

int ufn_presentation_ell(const ufn_presentation* p);

/* Generators, relations, and the ell / normalized-ell diagnostics.
 * format is "text" or "json". */
ufn_status ufn_presentation_info(const ufn_presentation* p, const char* format,
                                 char** out);

/* --- the graph and the homomorphism into its path algebra ---------------- */

ufn_status ufn_graph_build(const ufn_presentation* p, ufn_graph** out);
void ufn_graph_free(ufn_graph* g);

/* format: "text", "json" or "dot". arrows_by_label only affects DOT output:
 * nonzero captions each arrow by its letter instead of its full word. */
ufn_status ufn_graph_render(const ufn_graph* g, const char* format,
                            int arrows_by_label, char** out);

/* The generator images f(x), or, when word is non-NULL, the image of that
 * word (compact form or JSON array of generator names). */
ufn_status ufn_hom_render(const ufn_graph* g, const char* word,
                          const char* format, char** out);

/* Kernel generators S and the degreewise dimension table up to max_degree. */
ufn_status ufn_kernel_render(const ufn_graph* g, int max_degree,
                             const char* format, char** out);

/* Runs the verification battery up to max_degree. Returns UFN_OK with
 * *all_passed == 1, or UFN_VERIFY_FAILED with *all_passed == 0 (the report
 * is written either way). */
ufn_status ufn_verify_run(const ufn_graph* g, int max_degree,
                          const char* format, int* all_passed, char** out);

/* --- derived constructions ----------------------------------------------- */

/* The n-th Veronese: block presentation, its graph, and the degreewise
 * dimension agreement with the base up to max_degree. aliases, when non-NULL,
 * is a comma-separated list renaming the block generators. format: "text",
 * "json" or "dot" (dot emits just the graph). */
ufn_status ufn_veronese_render(const ufn_presentation* p, int n,
                               int max_degree, const char* aliases,
                               const char* format, char** out);

/* Quivers of L.R and R.L for a compatible matrix pair (JSON arrays of arrays
 * of nonnegative integers). reference_lr / reference_rl, when non-NULL, are
 * quiver JSON to compare against up to isomorphism, both as given and with
 * all arrows reversed. format: "text" or "json". */
ufn_status ufn_lrrl_render(const char* l_json, const char* r_json,
                           const char* reference_lr, const char* reference_rl,
                           int vertex_bound, const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* UFN_H */
