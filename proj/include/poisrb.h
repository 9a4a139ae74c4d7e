/*
 * C API for the free Poisson Rota-Baxter / Nijenhuis algebra engine.
 *
 * All functions return a prb_status; results are written through out
 * parameters. Handles are opaque and must be released with the matching
 * free function. Strings returned through char** are heap-allocated and
 * must be released with prb_string_free. Error details for the last failed
 * call on an engine are available via prb_engine_last_error.
 */
#ifndef POISRB_H
#define POISRB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct prb_engine prb_engine;
typedef struct prb_comb prb_comb;

typedef enum prb_status {
  PRB_OK = 0,
  PRB_EPARSE = 1,    /* malformed expression or rational */
  PRB_EDOMAIN = 2,   /* precondition violated */
  PRB_EFUEL = 3,     /* rewriting fuel exhausted */
  PRB_ERESOURCE = 4, /* enumeration or span bounds too large */
  PRB_EUSAGE = 5,    /* invalid arguments to the call itself */
  PRB_EINTERNAL = 6
} prb_status;

/*
 * mode: "rb" (Rota-Baxter, weight = rational string, NULL means 0) or
 * "ns" (Nijenhuis; weight must be NULL). generators: comma-separated
 * symbols ranked left to right, e.g. "x,y,z". Returns NULL only on
 * allocation failure; construction errors are reported by prb_engine_ok.
 */
prb_engine* prb_engine_new(const char* mode, const char* weight,
                           const char* generators);
void prb_engine_free(prb_engine* e);
/* PRB_OK when the engine constructed cleanly. */
prb_status prb_engine_ok(const prb_engine* e);
const char* prb_engine_last_error(const prb_engine* e);
void prb_engine_set_fuel(prb_engine* e, uint64_t cap);

/* strategy: 0 = left-first (default), 1 = right-first evaluation order. */
prb_status prb_eval(prb_engine* e, const char* expr, int strategy,
                    prb_comb** out);
void prb_comb_free(prb_comb* c);
/* canonical text / JSON of a combination */
prb_status prb_comb_text(const prb_engine* e, const prb_comb* c, char** out);
prb_status prb_comb_json(const prb_engine* e, const prb_comb* c, char** out);
int prb_comb_equal(const prb_comb* a, const prb_comb* b);
int64_t prb_comb_term_count(const prb_comb* c);

/*
 * Expressibility of a single operator-letter word. The expression must
 * normalize to one word of the form R(...). JSON out:
 *   {"expressible": bool, "k": int, "a": text, "b": text,
 *    "residual": text}
 */
prb_status prb_expressible(prb_engine* e, const char* word_expr, char** out);

/*
 * Basis enumeration up to the degree bounds. JSON out:
 *   {"count": n, "words": [text...]}  (words omitted when count_only != 0)
 */
prb_status prb_enumerate(prb_engine* e, int max_xdeg, int max_rdeg,
                         int multilinear, int count_only, char** out);

/* Rank of the span of multilinear compositions of R(a)b and [R(a),b]. */
prb_status prb_span_dim(prb_engine* e, int ngens, int rdeg_cap, int* out);

/* Construction stratum of a single basis word. */
prb_status prb_stratum(prb_engine* e, const char* word_expr, int* out);

/*
 * Named invariant suite: rbcom | poisrb | nspois | models | confluence.
 * model_json may be NULL (used by the models suite). out_pass is 1 when
 * every case passed. The report is JSON.
 */
prb_status prb_check(const char* suite, uint64_t seed, int xdeg, int rdeg,
                     int count, const char* model_json, char** out_report,
                     int* out_pass);

/* Validate a structure-constant model (JSON text) and its optional tensor. */
prb_status prb_model_check(const char* model_json, char** out_report,
                           int* out_pass);

const char* prb_version(void);
void prb_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* POISRB_H */
