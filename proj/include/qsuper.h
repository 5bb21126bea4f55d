/* qsuper — exact symbolic engine for uniparametric and multiparametric
 * quantum general linear supergroups.
 *
 * C embedding surface: an opaque engine handle configured with
 * (rank, parity, mode, multiparameter matrix), string-based element I/O,
 * and the verification suites.  All returned strings are heap-allocated;
 * release them with qsuper_string_free().
 */
#ifndef QSUPER_H
#define QSUPER_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qsuper_engine qsuper_engine;

/* status codes */
#define QSUPER_OK 0
#define QSUPER_ERR_INVALID 1  /* bad configuration or argument */
#define QSUPER_ERR_PARSE 2    /* element/word text failed to parse */
#define QSUPER_ERR_VERIFY 3   /* a verification suite reported failures */
#define QSUPER_ERR_INTERNAL 4

/* Creates an engine.
 *   n       : rank >= 2
 *   parity  : bitstring of length n, e.g. "01"
 *   mode    : "uni" | "multi"
 *   phi     : NULL or "symbolic" for symbolic Phi; otherwise a JSON n x n
 *             array of rationals-as-strings (antisymmetric, zero diagonal).
 *             Ignored in "uni" mode.
 */
int qsuper_engine_new(int n, const char* parity, const char* mode, const char* phi,
                      qsuper_engine** out);
void qsuper_engine_free(qsuper_engine* eng);

/* Message for the most recent failing call on this engine (empty if none).
 * Owned by the engine; valid until the next call on it. */
const char* qsuper_last_error(const qsuper_engine* eng);

const char* qsuper_version(void);
void qsuper_string_free(char* s);

/* Element grammar: whitespace-separated generator tokens
 *   x[i,j]  E[i]  F[i]  G[k]  T(c1,...,cn)
 * combined into +/- separated terms "coeff * word"; coefficients are exact
 * rational combinations of q-powers, e.g. "(1 - q^-2) * x[1,1] x[2,2]".
 * When as_json is nonzero, results carry the structured term list plus the
 * canonical text under "text". */

/* PBW monomials of the given total degree, as a JSON array of exponent maps. */
int qsuper_basis(qsuper_engine* eng, int degree, char** out_json);

/* PBW normal form of a function-side element. */
int qsuper_normal_form(qsuper_engine* eng, const char* element, int as_json, char** out);

/* Product (normal-formed) of two function-side elements. */
int qsuper_multiply(qsuper_engine* eng, const char* a, const char* b, int as_json,
                    char** out);

/* Coproduct of a function-side element, both legs normal-formed. */
int qsuper_coproduct(qsuper_engine* eng, const char* element, int as_json, char** out);

/* Hopf pairing <f, u> of a function-side element with an enveloping-side
 * element (twisted coproduct when the engine is multiparametric). */
int qsuper_pair(qsuper_engine* eng, const char* f, const char* u, int as_json,
                char** out);

/* Semiclassical Poisson bracket of two function-side elements. */
int qsuper_poisson(qsuper_engine* eng, const char* a, const char* b, int as_json,
                   char** out);

/* 2-cocycle-deformed product evaluated in the uniparametric PBW basis. */
int qsuper_deformed_multiply(qsuper_engine* eng, const char* a, const char* b,
                             int as_json, char** out);

/* Standard matrix representation of an enveloping-side element, as a
 * row-major JSON array of coefficient strings. */
int qsuper_matrix_rep(qsuper_engine* eng, const char* u, char** out_json);

/* Verification suites.  suite is one of
 *   "r-orth" | "j-orth" | "j-coideal" | "skew" | "mp-relations" | "cocycle" |
 *   "rep-kills-ideal" | "pairing-rank" | "all"
 * depth/degree <= 0 pick the suite defaults.  Returns QSUPER_OK when every
 * case passes, QSUPER_ERR_VERIFY otherwise; *out_json carries the report
 * either way. */
int qsuper_verify(qsuper_engine* eng, const char* suite, int depth, int degree,
                  char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QSUPER_H */
