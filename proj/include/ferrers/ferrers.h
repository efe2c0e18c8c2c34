/*
 * ferrers: exact enumeration of Ferrers diagrams with gates and wickets.
 *
 * C API over the C++ core. All heap objects returned through out-parameters
 * are owned by the caller and released with the matching *_free function.
 * Functions return FRS_OK on success; on failure frs_last_error() carries a
 * human-readable message for the calling thread.
 */
#ifndef FERRERS_FERRERS_H
#define FERRERS_FERRERS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    FRS_OK = 0,
    FRS_ERR_USAGE = 1,        /* violated call contract (bad kind, flags, arity) */
    FRS_ERR_DOMAIN = 2,       /* input outside an operation's domain */
    FRS_ERR_INCONCLUSIVE = 3, /* verification order too small to decide */
    FRS_ERR_NOT_FOUND = 4,    /* no relation found by the guesser */
    FRS_ERR_MISMATCH = 5,     /* cross-check found a discrepancy */
    FRS_ERR_INTERNAL = 6      /* broken invariant; indicates a bug */
} frs_status;

const char* frs_status_name(frs_status s);
const char* frs_last_error(void);

/* Opaque truncated power series (catalytic polynomial coefficients). */
typedef struct frs_series frs_series;

/* kind: "ferrers" | "gated" | "wicketed". Produces F(x,t), phi123(x1,x2,x3,t)
 * or psi1(x,t) through t^order via the umbral evolution pipeline. */
frs_status frs_pipeline_series(const char* kind, int order, frs_series** out);

/* ((1 - sqrt(1-4t^2)) / (2 t^2)) * (t^2/(1-2t))^4 through t^order. */
frs_status frs_closed_form_psi(int order, frs_series** out);

int frs_series_order(const frs_series* s);
int frs_series_arity(const frs_series* s);

/* Evaluates the catalytic variables at integers; result has arity 0. */
frs_status frs_series_eval(const frs_series* s, const long* point,
                           size_t point_len, frs_series** out);

/* Coefficient of t^t_deg of an arity-0 series as "p" or "p/q". */
frs_status frs_series_coeff(const frs_series* s, int t_deg, char** out);

/* {"order":N,"vars":[...],"terms":[{"t":k,"monos":[{"e":[...],"c":"..."}]}]} */
frs_status frs_series_json(const frs_series* s, char** out);

void frs_series_free(frs_series* s);
void frs_string_free(char* s);

/* relation: "punceq" | "punceq123" | "fdfpeq" | "fdfpeq1" | "F-rational".
 * points: ";"-separated integer tuples, entries ","-separated; NULL or ""
 * selects built-in defaults. symbolic != 0 verifies the catalytic relations
 * without sampling (small orders only). Sets *pass; returns
 * FRS_ERR_INCONCLUSIVE when the order cannot decide. report_json may be NULL. */
frs_status frs_verify(const char* relation, int order, const char* points,
                      int symbolic, int* pass, char** report_json);

/* Fits A G^2 + B G + C = 0 to the specialized series of the given kind.
 * Negative degree bounds select the defaults (8, 8, 14) with one automatic
 * escalation. FRS_ERR_NOT_FOUND when no relation exists within bounds. */
frs_status frs_guess(const char* kind, int order, int deg_a, int deg_b,
                     int deg_c, char** text);

/* Brute-force geometric census. kind: "ferrers" | "gated" | "wicketed". */
frs_status frs_oracle_json(const char* kind, int max_hp, char** out);
frs_status frs_oracle_bfile(const char* kind, int max_hp, int offset,
                            char** out);

/* Nibbled staircase polygons: {"object":"nibbled","counts":[{"hp":h,
 * "alpha":a,"beta":b,"count":n},...]} */
frs_status frs_nibbled_json(int max_hp, char** out);

/* Equality of brute-force counts and umbral coefficients, including refined
 * spot checks. Sets *pass; the report names the first discrepancy if any. */
frs_status frs_crosscheck(int max_hp, int* pass, char** report);

/* ASCII rendering. rows_csv: base Ferrers row widths bottom to top, e.g.
 * "3,4,4,6,7,8". gate_spec (optional): "b1;b2,b3;b2,b3;..." adds a gate.
 * top_csv (optional, needs gate_spec): closing row width then further full
 * rows, making the shape wicketed. Cells are '#', hole cells '.'. */
frs_status frs_render(const char* rows_csv, const char* gate_spec,
                      const char* top_csv, char** out);

#ifdef __cplusplus
}
#endif

#endif /* FERRERS_FERRERS_H */
