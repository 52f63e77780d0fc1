#ifndef VFOCK_VFOCK_H
#define VFOCK_VFOCK_H

/*
 * C interface to the vfock library. All numbers cross the boundary as
 * strings ("p/q" rationals, "p/2" half-integers) so that nothing is rounded.
 *
 * Every function that can fail returns a vf_status; on failure a message for
 * the calling thread is available from vf_last_error() until the next call.
 * Strings returned through char** out-parameters are owned by the caller and
 * must be released with vf_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(VFOCK_BUILDING)
#    define VF_API __declspec(dllexport)
#  else
#    define VF_API __declspec(dllimport)
#  endif
#else
#  define VF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vf_status {
    VF_OK = 0,
    VF_ERR_PARSE = 1,      /* malformed rational, half-integer, index map or JSON */
    VF_ERR_DOMAIN = 2,     /* invalid value (negative degree, unknown kind, ...) */
    VF_ERR_TRUNCATION = 3, /* an operator was applied beyond its exact range */
    VF_ERR_FALSIFIED = 4,  /* an identity that must hold failed */
    VF_ERR_ARGUMENT = 5,   /* null handle or output pointer */
    VF_ERR_INTERNAL = 6
} vf_status;

typedef struct vf_params vf_params;
typedef struct vf_table vf_table;
typedef struct vf_vector vf_vector;
typedef struct vf_operator vf_operator;

VF_API const char* vf_version(void);
VF_API const char* vf_status_name(vf_status status);
VF_API const char* vf_last_error(void);
VF_API void vf_string_free(char* s);

/* Measure and conversion parameters. Scalars: "z", "w", "gamma" (rationals,
 * default 0) and "M" (positive integer, default 2). Series: "x" or "y" from
 * an index map such as "1=1,2=1/2". */
VF_API vf_status vf_params_create(vf_params** out);
VF_API void vf_params_free(vf_params* p);
VF_API vf_status vf_params_set(vf_params* p, const char* key, const char* value);
VF_API vf_status vf_params_set_series(vf_params* p, const char* name, const char* index_map);

/* Unnormalized weight tables for |lambda| <= max_degree. kind is "schur",
 * "virasoro" or "m-virasoro". With poly_z != 0 the ket-side parameter z is
 * kept as a formal variable and the given value of z is ignored. */
VF_API vf_status vf_table_create(const char* kind, const vf_params* p, int max_degree, int poly_z, vf_table** out);
VF_API void vf_table_free(vf_table* t);
VF_API size_t vf_table_size(const vf_table* t);
VF_API vf_status vf_table_json(const vf_table* t, char** out);
/* One JSON object per partition, then a summary object, one per line. */
VF_API vf_status vf_table_jsonl(const vf_table* t, char** out);
VF_API vf_status vf_table_csv(const vf_table* t, char** out);
VF_API vf_status vf_table_weight(const vf_table* t, const int* parts, size_t n, char** out);
/* Probability that every point of a JSON list of "p/2" strings is occupied.
 * Rational tables only. */
VF_API vf_status vf_correlation(const vf_table* t, const char* points_json, char** out);

/* Schur parameters X_N = A_N z + B_N (and Y_N from "y" with w) as JSON lines. */
VF_API vf_status vf_convert(const vf_params* p, int max_degree, int poly_z, char** out);

/* Fock vectors in charge sector `charge`, with rational coefficients. */
VF_API vf_status vf_vector_basis(const int* parts, size_t n, int charge, vf_vector** out);
VF_API void vf_vector_free(vf_vector* v);
/* acc += coeff * v */
VF_API vf_status vf_vector_axpy(vf_vector* acc, const char* coeff, const vf_vector* v);
VF_API vf_status vf_vector_json(const vf_vector* v, char** out);
VF_API int vf_vector_equal(const vf_vector* a, const vf_vector* b);

/* which: 'U', 'L' or 'D'. */
VF_API vf_status vf_operator_kerov(char which, const char* z, const char* w, vf_operator** out);
VF_API vf_status vf_operator_rimhook(int r, char which, const char* z, const char* w, vf_operator** out);
VF_API vf_status vf_operator_virasoro(int k, const char* alpha, const char* gamma, vf_operator** out);
VF_API vf_status vf_operator_m_virasoro(int M, int k, const char* alpha, const char* gamma, vf_operator** out);
VF_API vf_status vf_operator_boson(int k, vf_operator** out);
VF_API void vf_operator_free(vf_operator* op);
VF_API vf_status vf_operator_json(const vf_operator* op, char** out);
VF_API vf_status vf_apply(const vf_operator* op, const vf_vector* v, vf_vector** out);
/* [a, b] v */
VF_API vf_status vf_commutator(const vf_operator* a, const vf_operator* b, const vf_vector* v, vf_vector** out);

/* Verification suites. max_degree < 0 selects the suite default. The report
 * is JSON lines with the summary last; *falsified receives the number of
 * failed checks (probes never count). */
VF_API size_t vf_suite_count(void);
VF_API const char* vf_suite_name(size_t i);
VF_API vf_status vf_verify(const char* suite, uint64_t seed, int max_degree, char** out, int* falsified);

/* Representation structure of the Kerov triple; *ok is 0 if some relation or
 * per-degree check fails. */
VF_API vf_status vf_decompose(const char* z, const char* w, int max_degree, char** out, int* ok);

#ifdef __cplusplus
}
#endif

#endif
