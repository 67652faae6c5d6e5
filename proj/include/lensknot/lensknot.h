/*
 * lensknot C API.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function. Functions return lk_status; on failure the
 * out-parameters are left untouched and lk_last_error() describes the problem
 * for the calling thread. Strings returned through char** are heap-allocated
 * and released with lk_string_free.
 */
#ifndef LENSKNOT_H
#define LENSKNOT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(LENSKNOT_BUILDING)
#define LK_API __attribute__((visibility("default")))
#else
#define LK_API
#endif

typedef enum lk_status {
  LK_OK = 0,
  LK_ERR_INVALID_ARGUMENT = 1,
  LK_ERR_OUT_OF_RANGE = 2,
  LK_ERR_DIVISION_BY_ZERO = 3,
  LK_ERR_NON_EXACT = 4,
  LK_ERR_SPLIT_CLOSURE = 5,
  LK_ERR_PARSE = 6,
  LK_ERR_IO = 7,
  LK_ERR_INTERNAL = 8
} lk_status;

typedef enum lk_twist_convention {
  LK_TWIST_STANDARD = 0, /* append -q full twists */
  LK_TWIST_MIRRORED = 1  /* append +q full twists */
} lk_twist_convention;

typedef enum lk_branch {
  LK_BRANCH_UNIT = 0,
  LK_BRANCH_QBAR = 1,
  LK_BRANCH_BOTH = 2,
  LK_BRANCH_NEITHER = 3
} lk_branch;

typedef enum lk_conclusion {
  LK_CONCLUSION_UNIT_SQUARE = 0, /* n^2 = 1 mod p */
  LK_CONCLUSION_QBAR_SQUARE = 1, /* n^2 = qbar^2 mod p */
  LK_CONCLUSION_MIXED = 2,
  LK_CONCLUSION_EXCLUDED = 3
} lk_conclusion;

typedef struct lk_poly lk_poly;
typedef struct lk_residue lk_residue;
typedef struct lk_braid lk_braid;
typedef struct lk_report lk_report;
typedef struct lk_lemma4 lk_lemma4;
typedef struct lk_cache lk_cache;
typedef struct lk_verify_result lk_verify_result;

/* ---- errors and strings ------------------------------------------------ */

LK_API const char* lk_last_error(void);
LK_API const char* lk_status_name(lk_status status);
LK_API void lk_string_free(char* s);
LK_API const char* lk_version(void);

/* ---- Laurent polynomials on the t^{1/2} grid --------------------------- */

LK_API lk_status lk_poly_parse(const char* text, lk_poly** out);
/* coeffs[i] * t^{u_exponents[i] / 2} summed over i. */
LK_API lk_status lk_poly_from_terms(const int* u_exponents, const int64_t* coeffs, size_t count,
                                    lk_poly** out);
LK_API lk_status lk_poly_clone(const lk_poly* p, lk_poly** out);
LK_API void lk_poly_free(lk_poly* p);

LK_API lk_status lk_poly_to_string(const lk_poly* p, char** out);
LK_API size_t lk_poly_term_count(const lk_poly* p);
/* Terms in ascending exponent order; coefficient as a decimal string. */
LK_API lk_status lk_poly_term(const lk_poly* p, size_t index, int* u_exponent, char** coeff);
LK_API int lk_poly_equal(const lk_poly* a, const lk_poly* b);
LK_API int lk_poly_equal_up_to_units(const lk_poly* a, const lk_poly* b);

LK_API lk_status lk_poly_add(const lk_poly* a, const lk_poly* b, lk_poly** out);
LK_API lk_status lk_poly_mul(const lk_poly* a, const lk_poly* b, lk_poly** out);
/* LK_ERR_DIVISION_BY_ZERO for b = 0, LK_ERR_NON_EXACT if b does not divide a. */
LK_API lk_status lk_poly_div_exact(const lk_poly* a, const lk_poly* b, lk_poly** out);

/* Conway polynomial: coeffs[k] is the coefficient of z^k. */
LK_API lk_status lk_poly_substitute_z(const int64_t* coeffs, size_t count, lk_poly** out);
/* Inverse of substitute_z, rendered as "z^2 + 1". */
LK_API lk_status lk_poly_conway_string(const lk_poly* delta, char** out);
/* Degree of the Conway polynomial (-1 for zero) and its coefficients. */
LK_API lk_status lk_poly_conway_degree(const lk_poly* delta, int* degree);
LK_API lk_status lk_poly_conway_coefficient(const lk_poly* delta, int k, char** coeff);

/* ---- residues modulo (t^{r^s} - 1, r) ---------------------------------- */

LK_API lk_status lk_poly_reduce(const lk_poly* p, int64_t r, int s, lk_residue** out);
LK_API void lk_residue_free(lk_residue* res);
LK_API lk_status lk_residue_to_string(const lk_residue* res, char** out);
LK_API int lk_residue_equal(const lk_residue* a, const lk_residue* b);

/* ---- braids ------------------------------------------------------------ */

/* strands <= 0 means "n=" prefix or max|letter| + 1. */
LK_API lk_status lk_braid_parse(const char* text, int strands, lk_braid** out);
LK_API lk_status lk_braid_from_letters(int strands, const int* letters, size_t count, lk_braid** out);
LK_API void lk_braid_free(lk_braid* b);
LK_API lk_status lk_braid_to_string(const lk_braid* b, char** out);
LK_API int lk_braid_strands(const lk_braid* b);
LK_API size_t lk_braid_length(const lk_braid* b);

LK_API lk_status lk_braid_components(const lk_braid* b, int* out);
/* Size of the Seifert matrix; entries row-major into a caller buffer of at
 * least size*size ints. Pass entries = NULL to query the size only. */
LK_API lk_status lk_braid_seifert(const lk_braid* b, int* entries, size_t capacity, size_t* size);
LK_API lk_status lk_braid_alexander(const lk_braid* b, lk_poly** out);
LK_API lk_status lk_braid_alexander_cached(const lk_braid* b, lk_cache* cache, lk_poly** out);
LK_API lk_status lk_braid_burau(const lk_braid* b, lk_poly** out);
LK_API lk_status lk_braid_crossing_change(const lk_braid* b, size_t pos, lk_braid** out);
LK_API lk_status lk_braid_delete_letter(const lk_braid* b, size_t pos, lk_braid** out);
LK_API lk_status lk_braid_full_twist(int strands, int k, lk_braid** out);
LK_API lk_status lk_braid_periodic_closure(const lk_braid* pattern, int64_t r, int s, int q,
                                           lk_twist_convention convention, lk_braid** out);

/* ---- torus knots ------------------------------------------------------- */

LK_API lk_status lk_torus_braid(int64_t a, int64_t b, lk_braid** out);
LK_API lk_status lk_torus_alexander(int64_t a, int64_t b, lk_poly** out);
LK_API lk_status lk_lift_generator(int64_t p, int64_t q, int64_t n, int64_t* a, int64_t* b);

/* ---- lens spaces ------------------------------------------------------- */

LK_API lk_status lk_mod_inverse(int64_t a, int64_t p, int64_t* out);
LK_API lk_status lk_lens_qbar(int64_t p, int64_t q, int64_t* qbar);
LK_API lk_status lk_linking_form(int64_t p, int64_t q, int64_t a, int64_t b, int64_t* num, int64_t* den);
LK_API lk_status lk_lens_homeomorphic(int64_t p, int64_t q, int64_t p2, int64_t q2, int* out);
LK_API lk_status lk_lens_homotopy_equivalent(int64_t p, int64_t q, int64_t p2, int64_t q2, int* out);
LK_API lk_status lk_lens_normal_form(int64_t p, int64_t q, int64_t* p_out, int64_t* q_out);
/* Sorted by value. Pass nums = dens = NULL to query the count. */
LK_API lk_status lk_lens_invariant_set(int64_t p, int64_t q, int64_t* nums, int64_t* dens,
                                       size_t capacity, size_t* count);

/* ---- obstruction ------------------------------------------------------- */

LK_API lk_status lk_maximal_prime_powers(int64_t p, int64_t* r, int* s, size_t capacity, size_t* count);
LK_API lk_status lk_theorem1_congruence(int64_t p, int64_t q, int64_t n, int64_t r, int s, int* out);
LK_API lk_status lk_theorem1_predicate(int64_t n, int64_t q, int64_t r, int s, lk_branch* out);
LK_API const char* lk_branch_name(lk_branch branch);
LK_API const char* lk_conclusion_name(lk_conclusion conclusion);

LK_API lk_status lk_obstruction_report(int64_t p, int64_t q, int64_t n, lk_report** out);
LK_API void lk_report_free(lk_report* report);
LK_API size_t lk_report_factor_count(const lk_report* report);
LK_API lk_status lk_report_factor(const lk_report* report, size_t index, int64_t* r, int* s,
                                  int* congruence_holds, lk_branch* branch);
LK_API lk_conclusion lk_report_conclusion(const lk_report* report);
LK_API void lk_report_linking(const lk_report* report, int64_t* num, int64_t* den);
LK_API void lk_report_lift(const lk_report* report, int64_t* a, int64_t* b);
LK_API lk_status lk_report_lift_alexander(const lk_report* report, lk_poly** out);

LK_API lk_status lk_lemma4_check(const lk_braid* pattern, int64_t r, int s, int q, size_t pos,
                                 lk_twist_convention convention, lk_lemma4** out);
LK_API void lk_lemma4_free(lk_lemma4* check);
LK_API int lk_lemma4_holds(const lk_lemma4* check);
/* which = 0 for the original periodic closure, 1 for the changed one. */
LK_API lk_status lk_lemma4_braid(const lk_lemma4* check, int which, lk_braid** out);
LK_API lk_status lk_lemma4_alexander(const lk_lemma4* check, int which, lk_poly** out);
LK_API lk_status lk_lemma4_residue(const lk_lemma4* check, int which, lk_residue** out);

/* ---- cache ------------------------------------------------------------- */

LK_API lk_status lk_cache_new(lk_cache** out);
LK_API void lk_cache_free(lk_cache* cache);
/* A missing file is not an error. */
LK_API lk_status lk_cache_load(lk_cache* cache, const char* path);
LK_API lk_status lk_cache_save(const lk_cache* cache, const char* path);
LK_API size_t lk_cache_size(const lk_cache* cache);

/* ---- calibration and sweeps -------------------------------------------- */

typedef struct lk_verify_options {
  const char* calibration_path; /* NULL skips the calibration corpus */
  int torus_max_product;        /* 0 skips the torus cross-check */
  int64_t theorem1_pmax;        /* < 2 skips the lift congruence sweep */
  size_t lemma4_count;          /* 0 skips the orbit crossing-change suite */
  uint64_t seed;
  unsigned threads;
  lk_cache* cache; /* optional */
} lk_verify_options;

typedef struct lk_verify_summary {
  size_t calibration_entries;
  size_t calibration_failures;
  size_t torus_checked;
  size_t torus_failures;
  size_t theorem1_triples;
  size_t theorem1_factor_checks;
  size_t theorem1_congruences;
  size_t theorem1_violations;
  size_t lemma4_specs;
  size_t lemma4_checks;
  size_t lemma4_failures;
} lk_verify_summary;

LK_API void lk_verify_options_default(lk_verify_options* options);
LK_API lk_status lk_verify_run(const lk_verify_options* options, lk_verify_result** out);
LK_API void lk_verify_result_free(lk_verify_result* result);
LK_API void lk_verify_get_summary(const lk_verify_result* result, lk_verify_summary* summary);
LK_API size_t lk_verify_violation_count(const lk_verify_result* result);
/* One-line description of the index-th violation, in canonical order. */
LK_API lk_status lk_verify_violation(const lk_verify_result* result, size_t index, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LENSKNOT_H */
