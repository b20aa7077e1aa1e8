/*
 * boolfour C API: spectral and information-decomposition analysis of small
 * Boolean gates behind opaque handles and error codes.
 *
 * Conventions:
 *   - Every function that can fail returns bf_status; BF_OK is 0. On
 *     failure, bf_last_error() returns a thread-local message describing
 *     the most recent error on the calling thread.
 *   - Measures are passed as a single double: BF_UNIFORM selects the
 *     uniform measure, a value in (0, 1) selects the p-biased product
 *     measure P[X_i = +1] = p.
 *   - Strings returned through char** out parameters are heap-allocated;
 *     release them with bf_string_free().
 *   - Gate specs: a named gate ("XOR", "MAJ3", ...), a bare output
 *     bit-string ("0110"), or "arity:bits" ("2:0001"); bit 0 encodes the
 *     output +1 and bit 1 encodes -1, indexed by input assignment.
 */

#ifndef BOOLFOUR_H
#define BOOLFOUR_H

#include <stddef.h>

#if defined(_WIN32)
#define BF_API __declspec(dllexport)
#elif defined(__GNUC__)
#define BF_API __attribute__((visibility("default")))
#else
#define BF_API
#endif

#define BF_UNIFORM (-1.0)

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bf_status {
  BF_OK = 0,
  BF_ERR_INVALID_ARGUMENT = 1,
  BF_ERR_PARSE = 2,
  BF_ERR_DOMAIN = 3, /* operation undefined for this input */
  BF_ERR_INTERNAL = 4
} bf_status;

typedef struct bf_gate bf_gate;
typedef struct bf_spectrum bf_spectrum;

BF_API const char* bf_version(void);
BF_API const char* bf_status_name(bf_status status);
/* Thread-local message for the last failing call; never NULL. */
BF_API const char* bf_last_error(void);
BF_API void bf_string_free(char* s);

/* ---- gates ---- */
BF_API bf_status bf_gate_parse(const char* spec, bf_gate** out);
BF_API void bf_gate_free(bf_gate* gate);
BF_API int bf_gate_arity(const bf_gate* gate);
/* "arity:bits" canonical form. */
BF_API bf_status bf_gate_spec(const bf_gate* gate, char** out);
/* Gate value at an input assignment, +1 or -1. */
BF_API bf_status bf_gate_value(const bf_gate* gate, int point, int* out);
BF_API bf_status bf_gate_sensitivity(const bf_gate* gate, int point,
                                     int* out);
/* monotone/antitone/unate as 0/1 flags; signs receives the unate
 * orientation per input (length >= arity) when unate, zeros otherwise.
 * Any output pointer may be NULL. */
BF_API bf_status bf_gate_classify(const bf_gate* gate, int* monotone,
                                  int* antitone, int* unate, int* signs);
BF_API bf_status bf_gate_expectation(const bf_gate* gate, double p,
                                     double* out);

/* ---- spectra ---- */
BF_API bf_status bf_transform(const bf_gate* gate, double p,
                              bf_spectrum** out);
BF_API void bf_spectrum_free(bf_spectrum* sp);
BF_API bf_status bf_spectrum_coefficient(const bf_spectrum* sp,
                                         unsigned subset_mask, double* out);
BF_API bf_status bf_spectrum_influence(const bf_spectrum* sp, int variable,
                                       double* out);
BF_API bf_status bf_spectrum_total_influence(const bf_spectrum* sp,
                                             double* out);
BF_API bf_status bf_spectrum_variance(const bf_spectrum* sp, double* out);
/* Uniform-kind spectra only. */
BF_API bf_status bf_spectrum_stability(const bf_spectrum* sp, double rho,
                                       double* out);
BF_API bf_status bf_spectrum_noise_sensitivity(const bf_spectrum* sp,
                                               double delta, double* out);

/* ---- decompositions ---- */
/* out receives SI, UI_X, UI_Y, CI (imin measure). Arity-2 gates only. */
BF_API bf_status bf_pid_bivariate(const bf_gate* gate, double p,
                                  double out_terms[4]);

/* ---- reports (JSON / CSV strings) ---- */
BF_API bf_status bf_analyze_json(const bf_gate* gate, double p, double tol,
                                 char** out_json);
/* p_grid may be NULL when p_count is 0 (uniform-only run). all_passed may
 * be NULL. */
BF_API bf_status bf_verify_json(int arity, const double* p_grid,
                                size_t p_count, double tol, char** out_json,
                                int* all_passed);
BF_API bf_status bf_verify_csv(int arity, const double* p_grid,
                               size_t p_count, double tol, char** out_csv,
                               int* all_passed);
BF_API bf_status bf_conjecture_json(double epsilon, char** out_json,
                                    int* collision_free);
/* gate_spec may be NULL to sweep every gate of the given arity. */
BF_API bf_status bf_sweep_csv(const char* gate_spec, int arity,
                              const double* p_grid, size_t p_count,
                              double tol, char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* BOOLFOUR_H */
