/* geno1d C API: a 1-D high-order finite-volume Euler benchmark library.
 *
 * All entry points are thread-compatible: distinct handles may be used from
 * distinct threads; a single handle must not be shared without external
 * synchronization. Functions returning geno1d_status report failure details
 * through geno1d_last_error() (thread-local).
 */
#ifndef GENO1D_H
#define GENO1D_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  GENO1D_OK = 0,
  GENO1D_ERR_USAGE = 1,         /* bad arguments or unknown names */
  GENO1D_ERR_ADMISSIBILITY = 2, /* non-physical state encountered */
  GENO1D_ERR_RUNTIME = 3,
  GENO1D_ERR_IO = 4
} geno1d_status;

const char* geno1d_build_id(void);

/* Message of the most recent failure on this thread ("" if none). */
const char* geno1d_last_error(void);

/* Benchmark case registry. */
int geno1d_case_count(void);
const char* geno1d_case_name(int index); /* NULL when out of range */

/* Reconstruction scheme registry. */
int geno1d_scheme_count(void);
const char* geno1d_scheme_id(int index);

/* ------------------------------------------------------------------ */
/* Single benchmark run                                                */
/* ------------------------------------------------------------------ */

typedef struct geno1d_run geno1d_run;
typedef struct geno1d_reference geno1d_reference;

/* NULL on failure (see geno1d_last_error). */
geno1d_run* geno1d_run_create(const char* case_name, const char* scheme,
                              int cells);
void geno1d_run_destroy(geno1d_run* run);

geno1d_status geno1d_run_set_cfl(geno1d_run* run, double cfl);
/* "characteristic" or "componentwise" */
geno1d_status geno1d_run_set_projection(geno1d_run* run, const char* projection);
geno1d_status geno1d_run_set_t_end(geno1d_run* run, double t_end);
geno1d_status geno1d_run_set_teno_ct(geno1d_run* run, double c_t);
geno1d_status geno1d_run_set_geno_c(geno1d_run* run, double path_steepness);

/* Compare against a GENO6 fine-mesh reference computed inside the run. */
geno1d_status geno1d_run_set_reference_cells(geno1d_run* run, int n_ref);
/* Or reuse a precomputed reference; it must outlive the run handle. */
geno1d_status geno1d_run_set_reference(geno1d_run* run,
                                       const geno1d_reference* ref);

geno1d_status geno1d_run_execute(geno1d_run* run);

typedef struct {
  long steps;
  long guard_activations;
  double min_rho;
  double max_rho;
  double min_p;
  double max_p;
  double min_chi;
  int saw_nan;
  double wall_seconds;
} geno1d_diagnostics;

geno1d_status geno1d_run_diagnostics(const geno1d_run* run,
                                     geno1d_diagnostics* out);

/* has_norms is set to 0 when the case offers no exact/reference solution. */
geno1d_status geno1d_run_error_norms(const geno1d_run* run, int* has_norms,
                                     double* l1, double* l2, double* linf);

int geno1d_run_cells(const geno1d_run* run);
/* Arrays of length geno1d_run_cells(); any pointer may be NULL to skip. */
geno1d_status geno1d_run_solution(const geno1d_run* run, double* x, double* rho,
                                  double* u, double* p);

geno1d_status geno1d_run_write_solution_csv(const geno1d_run* run,
                                            const char* path);
geno1d_status geno1d_run_write_diagnostics_csv(const geno1d_run* run,
                                               const char* path);

/* Documented stability note for this case/scheme pair (e.g. the Titarev-Toro
 * TENO cut threshold), or NULL when there is none. Informational only; use
 * geno1d_run_set_teno_ct to apply it. */
const char* geno1d_run_stability_note(const geno1d_run* run);

/* ------------------------------------------------------------------ */
/* Fine-mesh reference                                                 */
/* ------------------------------------------------------------------ */

geno1d_reference* geno1d_reference_create(const char* case_name, int n_ref);
geno1d_status geno1d_reference_execute(geno1d_reference* ref);
void geno1d_reference_destroy(geno1d_reference* ref);

/* ------------------------------------------------------------------ */
/* Convergence study                                                   */
/* ------------------------------------------------------------------ */

typedef struct geno1d_convergence geno1d_convergence;

/* schemes_csv: comma-separated scheme ids; meshes must strictly double. */
geno1d_convergence* geno1d_convergence_create(const char* case_name,
                                              const char* schemes_csv,
                                              const int* meshes, int n_meshes);
geno1d_status geno1d_convergence_set_cfl(geno1d_convergence* c, double cfl);
geno1d_status geno1d_convergence_execute(geno1d_convergence* c);
int geno1d_convergence_rows(const geno1d_convergence* c);
geno1d_status geno1d_convergence_row(const geno1d_convergence* c, int index,
                                     char* scheme_buf, size_t scheme_buf_len,
                                     int* cells, double* l1, double* l2,
                                     double* linf, double* order_l1);
geno1d_status geno1d_convergence_write_csv(const geno1d_convergence* c,
                                           const char* path);
void geno1d_convergence_destroy(geno1d_convergence* c);

/* ------------------------------------------------------------------ */
/* Smoothness-scenario sweep                                           */
/* ------------------------------------------------------------------ */

typedef struct geno1d_chi_sweep geno1d_chi_sweep;

/* scenario: "tau_min" or "tau_max"; multiplicity: "two_large" (default,
 * indicators (1, phi, phi)) or "one_large" ((1, 1, phi)); pass NULL for the
 * default. */
geno1d_chi_sweep* geno1d_chi_sweep_create(const char* scenario,
                                          const char* multiplicity,
                                          double phi_min, double phi_max,
                                          int points);
geno1d_status geno1d_chi_sweep_execute(geno1d_chi_sweep* s);
int geno1d_chi_sweep_rows(const geno1d_chi_sweep* s);
geno1d_status geno1d_chi_sweep_row(const geno1d_chi_sweep* s, int index,
                                   double* phi, double* chi_geno,
                                   double* chi_weno_z, double* chi_teno);
geno1d_status geno1d_chi_sweep_write_csv(const geno1d_chi_sweep* s,
                                         const char* path);
void geno1d_chi_sweep_destroy(geno1d_chi_sweep* s);

/* ------------------------------------------------------------------ */
/* Exact Riemann oracle                                                */
/* ------------------------------------------------------------------ */

geno1d_status geno1d_exact_riemann(double rho_l, double u_l, double p_l,
                                   double rho_r, double u_r, double p_r,
                                   double gamma, double x_over_t, double* rho,
                                   double* u, double* p);

#ifdef __cplusplus
}
#endif

#endif /* GENO1D_H */
