/* Exercises the shared-library surface the way an embedding application
 * would: C types only, status codes, opaque handles. */
#include <assert.h>
#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "geno1d/geno1d.h"

static int failures = 0;

#define CHECK(cond)                                                      \
  do {                                                                   \
    if (!(cond)) {                                                       \
      fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond);    \
      ++failures;                                                        \
    }                                                                    \
  } while (0)

static void test_registry(void) {
  CHECK(geno1d_case_count() == 6);
  int found_sod = 0;
  for (int i = 0; i < geno1d_case_count(); ++i) {
    const char* name = geno1d_case_name(i);
    CHECK(name != NULL);
    if (name && strcmp(name, "sod") == 0) found_sod = 1;
  }
  CHECK(found_sod);
  CHECK(geno1d_case_name(99) == NULL);

  CHECK(geno1d_scheme_count() == 8);
  CHECK(strcmp(geno1d_scheme_id(0), "geno5") == 0);
  CHECK(geno1d_scheme_id(-1) == NULL);

  CHECK(geno1d_build_id() != NULL);
}

static void test_errors(void) {
  geno1d_run* bad = geno1d_run_create("nope", "geno5", 100);
  CHECK(bad == NULL);
  CHECK(strstr(geno1d_last_error(), "sine_advection") != NULL);

  geno1d_run* bad2 = geno1d_run_create("sod", "weno11", 100);
  CHECK(bad2 == NULL);

  geno1d_run* run = geno1d_run_create("sod", "geno5", 100);
  CHECK(run != NULL);
  CHECK(geno1d_run_set_cfl(run, 2.0) == GENO1D_ERR_USAGE);
  CHECK(geno1d_run_set_projection(run, "sideways") == GENO1D_ERR_USAGE);
  CHECK(geno1d_run_set_teno_ct(run, -1.0) == GENO1D_ERR_USAGE);
  CHECK(geno1d_run_set_geno_c(run, 50.0) == GENO1D_ERR_USAGE);
  geno1d_diagnostics diag;
  CHECK(geno1d_run_diagnostics(run, &diag) == GENO1D_ERR_USAGE); /* not run */
  geno1d_run_destroy(run);
}

static void test_sod_run(void) {
  geno1d_run* run = geno1d_run_create("sod", "geno5", 100);
  CHECK(run != NULL);
  CHECK(geno1d_run_set_cfl(run, 0.5) == GENO1D_OK);
  CHECK(geno1d_run_set_projection(run, "characteristic") == GENO1D_OK);
  CHECK(geno1d_run_stability_note(run) == NULL);
  CHECK(geno1d_run_execute(run) == GENO1D_OK);

  geno1d_diagnostics diag;
  CHECK(geno1d_run_diagnostics(run, &diag) == GENO1D_OK);
  CHECK(diag.steps > 0);
  CHECK(diag.min_rho > 0.0);
  CHECK(diag.min_p > 0.0);
  CHECK(diag.saw_nan == 0);

  int has = 0;
  double l1 = 0, l2 = 0, linf = 0;
  CHECK(geno1d_run_error_norms(run, &has, &l1, &l2, &linf) == GENO1D_OK);
  CHECK(has == 1);
  CHECK(l1 > 0.0 && l1 < 0.02);
  CHECK(linf >= l2 / 2.0);

  const int n = geno1d_run_cells(run);
  CHECK(n == 100);
  double* x = (double*)malloc(n * sizeof(double));
  double* rho = (double*)malloc(n * sizeof(double));
  CHECK(geno1d_run_solution(run, x, rho, NULL, NULL) == GENO1D_OK);
  CHECK(fabs(x[0] - 0.005) < 1e-12);
  CHECK(rho[0] > 0.99 && rho[0] < 1.01);
  CHECK(rho[n - 1] > 0.12 && rho[n - 1] < 0.13);
  free(x);
  free(rho);

  CHECK(geno1d_run_write_solution_csv(run, "/tmp/geno1d_capi_sol.csv") ==
        GENO1D_OK);
  CHECK(geno1d_run_write_diagnostics_csv(run, "/tmp/geno1d_capi_diag.csv") ==
        GENO1D_OK);
  remove("/tmp/geno1d_capi_sol.csv");
  remove("/tmp/geno1d_capi_diag.csv");
  geno1d_run_destroy(run);
}

static void test_stability_note(void) {
  geno1d_run* run = geno1d_run_create("titarev_toro", "teno6", 100);
  CHECK(run != NULL);
  const char* note = geno1d_run_stability_note(run);
  CHECK(note != NULL);
  CHECK(strstr(note, "titarev_toro") != NULL);
  geno1d_run_destroy(run);

  geno1d_run* quiet = geno1d_run_create("titarev_toro", "geno6", 100);
  CHECK(geno1d_run_stability_note(quiet) == NULL);
  geno1d_run_destroy(quiet);
}

static void test_reference_sharing(void) {
  geno1d_reference* ref = geno1d_reference_create("sod", 200);
  CHECK(ref != NULL);
  CHECK(geno1d_reference_execute(ref) == GENO1D_OK);

  geno1d_run* run = geno1d_run_create("sod", "weno_js5", 50);
  CHECK(geno1d_run_set_reference(run, ref) == GENO1D_OK);
  CHECK(geno1d_run_execute(run) == GENO1D_OK);
  int has = 0;
  double l1 = 0;
  CHECK(geno1d_run_error_norms(run, &has, &l1, NULL, NULL) == GENO1D_OK);
  CHECK(has == 1);
  CHECK(l1 > 0.0 && l1 < 0.05);
  geno1d_run_destroy(run);

  geno1d_run* mismatch = geno1d_run_create("sine_advection", "geno5", 20);
  CHECK(geno1d_run_set_reference(mismatch, ref) == GENO1D_ERR_USAGE);
  geno1d_run_destroy(mismatch);
  geno1d_reference_destroy(ref);
}

static void test_convergence(void) {
  const int meshes[2] = {10, 20};
  geno1d_convergence* c =
      geno1d_convergence_create("sine_advection", "linear5", meshes, 2);
  CHECK(c != NULL);
  CHECK(geno1d_convergence_set_cfl(c, 0.4) == GENO1D_OK);
  CHECK(geno1d_convergence_execute(c) == GENO1D_OK);
  CHECK(geno1d_convergence_rows(c) == 2);
  char scheme[16];
  int cells;
  double l1, l2, linf, order;
  CHECK(geno1d_convergence_row(c, 1, scheme, sizeof scheme, &cells, &l1, &l2,
                               &linf, &order) == GENO1D_OK);
  CHECK(strcmp(scheme, "linear5") == 0);
  CHECK(cells == 20);
  CHECK(order > 3.0);
  geno1d_convergence_destroy(c);

  geno1d_convergence* bad =
      geno1d_convergence_create("sine_advection", "linear5,bogus", meshes, 2);
  CHECK(bad == NULL);
}

static void test_chi_sweep(void) {
  geno1d_chi_sweep* s = geno1d_chi_sweep_create("tau_max", NULL, 1.0, 1e6, 13);
  CHECK(s != NULL);
  CHECK(geno1d_chi_sweep_execute(s) == GENO1D_OK);
  CHECK(geno1d_chi_sweep_rows(s) == 13);
  double phi, cg, cz, ct;
  CHECK(geno1d_chi_sweep_row(s, 12, &phi, &cg, &cz, &ct) == GENO1D_OK);
  CHECK(fabs(phi - 1e6) < 1.0);
  CHECK(cg < 0.01);
  CHECK(ct == 0.0);
  geno1d_chi_sweep_destroy(s);

  CHECK(geno1d_chi_sweep_create("sideways", NULL, 1.0, 1e6, 13) == NULL);
}

static void test_exact_riemann(void) {
  double rho, u, p;
  CHECK(geno1d_exact_riemann(1.0, 0.0, 1.0, 0.125, 0.0, 0.1, 1.4, 0.0, &rho, &u,
                             &p) == GENO1D_OK);
  CHECK(fabs(p - 0.30313) < 1e-4);
  CHECK(fabs(u - 0.92745) < 1e-4);
  CHECK(fabs(rho - 0.42632) < 1e-4);

  CHECK(geno1d_exact_riemann(1.0, -5.0, 0.1, 1.0, 5.0, 0.1, 1.4, 0.0, &rho, &u,
                             &p) != GENO1D_OK);
}

int main(void) {
  test_registry();
  test_errors();
  test_sod_run();
  test_stability_note();
  test_reference_sharing();
  test_convergence();
  test_chi_sweep();
  test_exact_riemann();
  if (failures == 0) {
    printf("capi: all checks passed\n");
    return 0;
  }
  fprintf(stderr, "capi: %d failures\n", failures);
  return 1;
}
