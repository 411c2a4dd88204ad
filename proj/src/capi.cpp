#include "geno1d/geno1d.h"

#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "geno1d/bench.hpp"
#include "geno1d/exact_riemann.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <class Fn>
geno1d_status wrap(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return GENO1D_OK;
  } catch (const geno1d::UsageError& e) {
    set_error(e.what());
    return GENO1D_ERR_USAGE;
  } catch (const geno1d::AdmissibilityError& e) {
    set_error(e.what());
    return GENO1D_ERR_ADMISSIBILITY;
  } catch (const std::exception& e) {
    set_error(e.what());
    return GENO1D_ERR_RUNTIME;
  } catch (...) {
    set_error("unknown error");
    return GENO1D_ERR_RUNTIME;
  }
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

struct geno1d_run {
  geno1d::CaseConfig case_config;
  geno1d::RunOptions options;
  const geno1d_reference* borrowed_reference = nullptr;
  bool executed = false;
  geno1d::RunResult result;
  std::string note;
};

struct geno1d_reference {
  geno1d::CaseConfig case_config;
  int n_ref = 0;
  bool executed = false;
  geno1d::CellField field;
};

struct geno1d_convergence {
  geno1d::CaseConfig case_config;
  std::vector<geno1d::Scheme> schemes;
  std::vector<int> meshes;
  geno1d::RunOptions base;
  bool executed = false;
  geno1d::ConvergenceTable table;
};

struct geno1d_chi_sweep {
  geno1d::SweepScenario scenario = geno1d::SweepScenario::tau_min;
  geno1d::SweepMultiplicity multiplicity = geno1d::SweepMultiplicity::two_large;
  double phi_min = 1.0, phi_max = 1e8;
  int points = 81;
  bool executed = false;
  std::vector<geno1d::ChiReportRow> rows;
};

extern "C" {

const char* geno1d_build_id(void) {
  static const std::string id = geno1d::build_id();
  return id.c_str();
}

const char* geno1d_last_error(void) { return g_last_error.c_str(); }

int geno1d_case_count(void) {
  return static_cast<int>(geno1d::case_registry().size());
}

const char* geno1d_case_name(int index) {
  static thread_local std::string name;
  const auto reg = geno1d::case_registry();
  if (index < 0 || index >= static_cast<int>(reg.size())) return nullptr;
  name = reg[index];
  return name.c_str();
}

int geno1d_scheme_count(void) { return 8; }

const char* geno1d_scheme_id(int index) {
  static const char* ids[] = {"geno5",  "geno6", "weno_js5", "weno_z5",
                              "teno5",  "teno6", "linear5",  "linear6"};
  if (index < 0 || index >= 8) return nullptr;
  return ids[index];
}

geno1d_run* geno1d_run_create(const char* case_name, const char* scheme,
                              int cells) {
  geno1d_run* run = nullptr;
  const geno1d_status st = wrap([&] {
    if (!case_name || !scheme) throw geno1d::UsageError("null argument");
    const auto s = geno1d::scheme_from_name(scheme);
    if (!s) throw geno1d::UsageError(std::string("unknown scheme '") + scheme + "'");
    auto owned = std::make_unique<geno1d_run>();
    owned->case_config = geno1d::make_case(case_name);
    owned->options.scheme = *s;
    owned->options.cells = cells;
    if (owned->case_config.recommended_teno_ct &&
        (*s == geno1d::Scheme::teno5 || *s == geno1d::Scheme::teno6)) {
      owned->note = "case '" + owned->case_config.name +
                    "' documents a TENO cut threshold of " +
                    std::to_string(*owned->case_config.recommended_teno_ct) +
                    " for stability of compact TENO variants";
    }
    run = owned.release();
  });
  (void)st;
  return run;
}

void geno1d_run_destroy(geno1d_run* run) { delete run; }

geno1d_status geno1d_run_set_cfl(geno1d_run* run, double cfl) {
  return wrap([&] {
    if (!run || !(cfl > 0.0) || cfl > 1.0)
      throw geno1d::UsageError("cfl must be in (0, 1]");
    run->options.cfl = cfl;
  });
}

geno1d_status geno1d_run_set_projection(geno1d_run* run, const char* projection) {
  return wrap([&] {
    if (!run || !projection) throw geno1d::UsageError("null argument");
    const std::string p = projection;
    if (p == "characteristic")
      run->options.projection = geno1d::Projection::characteristic;
    else if (p == "componentwise")
      run->options.projection = geno1d::Projection::componentwise;
    else
      throw geno1d::UsageError("projection must be characteristic|componentwise");
  });
}

geno1d_status geno1d_run_set_t_end(geno1d_run* run, double t_end) {
  return wrap([&] {
    if (!run || !(t_end >= 0.0)) throw geno1d::UsageError("t_end must be >= 0");
    run->options.t_end = t_end;
  });
}

geno1d_status geno1d_run_set_teno_ct(geno1d_run* run, double c_t) {
  return wrap([&] {
    if (!run || !(c_t > 0.0) || !(c_t < 1.0))
      throw geno1d::UsageError("teno ct must be in (0, 1)");
    run->options.teno.c_t = c_t;
  });
}

geno1d_status geno1d_run_set_geno_c(geno1d_run* run, double path_steepness) {
  return wrap([&] {
    if (!run || !(path_steepness >= 10.0) || !(path_steepness <= 20.0))
      throw geno1d::UsageError("geno C must be in [10, 20]");
    run->options.geno.C = path_steepness;
  });
}

geno1d_status geno1d_run_set_reference_cells(geno1d_run* run, int n_ref) {
  return wrap([&] {
    if (!run || n_ref < 1) throw geno1d::UsageError("reference cells must be >= 1");
    run->options.reference_cells = n_ref;
    run->borrowed_reference = nullptr;
  });
}

geno1d_status geno1d_run_set_reference(geno1d_run* run,
                                       const geno1d_reference* ref) {
  return wrap([&] {
    if (!run || !ref) throw geno1d::UsageError("null argument");
    if (!ref->executed)
      throw geno1d::UsageError("reference has not been executed");
    if (ref->case_config.name != run->case_config.name)
      throw geno1d::UsageError("reference case does not match run case");
    run->borrowed_reference = ref;
    run->options.reference_cells = 0;
  });
}

geno1d_status geno1d_run_execute(geno1d_run* run) {
  return wrap([&] {
    if (!run) throw geno1d::UsageError("null run");
    run->result = geno1d::run_case(run->case_config, run->options);
    if (run->borrowed_reference) {
      const geno1d::CellField coarse = geno1d::restrict_field(
          run->borrowed_reference->field, run->result.field.n);
      run->result.error = geno1d::error_norms(run->result.field,
                                              geno1d::density_of(coarse));
      run->result.error->scheme = geno1d::scheme_name(run->options.scheme);
    }
    run->executed = true;
  });
}

geno1d_status geno1d_run_diagnostics(const geno1d_run* run,
                                     geno1d_diagnostics* out) {
  return wrap([&] {
    if (!run || !out) throw geno1d::UsageError("null argument");
    if (!run->executed) throw geno1d::UsageError("run has not been executed");
    const geno1d::RunStats& s = run->result.stats;
    out->steps = s.steps;
    out->guard_activations = s.guard_activations;
    out->min_rho = s.min_rho;
    out->max_rho = s.max_rho;
    out->min_p = s.min_p;
    out->max_p = s.max_p;
    out->min_chi = s.min_chi;
    out->saw_nan = s.saw_nan ? 1 : 0;
    out->wall_seconds = s.wall_seconds;
  });
}

geno1d_status geno1d_run_error_norms(const geno1d_run* run, int* has_norms,
                                     double* l1, double* l2, double* linf) {
  return wrap([&] {
    if (!run || !has_norms) throw geno1d::UsageError("null argument");
    if (!run->executed) throw geno1d::UsageError("run has not been executed");
    if (!run->result.error) {
      *has_norms = 0;
      return;
    }
    *has_norms = 1;
    if (l1) *l1 = run->result.error->l1;
    if (l2) *l2 = run->result.error->l2;
    if (linf) *linf = run->result.error->linf;
  });
}

int geno1d_run_cells(const geno1d_run* run) {
  return run && run->executed ? run->result.field.n : 0;
}

geno1d_status geno1d_run_solution(const geno1d_run* run, double* x, double* rho,
                                  double* u, double* p) {
  return wrap([&] {
    if (!run) throw geno1d::UsageError("null run");
    if (!run->executed) throw geno1d::UsageError("run has not been executed");
    const geno1d::GasModel gas{run->case_config.gamma};
    for (int j = 0; j < run->result.field.n; ++j) {
      const geno1d::PrimitiveState s =
          geno1d::cons_to_prim(run->result.field.cell(j), gas);
      if (x) x[j] = run->result.field.center(j);
      if (rho) rho[j] = s.rho;
      if (u) u[j] = s.u;
      if (p) p[j] = s.p;
    }
  });
}

geno1d_status geno1d_run_write_solution_csv(const geno1d_run* run,
                                            const char* path) {
  const geno1d_status st = wrap([&] {
    if (!run || !path) throw geno1d::UsageError("null argument");
    if (!run->executed) throw geno1d::UsageError("run has not been executed");
    geno1d::write_solution_csv(run->result, path);
  });
  return st == GENO1D_ERR_RUNTIME ? GENO1D_ERR_IO : st;
}

geno1d_status geno1d_run_write_diagnostics_csv(const geno1d_run* run,
                                               const char* path) {
  const geno1d_status st = wrap([&] {
    if (!run || !path) throw geno1d::UsageError("null argument");
    if (!run->executed) throw geno1d::UsageError("run has not been executed");
    geno1d::write_diagnostics_csv(run->result, path);
  });
  return st == GENO1D_ERR_RUNTIME ? GENO1D_ERR_IO : st;
}

const char* geno1d_run_stability_note(const geno1d_run* run) {
  if (!run || run->note.empty()) return nullptr;
  return run->note.c_str();
}

geno1d_reference* geno1d_reference_create(const char* case_name, int n_ref) {
  geno1d_reference* ref = nullptr;
  wrap([&] {
    if (!case_name || n_ref < 8) throw geno1d::UsageError("bad reference request");
    auto owned = std::make_unique<geno1d_reference>();
    owned->case_config = geno1d::make_case(case_name);
    owned->n_ref = n_ref;
    ref = owned.release();
  });
  return ref;
}

geno1d_status geno1d_reference_execute(geno1d_reference* ref) {
  return wrap([&] {
    if (!ref) throw geno1d::UsageError("null reference");
    const geno1d::GasModel gas{ref->case_config.gamma};
    ref->field = geno1d::fine_mesh_reference(ref->case_config, ref->n_ref, gas);
    ref->executed = true;
  });
}

void geno1d_reference_destroy(geno1d_reference* ref) { delete ref; }

geno1d_convergence* geno1d_convergence_create(const char* case_name,
                                              const char* schemes_csv,
                                              const int* meshes, int n_meshes) {
  geno1d_convergence* c = nullptr;
  wrap([&] {
    if (!case_name || !schemes_csv || !meshes || n_meshes < 1)
      throw geno1d::UsageError("bad convergence request");
    auto owned = std::make_unique<geno1d_convergence>();
    owned->case_config = geno1d::make_case(case_name);
    for (const std::string& name : split_csv(schemes_csv)) {
      const auto s = geno1d::scheme_from_name(name);
      if (!s) throw geno1d::UsageError("unknown scheme '" + name + "'");
      owned->schemes.push_back(*s);
    }
    if (owned->schemes.empty()) throw geno1d::UsageError("no schemes given");
    owned->meshes.assign(meshes, meshes + n_meshes);
    c = owned.release();
  });
  return c;
}

geno1d_status geno1d_convergence_set_cfl(geno1d_convergence* c, double cfl) {
  return wrap([&] {
    if (!c || !(cfl > 0.0) || cfl > 1.0)
      throw geno1d::UsageError("cfl must be in (0, 1]");
    c->base.cfl = cfl;
  });
}

geno1d_status geno1d_convergence_execute(geno1d_convergence* c) {
  return wrap([&] {
    if (!c) throw geno1d::UsageError("null handle");
    c->table = geno1d::convergence_study(c->case_config, c->schemes, c->meshes,
                                         c->base);
    c->executed = true;
  });
}

int geno1d_convergence_rows(const geno1d_convergence* c) {
  return c && c->executed ? static_cast<int>(c->table.rows.size()) : 0;
}

geno1d_status geno1d_convergence_row(const geno1d_convergence* c, int index,
                                     char* scheme_buf, size_t scheme_buf_len,
                                     int* cells, double* l1, double* l2,
                                     double* linf, double* order_l1) {
  return wrap([&] {
    if (!c || !c->executed) throw geno1d::UsageError("not executed");
    if (index < 0 || index >= static_cast<int>(c->table.rows.size()))
      throw geno1d::UsageError("row index out of range");
    const geno1d::ConvergenceRow& r = c->table.rows[index];
    if (scheme_buf && scheme_buf_len > 0) {
      std::strncpy(scheme_buf, r.scheme.c_str(), scheme_buf_len - 1);
      scheme_buf[scheme_buf_len - 1] = '\0';
    }
    if (cells) *cells = r.n;
    if (l1) *l1 = r.l1;
    if (l2) *l2 = r.l2;
    if (linf) *linf = r.linf;
    if (order_l1) *order_l1 = r.order_l1;
  });
}

geno1d_status geno1d_convergence_write_csv(const geno1d_convergence* c,
                                           const char* path) {
  const geno1d_status st = wrap([&] {
    if (!c || !path || !c->executed) throw geno1d::UsageError("not executed");
    geno1d::write_convergence_csv(c->table, c->case_config, path);
  });
  return st == GENO1D_ERR_RUNTIME ? GENO1D_ERR_IO : st;
}

void geno1d_convergence_destroy(geno1d_convergence* c) { delete c; }

geno1d_chi_sweep* geno1d_chi_sweep_create(const char* scenario,
                                          const char* multiplicity,
                                          double phi_min, double phi_max,
                                          int points) {
  geno1d_chi_sweep* s = nullptr;
  wrap([&] {
    if (!scenario) throw geno1d::UsageError("null scenario");
    auto owned = std::make_unique<geno1d_chi_sweep>();
    const std::string sc = scenario;
    if (sc == "tau_min")
      owned->scenario = geno1d::SweepScenario::tau_min;
    else if (sc == "tau_max")
      owned->scenario = geno1d::SweepScenario::tau_max;
    else
      throw geno1d::UsageError("scenario must be tau_min|tau_max");
    if (multiplicity) {
      const std::string m = multiplicity;
      if (m == "two_large")
        owned->multiplicity = geno1d::SweepMultiplicity::two_large;
      else if (m == "one_large")
        owned->multiplicity = geno1d::SweepMultiplicity::one_large;
      else
        throw geno1d::UsageError("multiplicity must be two_large|one_large");
    }
    owned->phi_min = phi_min;
    owned->phi_max = phi_max;
    owned->points = points;
    s = owned.release();
  });
  return s;
}

geno1d_status geno1d_chi_sweep_execute(geno1d_chi_sweep* s) {
  return wrap([&] {
    if (!s) throw geno1d::UsageError("null handle");
    s->rows = geno1d::chi_report(s->scenario, s->phi_min, s->phi_max, s->points,
                                 s->multiplicity);
    s->executed = true;
  });
}

int geno1d_chi_sweep_rows(const geno1d_chi_sweep* s) {
  return s && s->executed ? static_cast<int>(s->rows.size()) : 0;
}

geno1d_status geno1d_chi_sweep_row(const geno1d_chi_sweep* s, int index,
                                   double* phi, double* chi_geno,
                                   double* chi_weno_z, double* chi_teno) {
  return wrap([&] {
    if (!s || !s->executed) throw geno1d::UsageError("not executed");
    if (index < 0 || index >= static_cast<int>(s->rows.size()))
      throw geno1d::UsageError("row index out of range");
    const geno1d::ChiReportRow& r = s->rows[index];
    if (phi) *phi = r.phi;
    if (chi_geno) *chi_geno = r.geno;
    if (chi_weno_z) *chi_weno_z = r.weno_z;
    if (chi_teno) *chi_teno = r.teno;
  });
}

geno1d_status geno1d_chi_sweep_write_csv(const geno1d_chi_sweep* s,
                                         const char* path) {
  const geno1d_status st = wrap([&] {
    if (!s || !path || !s->executed) throw geno1d::UsageError("not executed");
    geno1d::write_chi_csv(s->rows, s->scenario, path);
  });
  return st == GENO1D_ERR_RUNTIME ? GENO1D_ERR_IO : st;
}

void geno1d_chi_sweep_destroy(geno1d_chi_sweep* s) { delete s; }

geno1d_status geno1d_exact_riemann(double rho_l, double u_l, double p_l,
                                   double rho_r, double u_r, double p_r,
                                   double gamma, double x_over_t, double* rho,
                                   double* u, double* p) {
  return wrap([&] {
    const geno1d::PrimitiveState s = geno1d::exact_riemann(
        {rho_l, u_l, p_l}, {rho_r, u_r, p_r}, geno1d::GasModel{gamma}, x_over_t);
    if (rho) *rho = s.rho;
    if (u) *u = s.u;
    if (p) *p = s.p;
  });
}

}  // extern "C"
